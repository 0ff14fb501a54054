#include <doctest.h>

#include "core/claims.hpp"
#include "core/fixtures.hpp"
#include "support.hpp"

using namespace tgs;
using nlohmann::json;

namespace {

std::vector<std::pair<std::string, json>> bundled_set() {
  std::vector<std::pair<std::string, json>> set;
  for (const auto& name : fixture_names())
    set.emplace_back(name, json::parse(fixture_document(name)));
  return set;
}

const json* find_row(const json& report, const std::string& claim,
                     const std::string& fixture) {
  for (const auto& row : report["results"])
    if (row["claim"] == claim && row["fixture"] == fixture) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("suite over the bundled fixtures") {
  const json report = run_suite(bundled_set(), ClaimsOptions{});

  SUBCASE("fixture statuses") {
    std::map<std::string, std::string> status;
    for (const auto& f : report["fixtures"])
      status[f["name"]] = f["status"];
    CHECK(status["M3.json"] == "ok");
    CHECK(status["chain2.json"] == "ok");
    CHECK(status["M3xM3.json"] == "ok");
    CHECK(status["P3.json"] == "invalid-axioms");
    CHECK(status["sec42.json"] == "ok");
    CHECK(status["repetition.json"] == "ok");
    CHECK(status["kernel_n1.json"] == "ok");
  }

  SUBCASE("dimension and min-distance verified on every valid structure") {
    for (const char* name : {"M3.json", "chain2.json", "M3xM3.json"}) {
      const json* dim = find_row(report, "dimension", name);
      REQUIRE(dim != nullptr);
      CHECK((*dim)["status"] == "verified");
      CHECK((*dim)["counterexamples"].empty());
      const json* dist = find_row(report, "min-distance", name);
      REQUIRE(dist != nullptr);
      CHECK((*dist)["status"] == "verified");
    }
  }

  SUBCASE("monotonicity and localized propagation verified on valid fixtures") {
    for (const char* name : {"M3.json", "chain2.json", "M3xM3.json"}) {
      CHECK((*find_row(report, "distance-monotonicity", name))["status"] == "verified");
      CHECK((*find_row(report, "localized-propagation", name))["status"] == "verified");
    }
    for (const char* name : {"sec42.json", "repetition.json", "kernel_n1.json"})
      CHECK((*find_row(report, "localized-propagation", name))["status"] == "verified");
  }

  SUBCASE("P3 rows are hypothesis-not-met") {
    for (const char* claim : {"dimension", "min-distance", "distance-monotonicity",
                              "localized-propagation"}) {
      const json* row = find_row(report, claim, "P3.json");
      REQUIRE(row != nullptr);
      CHECK((*row)["status"] == "hypothesis-not-met");
    }
  }

  SUBCASE("syndrome invariance verified on the syndrome fixtures") {
    CHECK((*find_row(report, "syndrome-invariance", "sec42.json"))["status"] == "verified");
    CHECK((*find_row(report, "syndrome-invariance", "kernel_n1.json"))["status"] ==
          "verified");
    // The generated code has no syndrome machinery.
    CHECK((*find_row(report, "syndrome-invariance", "repetition.json"))["status"] ==
          "not-applicable");
  }

  SUBCASE("interaction-join is falsified on the worked fixture with a replayable doc") {
    const json* row = find_row(report, "interaction-join", "sec42.json");
    REQUIRE(row != nullptr);
    CHECK((*row)["status"] == "falsified");
    REQUIRE(!(*row)["counterexamples"].empty());
    for (const auto& doc : (*row)["counterexamples"]) CHECK(replay_counterexample(doc));
  }

  SUBCASE("reports are deterministic") {
    const json again = run_suite(bundled_set(), ClaimsOptions{});
    CHECK(report == again);
  }
}

TEST_CASE("empty fixture set produces an empty matrix") {
  const json report = run_suite({}, ClaimsOptions{});
  CHECK(report["fixtures"].empty());
  CHECK(report["results"].empty());
}

TEST_CASE("malformed fixtures are listed as load failures") {
  std::vector<std::pair<std::string, json>> set;
  set.emplace_back("broken.json", json{{"elements", {"0", "0"}}});
  set.emplace_back("orphan-code.json",
                   json{{"construction", "kernel"}, {"A", {"1"}}, {"B", {"1"}},
                        {"tgs", "missing.json"}});
  const json report = run_suite(set, ClaimsOptions{});
  for (const auto& f : report["fixtures"]) CHECK(f["status"] == "load-failure");
  CHECK(report["results"].empty());
}

TEST_CASE("replay rejects tampered counterexamples") {
  const json report = run_suite(bundled_set(), ClaimsOptions{});
  const json* row = find_row(report, "interaction-join", "sec42.json");
  REQUIRE(row != nullptr);
  REQUIRE(!(*row)["counterexamples"].empty());
  json doc = (*row)["counterexamples"][0];
  doc["data"]["join"] = doc["data"]["syndrome"];  // no longer a violation
  CHECK(!replay_counterexample(doc));
}

TEST_CASE("bounded random search finds small valid structures deterministically") {
  ClaimsOptions options;
  options.search.m = 2;
  options.search.candidates = 64;
  options.search.seed = 11;
  const json report = run_suite({}, ClaimsOptions{options});
  // With m = 2 the plus table is forced, so hits are common; every found
  // structure enters the matrix as a verified fixture.
  std::size_t found = 0;
  for (const auto& f : report["fixtures"]) {
    CHECK(f["name"].get<std::string>().starts_with("search-"));
    CHECK(f["status"] == "ok");
    ++found;
  }
  CHECK(found > 0);
  const json again = run_suite({}, ClaimsOptions{options});
  CHECK(report == again);
}

TEST_CASE("claims wall time is excluded unless requested") {
  ClaimsOptions options;
  const json report = run_suite(bundled_set(), options);
  for (const auto& row : report["results"]) CHECK(!row.contains("wall_ms"));
  options.timings = true;
  const json timed = run_suite(bundled_set(), options);
  bool any = false;
  for (const auto& row : timed["results"]) any = any || row.contains("wall_ms");
  CHECK(any);
}
