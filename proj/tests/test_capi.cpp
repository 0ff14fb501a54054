// Exercises the extern-C surface end to end: parse/check/ideals/lattice/
// quotient/codes/decode/simulate/claims/fixtures, plus the error paths.
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "tgs/tgs.h"

using nlohmann::json;

namespace {

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { tgs_string_free(value); }
  json parse() const {
    REQUIRE(value != nullptr);
    return json::parse(value);
  }
  std::string str() const { return value ? value : ""; }
};

struct StructureHandle {
  tgs_structure* handle = nullptr;
  ~StructureHandle() { tgs_structure_free(handle); }
};

struct CodeHandle {
  tgs_code* handle = nullptr;
  ~CodeHandle() { tgs_code_free(handle); }
};

std::string fixture_text(const char* name) {
  OwnedString out;
  OwnedString err;
  REQUIRE(tgs_fixture_document(name, &out.value, &err.value) == TGS_OK);
  return out.str();
}

StructureHandle parse_fixture(const char* name) {
  StructureHandle s;
  OwnedString err;
  const std::string text = fixture_text(name);
  REQUIRE(tgs_structure_parse(text.c_str(), &s.handle, &err.value) == TGS_OK);
  return s;
}

CodeHandle build_fixture_code(const tgs_structure* s, const char* spec_name) {
  CodeHandle c;
  OwnedString err;
  const std::string spec = fixture_text(spec_name);
  REQUIRE(tgs_code_build(s, spec.c_str(), nullptr, 0, &c.handle, &err.value) == TGS_OK);
  return c;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(tgs_version()) == "1.0.0");
  CHECK(std::string(tgs_status_name(TGS_OK)) == "ok");
  CHECK(std::string(tgs_status_name(TGS_ERR_BOUNDS)) == "bounds");
  tgs_string_free(nullptr);  // must be a no-op
}

TEST_CASE("parse errors carry messages and status codes") {
  StructureHandle s;
  OwnedString err;
  CHECK(tgs_structure_parse("{\"elements\": []}", &s.handle, &err.value) == TGS_ERR_PARSE);
  CHECK(s.handle == nullptr);
  CHECK(!err.str().empty());

  OwnedString err2;
  CHECK(tgs_structure_parse("garbage", &s.handle, &err2.value) == TGS_ERR_PARSE);
}

TEST_CASE("structure round-trip and validity") {
  auto m3 = parse_fixture("M3.json");
  CHECK(tgs_structure_is_valid(m3.handle) == 1);
  OwnedString text;
  REQUIRE(tgs_structure_to_json(m3.handle, &text.value) == TGS_OK);
  CHECK(text.str() == fixture_text("M3.json"));

  auto p3 = parse_fixture("P3.json");
  CHECK(tgs_structure_is_valid(p3.handle) == 0);
}

TEST_CASE("element-level evaluators over the C surface") {
  auto m3 = parse_fixture("M3.json");
  auto eval = [&](const char* op, const char* args) {
    OwnedString out, err;
    REQUIRE(tgs_structure_eval(m3.handle, op, args, &out.value, &err.value) == TGS_OK);
    return out.parse();
  };
  CHECK(eval("plus", "a,1")["value"] == "1");
  CHECK(eval("plus", "0,a")["value"] == "a");
  CHECK(eval("ternary", "a,1,1")["value"] == "a");
  CHECK(eval("ternary", "a,1,0")["value"] == "0");
  CHECK(eval("gamma", "e,a")["value"] == "a");
  CHECK(eval("leq", "0,a")["value"] == true);
  CHECK(eval("leq", "1,a")["value"] == false);

  OwnedString out, err;
  CHECK(tgs_structure_eval(m3.handle, "plus", "a", &out.value, &err.value) ==
        TGS_ERR_USAGE);
  OwnedString out2, err2;
  CHECK(tgs_structure_eval(m3.handle, "nope", "a,a", &out2.value, &err2.value) ==
        TGS_ERR_USAGE);
  OwnedString out3, err3;
  CHECK(tgs_structure_eval(m3.handle, "plus", "a,q", &out3.value, &err3.value) ==
        TGS_ERR_NOT_FOUND);
}

TEST_CASE("coset stratification is reported with class heights") {
  auto m3 = parse_fixture("M3.json");
  auto code = build_fixture_code(m3.handle, "sec42.json");
  OwnedString cosets, err;
  REQUIRE(tgs_code_cosets(code.handle, &cosets.value, &err.value) == TGS_OK);
  const json strata = cosets.parse()["stratification"];
  REQUIRE(strata.size() == 2);
  CHECK(strata[0]["class"] == 0);
  CHECK(strata[0]["height"] == 0);
  CHECK(strata[1]["class"] == 1);
  CHECK(strata[1]["height"] == 1);
}

TEST_CASE("axiom report over the C surface") {
  auto p3 = parse_fixture("P3.json");
  OwnedString report, err;
  REQUIRE(tgs_structure_check(p3.handle, "witnesses=16", &report.value, &err.value) ==
          TGS_OK);
  const json doc = report.parse();
  CHECK(doc["valid"] == false);
  CHECK(doc["witness_cap"] == 16);
  bool saw_monotonicity = false;
  for (const auto& check : doc["checks"])
    if (check["id"] == "ternary-monotonicity") {
      saw_monotonicity = true;
      CHECK(check["status"] == "fail");
      CHECK(!check["witnesses"].empty());
    }
  CHECK(saw_monotonicity);
}

TEST_CASE("ideal predicate and enumeration over the C surface") {
  auto p3 = parse_fixture("P3.json");
  OwnedString verdict, err;
  REQUIRE(tgs_structure_test_ideal(p3.handle, "0,a", 0, &verdict.value, &err.value) ==
          TGS_OK);
  const json doc = verdict.parse();
  CHECK(doc["is_k_ideal"] == false);
  CHECK(doc["witness"]["inputs"] == json::array({"a", "1", "a"}));
  CHECK(doc["witness"]["value"] == "1");

  // Enumeration refuses the invalid structure without force.
  OwnedString out, err2;
  CHECK(tgs_structure_ideals(p3.handle, 0, nullptr, 0, &out.value, &err2.value) ==
        TGS_ERR_INVALID_STRUCTURE);
  OwnedString forced, err3;
  REQUIRE(tgs_structure_ideals(p3.handle, 0, nullptr, 1, &forced.value, &err3.value) ==
          TGS_OK);
  for (const auto& ideal : forced.parse()["ideals"])
    CHECK(ideal["labels"] != json::array({"0", "a"}));

  auto m3 = parse_fixture("M3.json");
  OwnedString m3_ideals, err4;
  REQUIRE(tgs_structure_ideals(m3.handle, 0, nullptr, 0, &m3_ideals.value, &err4.value) ==
          TGS_OK);
  CHECK(m3_ideals.parse()["count"] == 3);
}

TEST_CASE("lattice and quotient over the C surface") {
  auto m3 = parse_fixture("M3.json");
  OwnedString lattice, err;
  REQUIRE(tgs_structure_lattice(m3.handle, 0, nullptr, 0, &lattice.value, &err.value) ==
          TGS_OK);
  const json lat = lattice.parse();
  CHECK(lat["distributive"] == true);
  CHECK(lat["ideals"].size() == 3);

  OwnedString quotient, err2;
  REQUIRE(tgs_structure_quotient(m3.handle, "0,a", 0, &quotient.value, &err2.value) ==
          TGS_OK);
  const json q = quotient.parse();
  CHECK(q["well_defined"] == true);
  CHECK(q["classes"] == json::array({json::array({"0", "a"}), json::array({"1"})}));
  CHECK(q["axiom_check"]["valid"] == true);

  OwnedString ann, err3;
  REQUIRE(tgs_structure_annihilator(m3.handle, "a", 0, &ann.value, &err3.value) == TGS_OK);
  CHECK(ann.parse()["annihilator"] == json::array({"0"}));
}

TEST_CASE("code pipeline over the C surface") {
  auto m3 = parse_fixture("M3.json");
  auto code = build_fixture_code(m3.handle, "sec42.json");

  OwnedString params;
  REQUIRE(tgs_code_params(code.handle, &params.value) == TGS_OK);
  const json p = params.parse();
  CHECK(p["cardinality"] == 8);
  CHECK(p["d"] == 1);
  CHECK(p["t"] == 0);
  CHECK(p["k"].get<double>() == doctest::Approx(1.89278926071).epsilon(1e-12));
  CHECK(p["quotient_classes"] == 2);

  OwnedString members;
  REQUIRE(tgs_code_members(code.handle, &members.value) == TGS_OK);
  CHECK(members.parse()["members"].size() == 8);

  OwnedString cosets, err;
  REQUIRE(tgs_code_cosets(code.handle, &cosets.value, &err.value) == TGS_OK);
  const json table = cosets.parse();
  CHECK(table["classes"][0]["size"] == 8);
  CHECK(table["classes"][1]["size"] == 19);
  CHECK(table["classes"][1]["unique_leader"] == false);

  OwnedString decoded, err2;
  REQUIRE(tgs_code_decode(code.handle, "a,0,1", &decoded.value, &err2.value) == TGS_OK);
  const json d = decoded.parse();
  CHECK(d["status"] == "corrected");
  CHECK(d["output"] == json::array({"a", "0", "0"}));
  CHECK(d["flags"] == json::array({"ambiguous-leader"}));

  OwnedString nearest, err3;
  REQUIRE(tgs_code_nearest(code.handle, "1,1,1", &nearest.value, &err3.value) == TGS_OK);
  CHECK(nearest.parse()["distance"] == 3);

  OwnedString sim, err4;
  REQUIRE(tgs_code_simulate(code.handle,
                            R"({"decoder":"syndrome","w_max":1,"mode":"exhaustive"})",
                            &sim.value, &err4.value) == TGS_OK);
  const json s = sim.parse();
  CHECK(s["trials"] == 56);
  CHECK(s["successes"] == 24);

  OwnedString bad, err5;
  CHECK(tgs_code_simulate(code.handle,
                          R"({"decoder":"syndrome","w_max":1,"mode":"sampled","trials":10})",
                          &bad.value, &err5.value) == TGS_ERR_USAGE);
}

TEST_CASE("span check over the C surface") {
  auto m3 = parse_fixture("M3.json");
  const std::string spec = fixture_text("repetition.json");
  OwnedString out, err;
  REQUIRE(tgs_code_span_check(m3.handle, spec.c_str(), "0,a", nullptr, 0, &out.value,
                              &err.value) == TGS_OK);
  const json doc = out.parse();
  CHECK(doc["applicable"] == true);
  CHECK(doc["inclusion"] == true);
  CHECK(doc["equality"] == false);
}

TEST_CASE("claims over the C surface, with replay") {
  json fixtures = json::array();
  for (const char* name : {"M3.json", "sec42.json"})
    fixtures.push_back({{"name", name}, {"document", json::parse(fixture_text(name))}});
  OwnedString report, err;
  REQUIRE(tgs_claims_run(fixtures.dump().c_str(), nullptr, &report.value, &err.value) ==
          TGS_OK);
  const json doc = report.parse();
  bool saw_join = false;
  for (const auto& row : doc["results"])
    if (row["claim"] == "interaction-join" && row["fixture"] == "sec42.json") {
      saw_join = true;
      CHECK(row["status"] == "falsified");
      REQUIRE(!row["counterexamples"].empty());
      int reproduced = 0;
      OwnedString err2;
      REQUIRE(tgs_claims_replay(row["counterexamples"][0].dump().c_str(), &reproduced,
                                &err2.value) == TGS_OK);
      CHECK(reproduced == 1);
    }
  CHECK(saw_join);
}

TEST_CASE("fixtures manifest over the C surface") {
  OwnedString manifest;
  REQUIRE(tgs_fixtures_manifest(&manifest.value) == TGS_OK);
  const json doc = manifest.parse();
  CHECK(doc["files"].size() == 7);

  OwnedString missing, err;
  CHECK(tgs_fixture_document("absent.json", &missing.value, &err.value) ==
        TGS_ERR_NOT_FOUND);
}

TEST_CASE("null arguments are usage errors, not crashes") {
  CHECK(tgs_structure_parse("{}", nullptr, nullptr) == TGS_ERR_USAGE);
  CHECK(tgs_structure_to_json(nullptr, nullptr) == TGS_ERR_USAGE);
  CHECK(tgs_structure_is_valid(nullptr) == 0);
  CHECK(tgs_code_params(nullptr, nullptr) == TGS_ERR_USAGE);
  CHECK(tgs_fixtures_manifest(nullptr) == TGS_ERR_USAGE);
}
