#include "core/claims.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <random>

#include "core/axioms.hpp"
#include "core/codes.hpp"
#include "core/decoder.hpp"
#include "core/ideals.hpp"
#include "core/jsonutil.hpp"
#include "core/structure.hpp"
#include "core/words.hpp"

namespace tgs {

using nlohmann::json;

namespace {

enum class Status { Verified, Falsified, HypothesisNotMet, NotApplicable };

const char* status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Falsified: return "falsified";
    case Status::HypothesisNotMet: return "hypothesis-not-met";
    case Status::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct ClaimRow {
  std::string claim;
  std::string fixture;
  Status status = Status::NotApplicable;
  std::uint64_t scanned = 0;
  double wall_ms = 0.0;
  json details = json::array();
  json counterexamples = json::array();
};

struct TgsFixture {
  std::string name;
  json doc;
  std::optional<Structure> structure;
  bool valid = false;
  std::string error;
};

struct CodeFixture {
  std::string name;
  json spec;
  std::string tgs_name;
  std::string error;
};

json envelope(const std::string& claim, const std::string& fixture, const json& tgs_doc,
              const json& code_spec, json data) {
  json doc;
  doc["claim"] = claim;
  doc["fixture"] = fixture;
  doc["tgs"] = tgs_doc;
  doc["code_spec"] = code_spec;
  doc["data"] = std::move(data);
  return doc;
}

void note(ClaimRow& row, const std::string& text) { row.details.push_back(text); }

void add_counterexample(ClaimRow& row, json doc, std::size_t cap) {
  row.status = Status::Falsified;
  if (row.counterexamples.size() < cap) row.counterexamples.push_back(std::move(doc));
}

// --- individual claims over one valid structure -----------------------------

ClaimRow claim_dimension(const TgsFixture& fx, const std::vector<ElemMask>& ideals,
                         const ClaimsOptions& opt) {
  ClaimRow row{.claim = "dimension", .fixture = fx.name, .status = Status::Verified};
  const Structure& t = *fx.structure;
  for (ElemMask ideal : ideals)
    for (int n = 1; n <= opt.max_n; ++n) {
      std::uint64_t total = 1;
      bool skip = false;
      for (int i = 0; i < n; ++i) {
        total *= t.size();
        if (total > opt.bounds.max_words) skip = true;
      }
      if (skip) {
        note(row, "skipped |T|^" + std::to_string(n) + " beyond word bound");
        continue;
      }
      std::uint64_t count = 0;
      for (WordRank r = 0; r < total; ++r) {
        const Word w = word_unrank(t, std::size_t(n), r);
        ++row.scanned;
        bool inside = true;
        for (Elem c : w)
          if (!has(ideal, c)) {
            inside = false;
            break;
          }
        if (inside) ++count;
      }
      std::uint64_t formula = 1;
      for (int i = 0; i < n; ++i) formula *= popcount(ideal);
      if (count != formula)
        add_counterexample(row,
                           envelope("dimension", fx.name, fx.doc, nullptr,
                                    {{"ideal", mask_to_labels(t, ideal)},
                                     {"n", n},
                                     {"enumerated", count},
                                     {"formula", formula}}),
                           opt.witness_cap);
    }
  return row;
}

std::optional<int> exhaustive_power_distance(const Structure& t, ElemMask ideal, int n,
                                             std::uint64_t& scanned) {
  // Minimum weight over ideal^n \ {zero word}; nullopt for the zero ideal.
  const auto members = mask_elements(ideal);
  if (members.size() < 2) return std::nullopt;
  std::vector<std::size_t> idx(std::size_t(n), 0);
  Word w(std::size_t(n), members[0]);
  std::optional<int> best;
  for (;;) {
    ++scanned;
    const int weight = word_weight(t, w);
    if (weight > 0 && (!best || weight < *best)) best = weight;
    std::size_t i = w.size();
    while (i-- > 0) {
      if (++idx[i] < members.size()) {
        w[i] = members[idx[i]];
        break;
      }
      idx[i] = 0;
      w[i] = members[0];
    }
    if (i == std::size_t(-1)) break;
  }
  return best;
}

ClaimRow claim_min_distance(const TgsFixture& fx, const std::vector<ElemMask>& ideals,
                            const ClaimsOptions& opt) {
  ClaimRow row{.claim = "min-distance", .fixture = fx.name, .status = Status::Verified};
  const Structure& t = *fx.structure;
  bool any = false;
  for (ElemMask ideal : ideals) {
    if (popcount(ideal) < 2) {
      note(row, "zero ideal: not applicable");
      continue;
    }
    const ElemMask minimal = minimal_nonzero_elements(t, ideal);
    const int predicted = minimal == 0 ? -1 : 1;
    for (int n = 1; n <= opt.max_n; ++n) {
      const auto d = exhaustive_power_distance(t, ideal, n, row.scanned);
      if (!d) continue;
      any = true;
      if (*d != predicted)
        add_counterexample(row,
                           envelope("min-distance", fx.name, fx.doc, nullptr,
                                    {{"ideal", mask_to_labels(t, ideal)},
                                     {"n", n},
                                     {"exhaustive", *d},
                                     {"predicted", predicted}}),
                           opt.witness_cap);
    }
  }
  if (!any && row.status == Status::Verified) row.status = Status::NotApplicable;
  return row;
}

ClaimRow claim_monotonicity(const TgsFixture& fx, const std::vector<ElemMask>& ideals,
                            const ClaimsOptions& opt) {
  ClaimRow row{.claim = "distance-monotonicity", .fixture = fx.name,
               .status = Status::Verified};
  const Structure& t = *fx.structure;
  bool any = false;
  for (ElemMask inner : ideals)
    for (ElemMask outer : ideals) {
      if ((inner & outer) != inner) continue;  // need inner subset of outer
      if (popcount(inner) < 2 || popcount(outer) < 2) continue;
      for (int n = 1; n <= opt.max_n; ++n) {
        const auto d_inner = exhaustive_power_distance(t, inner, n, row.scanned);
        const auto d_outer = exhaustive_power_distance(t, outer, n, row.scanned);
        if (!d_inner || !d_outer) continue;
        any = true;
        if (*d_outer > *d_inner)
          add_counterexample(row,
                             envelope("distance-monotonicity", fx.name, fx.doc, nullptr,
                                      {{"inner", mask_to_labels(t, inner)},
                                       {"outer", mask_to_labels(t, outer)},
                                       {"n", n},
                                       {"d_inner", *d_inner},
                                       {"d_outer", *d_outer}}),
                             opt.witness_cap);
      }
    }
  if (!any && row.status == Status::Verified) row.status = Status::NotApplicable;
  return row;
}

// Scans all (codeword, error) pairs with disjoint supports.
void localized_scan(ClaimRow& row, const std::string& fixture, const json& tgs_doc,
                    const json& code_spec, const Code& code, const ClaimsOptions& opt) {
  const Structure& t = code.t;
  const std::size_t n = code.n;
  for (WordRank cr : code.members) {
    const Word c = word_unrank(t, n, cr);
    std::vector<std::size_t> free_positions;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i] == t.zero()) free_positions.push_back(i);
    // Odometer over the carrier on the free positions.
    Word e(n, t.zero());
    std::vector<Elem> digits(free_positions.size(), 0);
    for (;;) {
      ++row.scanned;
      const Word sum = word_plus(t, c, e);
      const int wc = word_weight(t, c), we = word_weight(t, e);
      if (word_weight(t, sum) != wc + we)
        add_counterexample(row,
                           envelope("localized-propagation", fixture, tgs_doc, code_spec,
                                    {{"codeword", to_labels(t, c)},
                                     {"error", to_labels(t, e)},
                                     {"wt_codeword", wc},
                                     {"wt_error", we},
                                     {"wt_sum", word_weight(t, sum)}}),
                           opt.witness_cap);
      std::size_t i = free_positions.size();
      while (i-- > 0) {
        if (++digits[i] < t.size()) {
          e[free_positions[i]] = digits[i];
          break;
        }
        digits[i] = 0;
        e[free_positions[i]] = 0;
      }
      if (i == std::size_t(-1)) break;
    }
  }
}

ClaimRow claim_localized_structure(const TgsFixture& fx, const std::vector<ElemMask>& ideals,
                                   const ClaimsOptions& opt) {
  ClaimRow row{.claim = "localized-propagation", .fixture = fx.name,
               .status = Status::Verified};
  const Structure& t = *fx.structure;
  for (ElemMask ideal : ideals)
    for (int n = 1; n <= opt.max_n; ++n) {
      std::uint64_t size = 1;
      bool skip = false;
      for (int i = 0; i < n; ++i) {
        size *= popcount(ideal);
        if (size > opt.bounds.max_words) skip = true;
      }
      if (skip) continue;
      const Code code = ideal_power_code(t, ideal, std::size_t(n), opt.bounds, false);
      const json spec = {{"construction", "ideal-power"},
                         {"ideal", mask_to_labels(t, ideal)},
                         {"n", n}};
      localized_scan(row, fx.name, fx.doc, spec, code, opt);
    }
  return row;
}

ClaimRow claim_localized_code(const CodeFixture& fx, const json& tgs_doc, const Code& code,
                              const ClaimsOptions& opt) {
  ClaimRow row{.claim = "localized-propagation", .fixture = fx.name,
               .status = Status::Verified};
  localized_scan(row, fx.name, tgs_doc, fx.spec, code, opt);
  return row;
}

ClaimRow claim_syndrome_invariance(const CodeFixture& fx, const json& tgs_doc,
                                   const Code& code, const ClaimsOptions& opt) {
  ClaimRow row{.claim = "syndrome-invariance", .fixture = fx.name,
               .status = Status::Verified};
  if (!code.quotient) {
    row.status = Status::NotApplicable;
    note(row, "code has no syndrome machinery");
    return row;
  }
  const Structure& t = code.t;
  const std::uint64_t total = word_space_size(t, code.n, opt.bounds);
  for (WordRank cr : code.members) {
    const Word c = word_unrank(t, code.n, cr);
    for (WordRank er = 0; er < total; ++er) {
      const Word e = word_unrank(t, code.n, er);
      ++row.scanned;
      const int via_sum = syndrome(code, word_plus(t, c, e));
      const int direct = syndrome(code, e);
      if (via_sum != direct)
        add_counterexample(row,
                           envelope("syndrome-invariance", fx.name, tgs_doc, fx.spec,
                                    {{"codeword", to_labels(t, c)},
                                     {"error", to_labels(t, e)},
                                     {"syndrome_sum", via_sum},
                                     {"syndrome_error", direct}}),
                           opt.witness_cap);
    }
  }
  return row;
}

ClaimRow claim_interaction_join(const CodeFixture& fx, const json& tgs_doc,
                                const Code& code, const ClaimsOptions& opt) {
  ClaimRow row{.claim = "interaction-join", .fixture = fx.name, .status = Status::Verified};
  if (!code.quotient) {
    row.status = Status::NotApplicable;
    note(row, "code has no syndrome machinery");
    return row;
  }
  const Quotient& q = *code.quotient;
  if (!q.well_defined || !q.induced.is_valid()) {
    row.status = Status::HypothesisNotMet;
    note(row, "quotient classes do not form a lattice order");
    return row;
  }
  const CosetTable table = build_coset_table(code, opt.bounds);
  const Structure& t = code.t;
  for (const auto& ca : table.classes) {
    if (ca.members.empty()) continue;
    const Word ea = word_unrank(t, code.n, ca.chosen_leader);
    for (const auto& cb : table.classes) {
      if (cb.members.empty()) continue;
      const Word eb = word_unrank(t, code.n, cb.chosen_leader);
      ++row.scanned;
      const Word w = word_ternary(t, ea, eb, ea);
      const int s = syndrome(code, w);
      const int join = int(q.induced.plus(Elem(ca.quotient_class), Elem(cb.quotient_class)));
      if (s != join)
        add_counterexample(row,
                           envelope("interaction-join", fx.name, tgs_doc, fx.spec,
                                    {{"alpha", ca.quotient_class},
                                     {"beta", cb.quotient_class},
                                     {"leader_alpha", to_labels(t, ea)},
                                     {"leader_beta", to_labels(t, eb)},
                                     {"word", to_labels(t, w)},
                                     {"syndrome", s},
                                     {"join", join}}),
                           opt.witness_cap);
    }
  }
  return row;
}

// --- bounded random search for additional valid structures ------------------

std::vector<std::pair<std::string, json>> random_search(const SearchOptions& search) {
  if (search.m < 2 || search.m > 4)
    throw Error(ErrorKind::Usage, "search carrier size must lie in [2, 4]");
  if (search.candidates > 200000)
    throw Error(ErrorKind::Usage, "search is bounded to 200000 candidates");

  const std::size_t m = search.m;
  std::vector<std::string> labels = {"0"};
  for (std::size_t i = 1; i < m; ++i) labels.push_back("x" + std::to_string(i));

  std::mt19937_64 rng(search.seed);
  auto draw = [&](std::size_t n) { return std::size_t(rng() % n); };

  std::vector<std::pair<std::string, json>> found;
  for (std::uint64_t candidate = 0; candidate < search.candidates; ++candidate) {
    // Candidates are restricted to commutative idempotent plus tables with
    // the zero identity and an identity gamma action; everything else is
    // uniform and filtered through the axiom check.
    std::vector<Elem> plus(m * m, 0);
    for (std::size_t x = 0; x < m; ++x) {
      plus[x * m + x] = Elem(x);
      plus[x * m + 0] = Elem(x);
      plus[0 * m + x] = Elem(x);
    }
    for (std::size_t x = 1; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y) {
        const Elem v = Elem(draw(m));
        plus[x * m + y] = v;
        plus[y * m + x] = v;
      }
    std::vector<Elem> ternary(m * m * m);
    for (auto& cell : ternary) cell = Elem(draw(m));
    std::vector<Elem> gamma(m);
    for (std::size_t x = 0; x < m; ++x) gamma[x] = Elem(x);

    Structure t = Structure::from_tables(labels, 0, std::move(plus), std::move(ternary),
                                         {"e"}, std::move(gamma));
    if (!t.is_valid()) continue;
    char name[48];
    std::snprintf(name, sizeof name, "search-%06llu",
                  static_cast<unsigned long long>(candidate));
    found.emplace_back(name, t.to_json());
  }
  return found;
}

json row_to_json(const ClaimRow& row, bool timings) {
  json doc;
  doc["claim"] = row.claim;
  doc["fixture"] = row.fixture;
  doc["status"] = status_name(row.status);
  doc["scanned"] = row.scanned;
  doc["details"] = row.details;
  doc["counterexamples"] = row.counterexamples;
  if (timings) doc["wall_ms"] = round_sig12(row.wall_ms);
  return doc;
}

}  // namespace

json run_suite(const std::vector<std::pair<std::string, json>>& fixtures,
               const ClaimsOptions& options) {
  std::vector<TgsFixture> tgs_fixtures;
  std::vector<CodeFixture> code_fixtures;

  auto classify = [&](const std::string& name, const json& doc) {
    if (doc.is_object() && doc.contains("elements")) {
      TgsFixture fx{.name = name, .doc = doc};
      try {
        fx.structure = Structure::from_json(doc);
        fx.valid = fx.structure->is_valid();
      } catch (const Error& e) {
        fx.error = e.what();
      }
      tgs_fixtures.push_back(std::move(fx));
    } else if (doc.is_object() && doc.contains("construction")) {
      CodeFixture fx{.name = name, .spec = doc};
      if (doc.contains("tgs") && doc["tgs"].is_string())
        fx.tgs_name = doc["tgs"].get<std::string>();
      else
        fx.error = "code spec does not name its TGS fixture";
      code_fixtures.push_back(std::move(fx));
    } else {
      TgsFixture fx{.name = name, .doc = doc,
                    .error = "document is neither a TGS document nor a code spec"};
      tgs_fixtures.push_back(std::move(fx));
    }
  };

  for (const auto& [name, doc] : fixtures) classify(name, doc);
  if (options.search.candidates > 0)
    for (const auto& [name, doc] : random_search(options.search)) classify(name, doc);

  std::sort(tgs_fixtures.begin(), tgs_fixtures.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  std::sort(code_fixtures.begin(), code_fixtures.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });

  auto find_tgs = [&](const std::string& name) -> const TgsFixture* {
    for (const auto& fx : tgs_fixtures)
      if (fx.name == name) return &fx;
    return nullptr;
  };

  std::vector<ClaimRow> rows;
  auto timed = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    ClaimRow row = fn();
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    rows.push_back(std::move(row));
  };

  static const char* structure_claims[] = {"dimension", "min-distance",
                                           "distance-monotonicity",
                                           "localized-propagation"};
  static const char* code_claims[] = {"localized-propagation", "syndrome-invariance",
                                      "interaction-join"};

  for (const auto& fx : tgs_fixtures) {
    if (!fx.structure) continue;  // load failure, listed in the fixture table
    if (!fx.valid) {
      for (const char* claim : structure_claims) {
        ClaimRow row{.claim = claim, .fixture = fx.name, .status = Status::HypothesisNotMet};
        note(row, "structure fails the axiom check");
        rows.push_back(std::move(row));
      }
      continue;
    }
    std::vector<ElemMask> ideals;
    try {
      ideals = enumerate_k_ideals(*fx.structure, false, options.bounds);
    } catch (const Error& e) {
      for (const char* claim : structure_claims) {
        ClaimRow row{.claim = claim, .fixture = fx.name, .status = Status::NotApplicable};
        note(row, std::string("ideal enumeration refused: ") + e.what());
        rows.push_back(std::move(row));
      }
      continue;
    }
    timed([&] { return claim_dimension(fx, ideals, options); });
    timed([&] { return claim_min_distance(fx, ideals, options); });
    timed([&] { return claim_monotonicity(fx, ideals, options); });
    timed([&] { return claim_localized_structure(fx, ideals, options); });
  }

  for (auto& fx : code_fixtures) {
    const TgsFixture* base = fx.tgs_name.empty() ? nullptr : find_tgs(fx.tgs_name);
    if (!fx.error.empty() || base == nullptr || !base->structure) {
      if (fx.error.empty()) fx.error = "TGS fixture '" + fx.tgs_name + "' is not in the set";
      continue;
    }
    if (!base->valid) {
      for (const char* claim : code_claims) {
        ClaimRow row{.claim = claim, .fixture = fx.name, .status = Status::HypothesisNotMet};
        note(row, "underlying structure fails the axiom check");
        rows.push_back(std::move(row));
      }
      continue;
    }
    std::optional<Code> code;
    try {
      code = build_code(*base->structure, fx.spec, options.bounds, false);
    } catch (const Error& e) {
      fx.error = e.what();
      continue;
    }
    timed([&] { return claim_localized_code(fx, base->doc, *code, options); });
    timed([&] { return claim_syndrome_invariance(fx, base->doc, *code, options); });
    timed([&] { return claim_interaction_join(fx, base->doc, *code, options); });
  }

  std::sort(rows.begin(), rows.end(), [](const ClaimRow& a, const ClaimRow& b) {
    return std::tie(a.claim, a.fixture) < std::tie(b.claim, b.fixture);
  });

  json report;
  report["options"] = {{"max_n", options.max_n},
                       {"witness_cap", options.witness_cap},
                       {"bounds",
                        {{"carrier", options.bounds.max_carrier},
                         {"words", options.bounds.max_words},
                         {"witnesses", options.bounds.witness_cap}}},
                       {"search",
                        {{"m", options.search.m},
                         {"candidates", options.search.candidates},
                         {"seed", options.search.seed}}}};
  json fixture_table = json::array();
  for (const auto& fx : tgs_fixtures) {
    json f;
    f["name"] = fx.name;
    f["kind"] = "tgs";
    f["status"] = !fx.structure ? "load-failure" : (fx.valid ? "ok" : "invalid-axioms");
    if (!fx.error.empty()) f["error"] = fx.error;
    fixture_table.push_back(std::move(f));
  }
  for (const auto& fx : code_fixtures) {
    json f;
    f["name"] = fx.name;
    f["kind"] = "code";
    f["status"] = fx.error.empty() ? "ok" : "load-failure";
    if (!fx.error.empty()) f["error"] = fx.error;
    fixture_table.push_back(std::move(f));
  }
  std::sort(fixture_table.begin(), fixture_table.end(),
            [](const json& a, const json& b) { return a["name"] < b["name"]; });
  report["fixtures"] = std::move(fixture_table);
  json results = json::array();
  for (const auto& row : rows) results.push_back(row_to_json(row, options.timings));
  report["results"] = std::move(results);
  return report;
}

bool replay_counterexample(const json& doc) {
  if (!doc.is_object() || !doc.contains("claim") || !doc.contains("tgs") ||
      !doc.contains("data"))
    throw Error(ErrorKind::Parse, "counterexample document is incomplete");
  const std::string claim = doc["claim"].get<std::string>();
  const Structure t = Structure::from_json(doc["tgs"]);
  const json& data = doc["data"];
  const Bounds bounds;

  if (claim == "dimension") {
    const ElemMask ideal = mask_from_labels(t, data.at("ideal"));
    const int n = data.at("n").get<int>();
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= t.size();
    std::uint64_t count = 0;
    for (WordRank r = 0; r < total; ++r) {
      const Word w = word_unrank(t, std::size_t(n), r);
      bool inside = true;
      for (Elem c : w)
        if (!has(ideal, c)) inside = false;
      if (inside) ++count;
    }
    std::uint64_t formula = 1;
    for (int i = 0; i < n; ++i) formula *= popcount(ideal);
    return count == data.at("enumerated").get<std::uint64_t>() &&
           formula == data.at("formula").get<std::uint64_t>() && count != formula;
  }
  if (claim == "min-distance") {
    const ElemMask ideal = mask_from_labels(t, data.at("ideal"));
    const int n = data.at("n").get<int>();
    std::uint64_t scanned = 0;
    const auto d = exhaustive_power_distance(t, ideal, n, scanned);
    return d && *d == data.at("exhaustive").get<int>() &&
           *d != data.at("predicted").get<int>();
  }
  if (claim == "distance-monotonicity") {
    const ElemMask inner = mask_from_labels(t, data.at("inner"));
    const ElemMask outer = mask_from_labels(t, data.at("outer"));
    const int n = data.at("n").get<int>();
    std::uint64_t scanned = 0;
    const auto d_inner = exhaustive_power_distance(t, inner, n, scanned);
    const auto d_outer = exhaustive_power_distance(t, outer, n, scanned);
    return d_inner && d_outer && *d_inner == data.at("d_inner").get<int>() &&
           *d_outer == data.at("d_outer").get<int>() && *d_outer > *d_inner;
  }
  if (claim == "localized-propagation") {
    Word c, e;
    for (const auto& s : data.at("codeword")) c.push_back(t.require(s.get<std::string>()));
    for (const auto& s : data.at("error")) e.push_back(t.require(s.get<std::string>()));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != t.zero() && e[i] != t.zero()) return false;  // supports overlap
    const int wc = word_weight(t, c), we = word_weight(t, e);
    const int ws = word_weight(t, word_plus(t, c, e));
    return wc == data.at("wt_codeword").get<int>() && we == data.at("wt_error").get<int>() &&
           ws == data.at("wt_sum").get<int>() && ws != wc + we;
  }
  if (claim == "syndrome-invariance" || claim == "interaction-join") {
    if (!doc.contains("code_spec") || doc["code_spec"].is_null())
      throw Error(ErrorKind::Parse, "counterexample document lacks its code spec");
    const Code code = build_code(t, doc["code_spec"], bounds, false);
    if (claim == "syndrome-invariance") {
      Word c, e;
      for (const auto& s : data.at("codeword")) c.push_back(t.require(s.get<std::string>()));
      for (const auto& s : data.at("error")) e.push_back(t.require(s.get<std::string>()));
      const int via_sum = syndrome(code, word_plus(t, c, e));
      const int direct = syndrome(code, e);
      return via_sum == data.at("syndrome_sum").get<int>() &&
             direct == data.at("syndrome_error").get<int>() && via_sum != direct;
    }
    Word ea, eb;
    for (const auto& s : data.at("leader_alpha")) ea.push_back(t.require(s.get<std::string>()));
    for (const auto& s : data.at("leader_beta")) eb.push_back(t.require(s.get<std::string>()));
    const Word w = word_ternary(t, ea, eb, ea);
    const int s = syndrome(code, w);
    const Quotient& q = *code.quotient;
    const int join = int(q.induced.plus(Elem(data.at("alpha").get<int>()),
                                        Elem(data.at("beta").get<int>())));
    return to_labels(t, w) == data.at("word").get<std::vector<std::string>>() &&
           s == data.at("syndrome").get<int>() && join == data.at("join").get<int>() &&
           s != join;
  }
  throw Error(ErrorKind::Parse, "unknown claim '" + claim + "'");
}

}  // namespace tgs
