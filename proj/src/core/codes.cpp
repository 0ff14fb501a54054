#include "core/codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/ideals.hpp"
#include "core/jsonutil.hpp"

namespace tgs {

using nlohmann::json;

const char* construction_name(Construction c) {
  switch (c) {
    case Construction::IdealPower: return "ideal-power";
    case Construction::Constraint: return "constraint";
    case Construction::Kernel: return "kernel";
    case Construction::Generated: return "generated";
  }
  return "?";
}

namespace {

void require_usable(const Structure& t, bool force) {
  if (!t.is_valid() && !force)
    throw Error(ErrorKind::InvalidStructure,
                "structure fails the axiom check; rerun with force to proceed diagnostically");
}

void require_ideal(const Structure& t, ElemMask ideal, const char* what) {
  const auto check = is_k_ideal(t, ideal);
  if (!check.ok)
    throw Error(ErrorKind::Usage,
                std::string(what) + " is not a k-ideal (failing clause: " +
                    check.witness->clause + ")");
}

std::vector<Elem> element_list(const Structure& t, const json& node, const char* what) {
  if (!node.is_array())
    throw Error(ErrorKind::Parse, std::string(what) + " must be an array of labels");
  std::vector<Elem> out;
  for (const auto& item : node) {
    if (!item.is_string())
      throw Error(ErrorKind::Parse, std::string(what) + " must contain only labels");
    out.push_back(t.require(item.get<std::string>()));
  }
  return out;
}

// Exhaustive closure verification, feasible only for small member sets.
void verify_closure(Code& code) {
  if (code.members.size() > 300) return;
  const Structure& t = code.t;
  std::vector<Word> words;
  words.reserve(code.members.size());
  for (WordRank r : code.members) words.push_back(word_unrank(t, code.n, r));
  code.closure_checked = true;
  code.closed = true;
  for (const auto& u : words)
    for (const auto& v : words)
      if (!code.contains(word_rank(t, word_plus(t, u, v)))) {
        code.closed = false;
        return;
      }
  for (const auto& u : words)
    for (const auto& v : words)
      for (const auto& w : words)
        if (!code.contains(word_rank(t, word_ternary(t, u, v, w)))) {
          code.closed = false;
          return;
        }
  for (std::size_t g = 0; g < t.gamma_size(); ++g)
    for (const auto& u : words)
      if (!code.contains(word_rank(t, word_gamma(t, g, u)))) {
        code.closed = false;
        return;
      }
}

void attach_quotient(Code& code) {
  if (!code.has_ideal) return;
  if (!is_k_ideal(code.t, code.ideal).ok) return;  // no syndrome machinery
  code.quotient = build_quotient(code.t, code.ideal);
}

}  // namespace

bool Code::contains(WordRank rank) const {
  return std::binary_search(members.begin(), members.end(), rank);
}

bool Code::contains_word(const Word& w) const { return contains(word_rank(t, w)); }

Morphism build_phi(const Structure& t, std::vector<Elem> a, std::vector<Elem> b) {
  if (a.empty() || a.size() != b.size())
    throw Error(ErrorKind::Usage, "constraint families A and B must have equal nonzero length");
  for (Elem x : a)
    if (!t.in_range(x)) throw Error(ErrorKind::Usage, "A contains an invalid element");
  for (Elem x : b)
    if (!t.in_range(x)) throw Error(ErrorKind::Usage, "B contains an invalid element");
  return Morphism{std::move(a), std::move(b)};
}

Elem eval_phi(const Structure& t, const Morphism& phi, const Word& w) {
  if (w.size() != phi.a.size())
    throw Error(ErrorKind::Usage, "word length does not match the constraint family");
  Elem acc = t.zero();
  for (std::size_t i = 0; i < phi.a.size(); ++i)
    for (std::size_t j = 0; j < phi.b.size(); ++j)
      acc = t.plus(acc, t.ternary(phi.a[i], w[i], phi.b[j]));
  return acc;
}

Code ideal_power_code(const Structure& t, ElemMask ideal, std::size_t n,
                      const Bounds& bounds, bool force) {
  require_usable(t, force);
  require_ideal(t, ideal, "ideal");
  if (n == 0) throw Error(ErrorKind::Usage, "code length must be at least 1");

  const auto members = mask_elements(ideal);
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < n; ++i) {
    expected *= members.size();
    if (expected > bounds.max_words)
      throw Error(ErrorKind::Bounds,
                  "|I|^" + std::to_string(n) + " exceeds the word bound " +
                      std::to_string(bounds.max_words));
  }

  Code code;
  code.t = t;
  code.construction = Construction::IdealPower;
  code.n = n;
  code.has_ideal = true;
  code.ideal = ideal;
  // Odometer over the ideal members, ascending: ranks come out sorted.
  std::vector<std::size_t> idx(n, 0);
  Word w(n, members[0]);
  for (;;) {
    code.members.push_back(word_rank(t, w));
    std::size_t i = n;
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
  verify_closure(code);
  attach_quotient(code);
  return code;
}

Code constraint_code(const Structure& t, std::vector<Elem> a, std::vector<Elem> b,
                     ElemMask ideal, const Bounds& bounds, bool force) {
  require_usable(t, force);
  require_ideal(t, ideal, "ideal");
  Morphism phi = build_phi(t, std::move(a), std::move(b));
  const std::size_t n = phi.a.size();
  const std::uint64_t total = word_space_size(t, n, bounds);

  Code code;
  code.t = t;
  code.construction = Construction::Constraint;
  code.n = n;
  code.has_ideal = true;
  code.ideal = ideal;
  bool equivalent = true;
  for (WordRank r = 0; r < total; ++r) {
    const Word w = word_unrank(t, n, r);
    bool member = true;
    for (std::size_t i = 0; i < n && member; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!has(ideal, t.ternary(phi.a[i], w[i], phi.b[j]))) {
          member = false;
          break;
        }
    const bool phi_in = has(ideal, eval_phi(t, phi, w));
    if (member != phi_in) equivalent = false;
    if (member) code.members.push_back(r);
  }
  code.phi = std::move(phi);
  code.phi_equivalence = equivalent;
  verify_closure(code);
  attach_quotient(code);
  return code;
}

Code kernel_code(const Structure& t, std::vector<Elem> a, std::vector<Elem> b,
                 const Bounds& bounds, bool force) {
  require_usable(t, force);
  Morphism phi = build_phi(t, std::move(a), std::move(b));
  const std::size_t n = phi.a.size();
  const std::uint64_t total = word_space_size(t, n, bounds);

  Code code;
  code.t = t;
  code.construction = Construction::Kernel;
  code.n = n;
  code.has_ideal = true;
  code.ideal = bit(t.zero());
  for (WordRank r = 0; r < total; ++r)
    if (eval_phi(t, phi, word_unrank(t, n, r)) == t.zero()) code.members.push_back(r);
  code.phi = std::move(phi);
  verify_closure(code);
  attach_quotient(code);  // skipped when {0} fails the k-ideal predicate
  return code;
}

Code generated_code(const Structure& t, std::vector<Word> generators,
                    const Bounds& bounds, bool force) {
  require_usable(t, force);
  if (generators.empty())
    throw Error(ErrorKind::Usage, "generated code needs at least one generator");
  const std::size_t n = generators.front().size();
  if (n == 0) throw Error(ErrorKind::Usage, "code length must be at least 1");
  for (const auto& g : generators) {
    if (g.size() != n)
      throw Error(ErrorKind::Usage, "generators must all have the same length");
    for (Elem c : g)
      if (!t.in_range(c)) throw Error(ErrorKind::Usage, "generator contains an invalid element");
  }

  std::set<WordRank> span;
  for (const auto& g : generators) span.insert(word_rank(t, g));
  for (;;) {
    if (span.size() > bounds.max_words)
      throw Error(ErrorKind::Bounds, "generated code exceeds the word bound");
    const std::uint64_t size = span.size();
    if (size * size * size > (std::uint64_t{1} << 24))
      throw Error(ErrorKind::Bounds,
                  "generated-code closure work exceeds the desk-scale bound");
    std::vector<Word> words;
    words.reserve(span.size());
    for (WordRank r : span) words.push_back(word_unrank(t, n, r));
    std::set<WordRank> next = span;
    for (const auto& u : words)
      for (const auto& v : words) next.insert(word_rank(t, word_plus(t, u, v)));
    for (const auto& u : words)
      for (const auto& v : words)
        for (const auto& w : words)
          next.insert(word_rank(t, word_ternary(t, u, v, w)));
    for (std::size_t g = 0; g < t.gamma_size(); ++g)
      for (const auto& u : words) next.insert(word_rank(t, word_gamma(t, g, u)));
    if (next == span) break;
    span = std::move(next);
  }

  Code code;
  code.t = t;
  code.construction = Construction::Generated;
  code.n = n;
  code.members.assign(span.begin(), span.end());
  code.generators = std::move(generators);
  verify_closure(code);
  return code;
}

Code build_code(const Structure& t, const json& spec, const Bounds& bounds, bool force) {
  if (!spec.is_object()) throw Error(ErrorKind::Parse, "code spec must be a JSON object");
  static const std::set<std::string> known = {"tgs", "construction", "n", "ideal",
                                              "A", "B", "generators", "description"};
  for (auto it = spec.begin(); it != spec.end(); ++it)
    if (!known.count(it.key()))
      throw Error(ErrorKind::Parse, "unknown code-spec key \"" + it.key() + "\"");
  if (!spec.contains("construction") || !spec["construction"].is_string())
    throw Error(ErrorKind::Parse, "code spec is missing \"construction\"");
  const std::string kind = spec["construction"].get<std::string>();

  auto get_n = [&]() -> std::size_t {
    if (!spec.contains("n") || !spec["n"].is_number_unsigned())
      throw Error(ErrorKind::Parse, "code spec is missing a non-negative \"n\"");
    return spec["n"].get<std::size_t>();
  };
  auto get_ideal = [&]() -> ElemMask {
    if (!spec.contains("ideal"))
      throw Error(ErrorKind::Parse, "code spec is missing \"ideal\"");
    return mask_from_labels(t, spec["ideal"]);
  };
  auto get_family = [&](const char* key) -> std::vector<Elem> {
    if (!spec.contains(key))
      throw Error(ErrorKind::Parse, std::string("code spec is missing \"") + key + "\"");
    return element_list(t, spec[key], key);
  };

  if (kind == "ideal-power") return ideal_power_code(t, get_ideal(), get_n(), bounds, force);
  if (kind == "constraint") {
    auto a = get_family("A"), b = get_family("B");
    if (spec.contains("n") && spec["n"].get<std::size_t>() != a.size())
      throw Error(ErrorKind::Parse, "\"n\" does not match the length of A");
    return constraint_code(t, std::move(a), std::move(b), get_ideal(), bounds, force);
  }
  if (kind == "kernel") {
    auto a = get_family("A"), b = get_family("B");
    if (spec.contains("n") && spec["n"].get<std::size_t>() != a.size())
      throw Error(ErrorKind::Parse, "\"n\" does not match the length of A");
    if (spec.contains("ideal")) {
      const ElemMask given = mask_from_labels(t, spec["ideal"]);
      if (given != bit(t.zero()))
        throw Error(ErrorKind::Parse, "kernel codes are taken modulo the zero ideal");
    }
    return kernel_code(t, std::move(a), std::move(b), bounds, force);
  }
  if (kind == "generated") {
    if (!spec.contains("generators") || !spec["generators"].is_array() ||
        spec["generators"].empty())
      throw Error(ErrorKind::Parse, "code spec is missing \"generators\"");
    std::vector<Word> gens;
    for (const auto& g : spec["generators"]) gens.push_back(element_list(t, g, "generator"));
    return generated_code(t, std::move(gens), bounds, force);
  }
  throw Error(ErrorKind::Parse, "unknown construction \"" + kind + "\"");
}

CodeParams code_params(const Code& code) {
  const Structure& t = code.t;
  CodeParams p;
  p.n = code.n;
  p.alphabet = t.size();
  p.cardinality = code.members.size();
  p.k = p.cardinality == 0
            ? 0.0
            : round_sig12(std::log(double(p.cardinality)) / std::log(double(p.alphabet)));

  const Word zero_word(code.n, t.zero());
  p.zero_in_code = code.contains_word(zero_word);

  if (p.cardinality >= 2) {
    if (p.zero_in_code) {
      p.d_source = "tgs-weight";
      int best = int(code.n) + 1;
      for (WordRank r : code.members) {
        const Word w = word_unrank(t, code.n, r);
        const int weight = word_weight(t, w);
        if (weight > 0) best = std::min(best, weight);
      }
      p.d = best;
    } else {
      p.d_source = "pairwise-hamming";
      int best = int(code.n) + 1;
      for (std::size_t i = 0; i < code.members.size(); ++i) {
        const Word u = word_unrank(t, code.n, code.members[i]);
        for (std::size_t j = i + 1; j < code.members.size(); ++j)
          best = std::min(best, hamming(u, word_unrank(t, code.n, code.members[j])));
      }
      p.d = best;
    }
    p.radius = (*p.d - 1) / 2;
  }

  if (code.has_ideal && popcount(code.ideal) >= 2) {
    p.mu_literal = 1;  // nonzero scalar elements have one nonzero coordinate
    p.radius_literal = 0;
  }

  if (code.construction == Construction::IdealPower) {
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < code.n; ++i) expected *= popcount(code.ideal);
    p.cardinality_formula = expected;
    p.cardinality_ok = expected == p.cardinality;
    if (minimal_nonzero_elements(t, code.ideal) != 0) {
      p.d_predicted = 1;
      p.d_prediction_ok = p.d.has_value() && *p.d == 1;
    }
  }
  return p;
}

SpanReport check_span_theorem(const Structure& t, const std::vector<Word>& generators,
                              ElemMask ideal, std::size_t n, const Bounds& bounds,
                              bool force) {
  require_usable(t, force);
  require_ideal(t, ideal, "ideal");
  SpanReport report;
  report.applicable = true;
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorKind::Usage, "generator length does not match n");
    for (Elem c : g)
      if (!has(ideal, c)) {
        report.applicable = false;
        report.offending_generator = g;
        return report;
      }
  }
  const Code span = generated_code(t, generators, bounds, force);
  report.span_size = span.members.size();
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < n; ++i) power *= popcount(ideal);
  report.power_size = power;
  report.inclusion = true;
  for (WordRank r : span.members) {
    const Word w = word_unrank(t, n, r);
    for (Elem c : w)
      if (!has(ideal, c)) {
        report.inclusion = false;
        break;
      }
    if (!report.inclusion) break;
  }
  report.equality = report.inclusion && report.span_size == report.power_size;
  return report;
}

json code_params_to_json(const Code& code, const CodeParams& p) {
  json doc;
  doc["construction"] = construction_name(code.construction);
  doc["n"] = p.n;
  doc["alphabet"] = p.alphabet;
  doc["ideal"] = code.has_ideal ? mask_to_labels(code.t, code.ideal) : json(nullptr);
  doc["cardinality"] = p.cardinality;
  doc["k"] = p.k;
  doc["zero_in_code"] = p.zero_in_code;
  doc["d"] = p.d ? json(*p.d) : json(nullptr);
  doc["d_source"] = p.d ? json(p.d_source) : json(nullptr);
  doc["t"] = p.radius ? json(*p.radius) : json(nullptr);
  doc["mu_literal"] = p.mu_literal ? json(*p.mu_literal) : json(nullptr);
  doc["t_literal"] = p.radius_literal ? json(*p.radius_literal) : json(nullptr);
  if (p.cardinality_formula) {
    doc["cardinality_formula"] = {{"expected", *p.cardinality_formula},
                                  {"ok", *p.cardinality_ok}};
  } else {
    doc["cardinality_formula"] = nullptr;
  }
  if (p.d_predicted) {
    doc["d_prediction"] = {{"predicted", *p.d_predicted}, {"ok", *p.d_prediction_ok}};
  } else {
    doc["d_prediction"] = nullptr;
  }
  doc["closure_checked"] = code.closure_checked;
  doc["closed"] = code.closure_checked ? json(code.closed) : json(nullptr);
  doc["phi_equivalence"] =
      code.phi_equivalence ? json(*code.phi_equivalence) : json(nullptr);
  doc["syndrome_available"] = code.quotient.has_value();
  if (code.quotient) doc["quotient_classes"] = code.quotient->classes.size();
  return doc;
}

json code_members_to_json(const Code& code) {
  json doc;
  doc["construction"] = construction_name(code.construction);
  doc["n"] = code.n;
  doc["count"] = code.members.size();
  json members = json::array();
  for (WordRank r : code.members)
    members.push_back(to_labels(code.t, word_unrank(code.t, code.n, r)));
  doc["members"] = std::move(members);
  return doc;
}

json span_report_to_json(const Structure& t, const SpanReport& report) {
  json doc;
  doc["applicable"] = report.applicable;
  if (report.offending_generator)
    doc["offending_generator"] = to_labels(t, *report.offending_generator);
  if (report.applicable) {
    doc["inclusion"] = report.inclusion;
    doc["equality"] = report.equality;
    doc["span_size"] = report.span_size;
    doc["power_size"] = report.power_size;
  }
  return doc;
}

}  // namespace tgs
