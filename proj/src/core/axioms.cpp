#include "core/axioms.hpp"

namespace tgs {

using nlohmann::json;

namespace {

// Appends a witness unless the cap is reached; marks truncation otherwise.
// Returns false when scanning can stop early (cap hit and caller only needs
// the capped list).
void record(AxiomCheck& check, AxiomWitness w, std::size_t cap) {
  check.pass = false;
  if (check.witnesses.size() < cap)
    check.witnesses.push_back(std::move(w));
  else
    check.truncated = true;
}

AxiomCheck check_zero_identity(const Structure& t, std::size_t cap) {
  AxiomCheck check{.id = "zero-identity"};
  const Elem zero = t.zero();
  for (Elem x = 0; x < t.size(); ++x) {
    ++check.scanned;
    const Elem got = t.plus(x, zero);
    if (got != x)
      record(check, {.kind = "zero-identity", .inputs = {x}, .lhs = got, .rhs = x}, cap);
  }
  return check;
}

AxiomCheck check_plus_laws(const Structure& t, std::size_t cap) {
  AxiomCheck check{.id = "plus-laws"};
  const std::size_t m = t.size();
  for (Elem x = 0; x < m; ++x) {
    ++check.scanned;
    const Elem got = t.plus(x, x);
    if (got != x)
      record(check, {.kind = "plus-idempotent", .inputs = {x}, .lhs = got, .rhs = x}, cap);
  }
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      ++check.scanned;
      const Elem lhs = t.plus(x, y), rhs = t.plus(y, x);
      if (lhs != rhs)
        record(check, {.kind = "plus-commutative", .inputs = {x, y}, .lhs = lhs, .rhs = rhs}, cap);
    }
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z) {
        ++check.scanned;
        const Elem lhs = t.plus(t.plus(x, y), z), rhs = t.plus(x, t.plus(y, z));
        if (lhs != rhs)
          record(check, {.kind = "plus-associative", .inputs = {x, y, z}, .lhs = lhs, .rhs = rhs}, cap);
      }
  return check;
}

AxiomCheck check_monotonicity(const Structure& t, std::size_t cap) {
  AxiomCheck check{.id = "ternary-monotonicity"};
  const std::size_t m = t.size();
  // Comparable ordered pairs per coordinate, in lexicographic scan order.
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (t.leq(x, y)) pairs.emplace_back(x, y);
  for (const auto& [x, xh] : pairs)
    for (const auto& [y, yh] : pairs)
      for (const auto& [z, zh] : pairs) {
        ++check.scanned;
        const Elem lo = t.ternary(x, y, z), hi = t.ternary(xh, yh, zh);
        if (!t.leq(lo, hi))
          record(check,
                 {.kind = "monotonicity", .inputs = {x, y, z}, .inputs2 = {xh, yh, zh},
                  .lhs = lo, .rhs = hi},
                 cap);
      }
  return check;
}

AxiomCheck check_distributivity(const Structure& t, std::size_t cap) {
  AxiomCheck check{.id = "distributivity"};
  const std::size_t m = t.size();
  for (std::size_t slot = 0; slot < 3; ++slot)
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b)
        for (Elem c = 0; c < m; ++c)
          for (Elem d = 0; d < m; ++d) {
            ++check.scanned;
            const Elem sum = t.plus(a, b);
            Elem lhs, rhs;
            switch (slot) {
              case 0:
                lhs = t.ternary(sum, c, d);
                rhs = t.plus(t.ternary(a, c, d), t.ternary(b, c, d));
                break;
              case 1:
                lhs = t.ternary(c, sum, d);
                rhs = t.plus(t.ternary(c, a, d), t.ternary(c, b, d));
                break;
              default:
                lhs = t.ternary(c, d, sum);
                rhs = t.plus(t.ternary(c, d, a), t.ternary(c, d, b));
                break;
            }
            if (lhs != rhs)
              record(check,
                     {.kind = "distributivity", .inputs = {a, b, c, d}, .slot = slot,
                      .lhs = lhs, .rhs = rhs},
                     cap);
          }
  return check;
}

AxiomCheck check_gamma(const Structure& t, std::size_t cap) {
  AxiomCheck check{.id = "gamma-compatibility"};
  const std::size_t m = t.size();
  for (std::size_t g = 0; g < t.gamma_size(); ++g)
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b)
        for (Elem c = 0; c < m; ++c) {
          const Elem scalar = t.gamma(g, t.ternary(a, b, c));
          const Elem forms[3] = {t.ternary(t.gamma(g, a), b, c),
                                 t.ternary(a, t.gamma(g, b), c),
                                 t.ternary(a, b, t.gamma(g, c))};
          for (std::size_t slot = 0; slot < 3; ++slot) {
            ++check.scanned;
            if (forms[slot] != scalar)
              record(check,
                     {.kind = "gamma-compatibility", .inputs = {a, b, c}, .slot = slot,
                      .gamma = g, .lhs = forms[slot], .rhs = scalar},
                     cap);
          }
        }
  return check;
}

AxiomCheck check_balanced(const Structure& t, std::size_t cap) {
  AxiomCheck check{.id = "balanced-associativity"};
  const std::size_t m = t.size();
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b)
      for (Elem c = 0; c < m; ++c)
        for (Elem d = 0; d < m; ++d)
          for (Elem e = 0; e < m; ++e) {
            const Elem left = t.ternary(t.ternary(a, b, c), d, e);
            const Elem mid = t.ternary(a, t.ternary(b, c, d), e);
            const Elem right = t.ternary(a, b, t.ternary(c, d, e));
            ++check.scanned;
            if (left != mid)
              record(check,
                     {.kind = "balanced-associativity", .inputs = {a, b, c, d, e},
                      .slot = 1, .lhs = left, .rhs = mid},
                     cap);
            ++check.scanned;
            if (left != right)
              record(check,
                     {.kind = "balanced-associativity", .inputs = {a, b, c, d, e},
                      .slot = 2, .lhs = left, .rhs = right},
                     cap);
          }
  return check;
}

bool zero_absorbing(const Structure& t) {
  const std::size_t m = t.size();
  const Elem zero = t.zero();
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      if (t.ternary(x, y, zero) != zero || t.ternary(x, zero, y) != zero ||
          t.ternary(zero, x, y) != zero)
        return false;
  return true;
}

}  // namespace

AxiomReport check_axioms(const Structure& t, std::size_t witness_cap) {
  AxiomReport report;
  report.witness_cap = witness_cap;
  report.checks.push_back(check_zero_identity(t, witness_cap));
  report.checks.push_back(check_plus_laws(t, witness_cap));
  report.checks.push_back(check_monotonicity(t, witness_cap));
  report.checks.push_back(check_distributivity(t, witness_cap));
  report.checks.push_back(check_gamma(t, witness_cap));
  report.checks.push_back(check_balanced(t, witness_cap));
  report.valid = true;
  for (const auto& check : report.checks) report.valid = report.valid && check.pass;
  report.zero_absorbing = zero_absorbing(t);
  return report;
}

bool axioms_hold(const Structure& t) {
  // Cheap scans first; each helper stops growing the witness list at cap 1,
  // but still scans fully, so short-circuit between checks instead.
  if (!check_zero_identity(t, 1).pass) return false;
  if (!check_plus_laws(t, 1).pass) return false;
  if (!check_gamma(t, 1).pass) return false;
  if (!check_distributivity(t, 1).pass) return false;
  if (!check_monotonicity(t, 1).pass) return false;
  if (!check_balanced(t, 1).pass) return false;
  return true;
}

json axiom_witness_to_json(const Structure& t, const AxiomWitness& w) {
  json doc;
  doc["kind"] = w.kind;
  doc["inputs"] = to_labels(t, w.inputs);
  if (!w.inputs2.empty()) doc["inputs2"] = to_labels(t, w.inputs2);
  if (w.kind == "distributivity" || w.kind == "gamma-compatibility" ||
      w.kind == "balanced-associativity")
    doc["slot"] = w.slot;
  if (w.kind == "gamma-compatibility") doc["gamma"] = t.gamma_label(w.gamma);
  doc["lhs"] = t.label(w.lhs);
  doc["rhs"] = t.label(w.rhs);
  return doc;
}

AxiomWitness axiom_witness_from_json(const Structure& t, const json& doc) {
  AxiomWitness w;
  w.kind = doc.at("kind").get<std::string>();
  for (const auto& s : doc.at("inputs")) w.inputs.push_back(t.require(s.get<std::string>()));
  if (doc.contains("inputs2"))
    for (const auto& s : doc.at("inputs2")) w.inputs2.push_back(t.require(s.get<std::string>()));
  if (doc.contains("slot")) w.slot = doc.at("slot").get<std::size_t>();
  if (doc.contains("gamma")) w.gamma = t.require_gamma(doc.at("gamma").get<std::string>());
  w.lhs = t.require(doc.at("lhs").get<std::string>());
  w.rhs = t.require(doc.at("rhs").get<std::string>());
  return w;
}

json axiom_report_to_json(const Structure& t, const AxiomReport& report) {
  json doc;
  doc["valid"] = report.valid;
  doc["witness_cap"] = report.witness_cap;
  doc["zero_absorbing"] = report.zero_absorbing;
  json checks = json::array();
  for (const auto& check : report.checks) {
    json c;
    c["id"] = check.id;
    c["status"] = check.pass ? "pass" : "fail";
    c["scanned"] = check.scanned;
    c["truncated"] = check.truncated;
    json ws = json::array();
    for (const auto& w : check.witnesses) ws.push_back(axiom_witness_to_json(t, w));
    c["witnesses"] = std::move(ws);
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

bool replay_axiom_witness(const Structure& t, const AxiomWitness& w) {
  const auto& in = w.inputs;
  if (w.kind == "zero-identity")
    return in.size() == 1 && t.plus(in[0], t.zero()) == w.lhs && w.lhs != in[0];
  if (w.kind == "plus-idempotent")
    return in.size() == 1 && t.plus(in[0], in[0]) == w.lhs && w.lhs != in[0];
  if (w.kind == "plus-commutative")
    return in.size() == 2 && t.plus(in[0], in[1]) == w.lhs &&
           t.plus(in[1], in[0]) == w.rhs && w.lhs != w.rhs;
  if (w.kind == "plus-associative")
    return in.size() == 3 && t.plus(t.plus(in[0], in[1]), in[2]) == w.lhs &&
           t.plus(in[0], t.plus(in[1], in[2])) == w.rhs && w.lhs != w.rhs;
  if (w.kind == "monotonicity") {
    if (in.size() != 3 || w.inputs2.size() != 3) return false;
    for (int i = 0; i < 3; ++i)
      if (!t.leq(in[i], w.inputs2[i])) return false;
    const Elem lo = t.ternary(in[0], in[1], in[2]);
    const Elem hi = t.ternary(w.inputs2[0], w.inputs2[1], w.inputs2[2]);
    return lo == w.lhs && hi == w.rhs && !t.leq(lo, hi);
  }
  if (w.kind == "distributivity") {
    if (in.size() != 4 || w.slot > 2) return false;
    const Elem a = in[0], b = in[1], c = in[2], d = in[3];
    const Elem sum = t.plus(a, b);
    Elem lhs, rhs;
    switch (w.slot) {
      case 0:
        lhs = t.ternary(sum, c, d);
        rhs = t.plus(t.ternary(a, c, d), t.ternary(b, c, d));
        break;
      case 1:
        lhs = t.ternary(c, sum, d);
        rhs = t.plus(t.ternary(c, a, d), t.ternary(c, b, d));
        break;
      default:
        lhs = t.ternary(c, d, sum);
        rhs = t.plus(t.ternary(c, d, a), t.ternary(c, d, b));
        break;
    }
    return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
  }
  if (w.kind == "gamma-compatibility") {
    if (in.size() != 3 || w.slot > 2 || w.gamma >= t.gamma_size()) return false;
    const Elem scalar = t.gamma(w.gamma, t.ternary(in[0], in[1], in[2]));
    Elem form;
    switch (w.slot) {
      case 0: form = t.ternary(t.gamma(w.gamma, in[0]), in[1], in[2]); break;
      case 1: form = t.ternary(in[0], t.gamma(w.gamma, in[1]), in[2]); break;
      default: form = t.ternary(in[0], in[1], t.gamma(w.gamma, in[2])); break;
    }
    return form == w.lhs && scalar == w.rhs && form != scalar;
  }
  if (w.kind == "balanced-associativity") {
    if (in.size() != 5 || (w.slot != 1 && w.slot != 2)) return false;
    const Elem left = t.ternary(t.ternary(in[0], in[1], in[2]), in[3], in[4]);
    const Elem other = w.slot == 1
                           ? t.ternary(in[0], t.ternary(in[1], in[2], in[3]), in[4])
                           : t.ternary(in[0], in[1], t.ternary(in[2], in[3], in[4]));
    return left == w.lhs && other == w.rhs && left != other;
  }
  return false;
}

}  // namespace tgs
