#include "core/ideals.hpp"

#include <algorithm>
#include <map>

namespace tgs {

using nlohmann::json;

IdealCheck is_k_ideal(const Structure& t, ElemMask s, bool literal) {
  const std::size_t m = t.size();
  if (!has(s, t.zero()))
    return {false, IdealWitness{.clause = "contains-zero", .inputs = {t.zero()}}};
  for (Elem a = 0; a < m; ++a) {
    if (!has(s, a)) continue;
    const ElemMask below = t.down_set(a);
    if ((below & s) != below) {
      const Elem missing = Elem(std::countr_zero(below & ~s));
      return {false, IdealWitness{.clause = "downward-closed", .inputs = {missing, a}}};
    }
  }
  if (!literal) {
    for (Elem a = 0; a < m; ++a) {
      if (!has(s, a)) continue;
      for (Elem b = 0; b < m; ++b) {
        if (!has(s, b)) continue;
        const Elem sum = t.plus(a, b);
        if (!has(s, sum))
          return {false, IdealWitness{.clause = "plus-closed", .inputs = {a, b}, .value = sum}};
      }
    }
  }
  // Absorption. The cofactor y descends from the top index; violations come
  // from products that land high in the order, so they surface early.
  for (Elem x = 0; x < m; ++x) {
    for (Elem yi = 0; yi < m; ++yi) {
      const Elem y = Elem(m - 1 - yi);
      for (Elem a = 0; a < m; ++a) {
        if (!has(s, a)) continue;
        Elem got = t.ternary(x, y, a);
        if (!has(s, got))
          return {false, IdealWitness{.clause = "ternary-absorption-slot3",
                                      .inputs = {x, y, a}, .value = got}};
        got = t.ternary(x, a, y);
        if (!has(s, got))
          return {false, IdealWitness{.clause = "ternary-absorption-slot2",
                                      .inputs = {x, a, y}, .value = got}};
        got = t.ternary(a, x, y);
        if (!has(s, got))
          return {false, IdealWitness{.clause = "ternary-absorption-slot1",
                                      .inputs = {a, x, y}, .value = got}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

// Canonical ideal order: by cardinality, ties broken by membership of the
// lowest-indexed differing element (the set containing it sorts first).
bool canonical_less(ElemMask a, ElemMask b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const Elem diff = Elem(std::countr_zero(a ^ b));
  return has(a, diff);
}

// All downsets of the derived order, via a linear extension: an element may
// join only when everything below it is already in.
void collect_downsets(const Structure& t, const std::vector<Elem>& order,
                      std::size_t i, ElemMask current, std::vector<ElemMask>& out) {
  if (i == order.size()) {
    out.push_back(current);
    return;
  }
  collect_downsets(t, order, i + 1, current, out);
  const Elem x = order[i];
  const ElemMask below = t.down_set(x) & ~bit(x);
  if ((below & current) == below)
    collect_downsets(t, order, i + 1, current | bit(x), out);
}

}  // namespace

std::vector<ElemMask> enumerate_k_ideals(const Structure& t, bool literal,
                                         const Bounds& bounds) {
  const std::size_t m = t.size();
  if (m > bounds.max_carrier)
    throw Error(ErrorKind::Bounds,
                "carrier size " + std::to_string(m) + " exceeds the ideal enumeration bound " +
                    std::to_string(bounds.max_carrier) + " (raise with bounds carrier=...)");

  std::vector<ElemMask> downsets;
  if (t.is_valid()) {
    // Linear extension: ascending by number of elements below, then by index.
    std::vector<Elem> order(m);
    for (Elem x = 0; x < m; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
      return popcount(t.down_set(a)) < popcount(t.down_set(b));
    });
    collect_downsets(t, order, 0, 0, downsets);
  } else {
    // The derived relation of a structure that fails the plus laws need not
    // be an order, so downset generation is unsound there; scan all subsets.
    if (m > 20)
      throw Error(ErrorKind::Bounds,
                  "ideal enumeration on a structure failing the axiom check is "
                  "limited to 20 elements");
    for (ElemMask s = 0; s < (ElemMask{1} << m); ++s) downsets.push_back(s);
  }

  std::vector<ElemMask> ideals;
  for (ElemMask s : downsets)
    if (s != 0 && is_k_ideal(t, s, literal).ok) ideals.push_back(s);
  std::sort(ideals.begin(), ideals.end(), canonical_less);
  return ideals;
}

ElemMask ideal_closure(const Structure& t, ElemMask seed, bool literal) {
  const std::size_t m = t.size();
  ElemMask s = seed | bit(t.zero());
  for (;;) {
    ElemMask next = s;
    for (Elem a = 0; a < m; ++a)
      if (has(next, a)) next |= t.down_set(a);
    if (!literal)
      for (Elem a = 0; a < m; ++a) {
        if (!has(next, a)) continue;
        for (Elem b = 0; b < m; ++b)
          if (has(next, b)) next |= bit(t.plus(a, b));
      }
    for (Elem a = 0; a < m; ++a) {
      if (!has(next, a)) continue;
      for (Elem x = 0; x < m; ++x)
        for (Elem y = 0; y < m; ++y)
          next |= bit(t.ternary(x, y, a)) | bit(t.ternary(x, a, y)) | bit(t.ternary(a, x, y));
    }
    if (next == s) return s;
    s = next;
  }
}

ElemMask join_ideals(const Structure& t, ElemMask a, ElemMask b, bool literal) {
  return ideal_closure(t, a | b, literal);
}

ElemMask minimal_nonzero_elements(const Structure& t, ElemMask ideal) {
  const ElemMask nonzero = ideal & ~bit(t.zero());
  ElemMask out = 0;
  for (Elem x : mask_elements(nonzero)) {
    const ElemMask strictly_below = t.down_set(x) & ~bit(x);
    if ((strictly_below & nonzero) == 0) out |= bit(x);
  }
  return out;
}

ElemMask annihilator(const Structure& t, ElemMask subset) {
  const std::size_t m = t.size();
  ElemMask out = 0;
  for (Elem x = 0; x < m; ++x) {
    bool kills = true;
    for (Elem a = 0; a < m && kills; ++a) {
      if (!has(subset, a)) continue;
      for (Elem y = 0; y < m; ++y)
        if (t.ternary(x, a, y) != t.zero()) {
          kills = false;
          break;
        }
    }
    if (kills) out |= bit(x);
  }
  return out;
}

PrimeResult is_prime(const Structure& t, ElemMask ideal) {
  const std::size_t m = t.size();
  if (ideal == t.carrier_mask()) return {PrimeStatus::NotApplicable, std::nullopt};
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z)
        if (has(ideal, t.ternary(x, y, z)) &&
            !(has(ideal, x) || has(ideal, y) || has(ideal, z)))
          return {PrimeStatus::No, std::array<Elem, 3>{x, y, z}};
  return {PrimeStatus::Yes, std::nullopt};
}

PrimeResult is_semiprime(const Structure& t, ElemMask ideal) {
  if (ideal == t.carrier_mask()) return {PrimeStatus::NotApplicable, std::nullopt};
  for (Elem x = 0; x < t.size(); ++x)
    if (has(ideal, t.ternary(x, x, x)) && !has(ideal, x))
      return {PrimeStatus::No, std::array<Elem, 3>{x, x, x}};
  return {PrimeStatus::Yes, std::nullopt};
}

Lattice build_lattice(const Structure& t, bool literal, const Bounds& bounds) {
  Lattice lattice;
  lattice.literal = literal;
  lattice.nodes = enumerate_k_ideals(t, literal, bounds);
  const int n = int(lattice.nodes.size());

  std::map<ElemMask, int> index;
  for (int i = 0; i < n; ++i) index[lattice.nodes[i]] = i;

  lattice.meet.assign(n, std::vector<int>(n, -1));
  lattice.join.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ElemMask m1 = meet_ideals(lattice.nodes[i], lattice.nodes[j]);
      const ElemMask j1 = join_ideals(t, lattice.nodes[i], lattice.nodes[j], literal);
      auto mi = index.find(m1);
      auto ji = index.find(j1);
      if (mi == index.end() || ji == index.end())
        throw Error(ErrorKind::Internal, "ideal enumeration is not closed under meet/join");
      lattice.meet[i][j] = mi->second;
      lattice.join[i][j] = ji->second;
    }

  // Cover edges of the inclusion order.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const ElemMask a = lattice.nodes[i], b = lattice.nodes[j];
      if ((a & b) != a || a == b) continue;  // need a strictly below b
      bool covered = true;
      for (int k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        const ElemMask c = lattice.nodes[k];
        if ((a & c) == a && (c & b) == c && a != c && c != b) covered = false;
      }
      if (covered) lattice.hasse.emplace_back(i, j);
    }
  std::sort(lattice.hasse.begin(), lattice.hasse.end());

  for (int i = 0; i < n && lattice.distributive; ++i)
    for (int j = 0; j < n && lattice.distributive; ++j)
      for (int k = 0; k < n; ++k) {
        const int lhs = lattice.meet[i][lattice.join[j][k]];
        const int rhs = lattice.join[lattice.meet[i][j]][lattice.meet[i][k]];
        if (lhs != rhs) {
          lattice.distributive = false;
          lattice.counterexample = std::array<int, 3>{i, j, k};
          break;
        }
      }
  return lattice;
}

json ideal_check_to_json(const Structure& t, ElemMask s, const IdealCheck& check) {
  json doc;
  doc["set"] = mask_to_labels(t, s);
  doc["is_k_ideal"] = check.ok;
  if (check.witness) {
    json w;
    w["clause"] = check.witness->clause;
    w["inputs"] = to_labels(t, check.witness->inputs);
    if (check.witness->value) w["value"] = t.label(*check.witness->value);
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

json lattice_to_json(const Structure& t, const Lattice& lattice) {
  json doc;
  doc["mode"] = lattice.literal ? "literal" : "strict";
  json nodes = json::array();
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    json node;
    node["index"] = i;
    node["labels"] = mask_to_labels(t, lattice.nodes[i]);
    node["size"] = popcount(lattice.nodes[i]);
    nodes.push_back(std::move(node));
  }
  doc["ideals"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [a, b] : lattice.hasse) edges.push_back(json::array({a, b}));
  doc["hasse"] = std::move(edges);
  doc["meet"] = lattice.meet;
  doc["join"] = lattice.join;
  doc["distributive"] = lattice.distributive;
  if (lattice.counterexample) {
    const auto& [i, j, k] = *lattice.counterexample;
    doc["counterexample"] = json::array({i, j, k});
  } else {
    doc["counterexample"] = nullptr;
  }
  return doc;
}

}  // namespace tgs
