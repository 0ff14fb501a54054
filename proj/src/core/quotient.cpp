#include "core/quotient.hpp"

#include <algorithm>
#include <numeric>

#include "core/axioms.hpp"
#include "core/ideals.hpp"

namespace tgs {

using nlohmann::json;

std::vector<ElemMask> bourne_partition(const Structure& t, ElemMask ideal) {
  const std::size_t m = t.size();
  std::vector<Elem> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Elem a, Elem b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  const auto members = mask_elements(ideal);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = Elem(x + 1); y < m; ++y) {
      bool related = false;
      for (Elem i1 : members) {
        for (Elem i2 : members)
          if (t.plus(x, i1) == t.plus(y, i2)) {
            related = true;
            break;
          }
        if (related) break;
      }
      if (related) unite(x, y);
    }

  std::vector<ElemMask> classes;
  for (Elem x = 0; x < m; ++x)
    if (root(x) == x) {
      ElemMask cls = 0;
      for (Elem y = 0; y < m; ++y)
        if (root(y) == x) cls |= bit(y);
      classes.push_back(cls);
    }
  // Roots are minimal indices, so classes come out sorted by least element.
  return classes;
}

Quotient build_quotient(const Structure& t, ElemMask ideal) {
  if (!is_k_ideal(t, ideal).ok)
    throw Error(ErrorKind::Usage, "quotient requires a k-ideal");

  Quotient q;
  q.classes = bourne_partition(t, ideal);
  const std::size_t m = t.size();
  const std::size_t k = q.classes.size();
  q.class_of.assign(m, -1);
  for (std::size_t c = 0; c < k; ++c)
    for (Elem x : mask_elements(q.classes[c])) q.class_of[x] = int(c);

  // Zero's class is listed first: classes are sorted by least element and the
  // zero class contains every ideal member, in particular the least one.
  std::vector<Elem> rep(k);
  for (std::size_t c = 0; c < k; ++c)
    rep[c] = Elem(std::countr_zero(q.classes[c]));

  std::vector<std::string> labels(k);
  for (std::size_t c = 0; c < k; ++c) labels[c] = t.label(rep[c]) + "+I";

  std::vector<Elem> plus(k * k), ternary(k * k * k),
      gamma(t.gamma_size() * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      plus[a * k + b] = Elem(q.class_of[t.plus(rep[a], rep[b])]);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        ternary[(a * k + b) * k + c] =
            Elem(q.class_of[t.ternary(rep[a], rep[b], rep[c])]);
  for (std::size_t g = 0; g < t.gamma_size(); ++g)
    for (std::size_t c = 0; c < k; ++c)
      gamma[g * k + c] = Elem(q.class_of[t.gamma(g, rep[c])]);

  q.induced = Structure::from_tables(labels, Elem(q.class_of[t.zero()]),
                                     std::move(plus), std::move(ternary),
                                     std::vector<std::string>(t.gamma_labels()),
                                     std::move(gamma));

  // Representative independence, one slot at a time; slot-wise congruence
  // composes to full independence by transitivity of the partition.
  q.well_defined = true;
  q.witness = nullptr;
  auto fail = [&](const char* op, std::size_t slot, Elem x, Elem x2, Elem c1,
                  Elem c2, int cls1, int cls2) {
    q.well_defined = false;
    json w;
    w["operation"] = op;
    w["slot"] = slot;
    w["representatives"] = json::array({t.label(x), t.label(x2)});
    w["context"] = json::array({t.label(c1), t.label(c2)});
    w["classes"] = json::array({cls1, cls2});
    q.witness = std::move(w);
  };

  for (Elem x = 0; x < m && q.well_defined; ++x)
    for (Elem x2 = 0; x2 < m && q.well_defined; ++x2) {
      if (q.class_of[x] != q.class_of[x2]) continue;
      for (Elem y = 0; y < m && q.well_defined; ++y) {
        const int c1 = q.class_of[t.plus(x, y)], c2 = q.class_of[t.plus(x2, y)];
        if (c1 != c2) fail("plus", 0, x, x2, y, y, c1, c2);
        const int d1 = q.class_of[t.plus(y, x)], d2 = q.class_of[t.plus(y, x2)];
        if (q.well_defined && d1 != d2) fail("plus", 1, x, x2, y, y, d1, d2);
      }
      for (std::size_t g = 0; g < t.gamma_size() && q.well_defined; ++g) {
        const int c1 = q.class_of[t.gamma(g, x)], c2 = q.class_of[t.gamma(g, x2)];
        if (c1 != c2) fail("gamma", g, x, x2, x, x2, c1, c2);
      }
      for (Elem y = 0; y < m && q.well_defined; ++y)
        for (Elem z = 0; z < m && q.well_defined; ++z) {
          int c1 = q.class_of[t.ternary(x, y, z)], c2 = q.class_of[t.ternary(x2, y, z)];
          if (c1 != c2) fail("ternary", 0, x, x2, y, z, c1, c2);
          if (!q.well_defined) break;
          c1 = q.class_of[t.ternary(y, x, z)];
          c2 = q.class_of[t.ternary(y, x2, z)];
          if (c1 != c2) fail("ternary", 1, x, x2, y, z, c1, c2);
          if (!q.well_defined) break;
          c1 = q.class_of[t.ternary(y, z, x)];
          c2 = q.class_of[t.ternary(y, z, x2)];
          if (c1 != c2) fail("ternary", 2, x, x2, y, z, c1, c2);
        }
    }
  return q;
}

json quotient_to_json(const Structure& t, const Quotient& q) {
  json doc;
  doc["well_defined"] = q.well_defined;
  doc["witness"] = q.witness;
  json classes = json::array();
  for (const auto& cls : q.classes) classes.push_back(mask_to_labels(t, cls));
  doc["classes"] = std::move(classes);
  json class_of;
  for (Elem x = 0; x < t.size(); ++x) class_of[t.label(x)] = q.class_of[x];
  doc["class_of"] = std::move(class_of);
  doc["zero_class"] = q.class_of[t.zero()];
  doc["structure"] = q.induced.to_json();
  return doc;
}

}  // namespace tgs
