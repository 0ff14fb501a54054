// Bourne quotient T/I: classes of the transitive closure of
//   x ~ y  <=>  exists i1, i2 in I with x (+) i1 = y (+) i2,
// induced operation tables from least representatives, and an exhaustive
// representative-independence check.
#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "core/common.hpp"
#include "core/structure.hpp"

namespace tgs {

struct Quotient {
  std::vector<ElemMask> classes;  // sorted by least element; classes[0] holds zero
  std::vector<int> class_of;      // per carrier element
  bool well_defined = false;
  nlohmann::json witness;         // two representative choices that disagree
  Structure induced;              // labels "<least-rep>+I"; tables from reps
};

std::vector<ElemMask> bourne_partition(const Structure& t, ElemMask ideal);

// Requires `ideal` to pass the strict k-ideal predicate.
Quotient build_quotient(const Structure& t, ElemMask ideal);

inline int project(const Quotient& q, Elem x) { return q.class_of[x]; }

nlohmann::json quotient_to_json(const Structure& t, const Quotient& q);

}  // namespace tgs
