// k-ideals, their enumeration, annihilators, prime/semiprime tests and the
// inclusion lattice with meet, join and a distributivity scan.
//
// The k-ideal predicate has two modes. The default ("strict") requires:
//   zero membership, downward closure, ternary absorption in every slot,
//   and closure under (+).  "literal" mode drops the (+)-closure clause.
#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/common.hpp"
#include "core/structure.hpp"

namespace tgs {

struct IdealWitness {
  std::string clause;  // "contains-zero", "downward-closed", "plus-closed",
                       // "ternary-absorption-slot1|2|3"
  std::vector<Elem> inputs;  // elements involved, clause-specific
  std::optional<Elem> value; // offending evaluated element, when applicable
};

struct IdealCheck {
  bool ok = false;
  std::optional<IdealWitness> witness;
};

// First violation is reported in a fixed scan order; for the absorption
// clauses the cofactor y runs from the top of the carrier downward, which
// surfaces the large products that actually escape the ideal.
IdealCheck is_k_ideal(const Structure& t, ElemMask s, bool literal = false);

// All k-ideals in canonical order (cardinality, then membership of
// low-indexed elements first).  Generates downsets of the derived order and
// filters by the remaining clauses; refuses carriers above bounds.max_carrier.
std::vector<ElemMask> enumerate_k_ideals(const Structure& t, bool literal,
                                         const Bounds& bounds);

// Least k-ideal containing the seed; always contains zero.
ElemMask ideal_closure(const Structure& t, ElemMask seed, bool literal = false);

inline ElemMask meet_ideals(ElemMask a, ElemMask b) { return a & b; }
ElemMask join_ideals(const Structure& t, ElemMask a, ElemMask b, bool literal = false);

// All x in I\{0} with no y in I\{0} strictly below x. Empty for I = {0}.
ElemMask minimal_nonzero_elements(const Structure& t, ElemMask ideal);

// {x : [x,a,y] = 0 for all a in A, y in T}.
ElemMask annihilator(const Structure& t, ElemMask subset);

enum class PrimeStatus { Yes, No, NotApplicable };

struct PrimeResult {
  PrimeStatus status = PrimeStatus::NotApplicable;
  std::optional<std::array<Elem, 3>> witness;  // violating triple (x,x,x for semiprime)
};

PrimeResult is_prime(const Structure& t, ElemMask ideal);
PrimeResult is_semiprime(const Structure& t, ElemMask ideal);

struct Lattice {
  std::vector<ElemMask> nodes;                   // canonical order
  std::vector<std::pair<int, int>> hasse;        // cover edges (sub, super)
  std::vector<std::vector<int>> meet;            // index tables
  std::vector<std::vector<int>> join;
  bool distributive = true;
  std::optional<std::array<int, 3>> counterexample;  // (I,J,K) node indices
  bool literal = false;
};

Lattice build_lattice(const Structure& t, bool literal, const Bounds& bounds);

nlohmann::json ideal_check_to_json(const Structure& t, ElemMask s, const IdealCheck& check);
nlohmann::json lattice_to_json(const Structure& t, const Lattice& lattice);

}  // namespace tgs
