// Exhaustive verification of the five structure axioms plus the zero
// identity, with replayable violation witnesses.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/common.hpp"
#include "core/structure.hpp"

namespace tgs {

// One concrete violation. `kind` selects the interpretation:
//   zero-identity          inputs={x}
//   plus-idempotent        inputs={x}
//   plus-commutative       inputs={x,y}
//   plus-associative       inputs={x,y,z}
//   monotonicity           inputs=lo triple, inputs2=hi triple (pointwise >=)
//   distributivity         inputs={a,b,c,d}, slot = coordinate carrying a(+)b
//   gamma-compatibility    inputs={a,b,c}, gamma = action index, slot = slot
//   balanced-associativity inputs={a,b,c,d,e}, slot = 1 or 2 (which regrouping)
// lhs/rhs are the two evaluated sides (for monotonicity: the two ternary
// values with lhs not below rhs).
struct AxiomWitness {
  std::string kind;
  std::vector<Elem> inputs;
  std::vector<Elem> inputs2;
  std::size_t slot = 0;
  std::size_t gamma = 0;
  Elem lhs = 0;
  Elem rhs = 0;
};

struct AxiomCheck {
  std::string id;     // "zero-identity", "plus-laws", "ternary-monotonicity",
                      // "distributivity", "gamma-compatibility",
                      // "balanced-associativity"
  bool pass = true;
  std::vector<AxiomWitness> witnesses;
  std::uint64_t scanned = 0;
  bool truncated = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;  // fixed order as listed above
  bool valid = false;              // all checks pass
  bool zero_absorbing = false;     // informational: [x,y,0]=[x,0,y]=[0,x,y]=0
  std::size_t witness_cap = 0;
};

AxiomReport check_axioms(const Structure& t, std::size_t witness_cap);

// Short-circuit variant used to classify structures; no witnesses collected.
bool axioms_hold(const Structure& t);

nlohmann::json axiom_witness_to_json(const Structure& t, const AxiomWitness& w);
AxiomWitness axiom_witness_from_json(const Structure& t, const nlohmann::json& doc);
nlohmann::json axiom_report_to_json(const Structure& t, const AxiomReport& report);

// Re-evaluates the witness through the table evaluators; true iff the
// recorded violation is reproduced.
bool replay_axiom_witness(const Structure& t, const AxiomWitness& w);

}  // namespace tgs
