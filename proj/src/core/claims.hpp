// Brute-force adjudication of the structural claims over fixture sets:
// dimension and minimum-distance formulas, distance monotonicity under ideal
// inclusion, localized error propagation, syndrome invariance, and the
// interaction-join hypothesis. Falsified claims carry standalone replayable
// counterexample documents.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/common.hpp"

namespace tgs {

struct SearchOptions {
  std::size_t m = 0;            // carrier size; 0 disables the search
  std::uint64_t candidates = 0; // tables to draw
  std::uint64_t seed = 0;
};

struct ClaimsOptions {
  Bounds bounds;
  int max_n = 3;
  std::size_t witness_cap = 8;  // counterexamples kept per claim
  bool timings = false;         // include wall time in the report (breaks
                                // byte-for-byte reproducibility, off by default)
  SearchOptions search;
};

// fixtures: (name, document) pairs; TGS documents carry "elements", code
// specs carry "construction" and reference their TGS fixture by name via
// the "tgs" key.
nlohmann::json run_suite(const std::vector<std::pair<std::string, nlohmann::json>>& fixtures,
                         const ClaimsOptions& options);

// Re-evaluates a standalone counterexample document through the public
// operations; true iff the recorded violation is reproduced.
bool replay_counterexample(const nlohmann::json& doc);

}  // namespace tgs
