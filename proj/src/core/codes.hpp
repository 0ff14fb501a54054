// The four code constructions over T^n, the constraint morphism Phi, and
// code parameters (cardinality, dimension, minimum distance, radius).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/common.hpp"
#include "core/quotient.hpp"
#include "core/structure.hpp"
#include "core/words.hpp"

namespace tgs {

enum class Construction { IdealPower, Constraint, Kernel, Generated };

const char* construction_name(Construction c);

// Constraint parameter families A, B of equal length n.
struct Morphism {
  std::vector<Elem> a;
  std::vector<Elem> b;
};

Morphism build_phi(const Structure& t, std::vector<Elem> a, std::vector<Elem> b);

// Phi(w) = (+)-fold of [a_i, w_i, b_j] over the full (i, j) grid.
Elem eval_phi(const Structure& t, const Morphism& phi, const Word& w);

struct Code {
  Structure t;  // own copy; handles stay independent of their source structure
  Construction construction = Construction::IdealPower;
  std::size_t n = 0;
  std::vector<WordRank> members;  // ascending rank = canonical order

  bool has_ideal = false;
  ElemMask ideal = 0;  // power/constraint ideal; {zero} for kernel codes
  std::optional<Morphism> phi;
  std::vector<Word> generators;

  // Closure of members under coordinatewise (+) / ternary / gamma; verified
  // exhaustively for small member sets, otherwise skipped.
  bool closure_checked = false;
  bool closed = false;

  // Constraint codes: whether {w : Phi(w) in I} coincides with the
  // coordinatewise constraint set.
  std::optional<bool> phi_equivalence;

  // Syndrome machinery, present for constraint/kernel codes.
  std::optional<Quotient> quotient;

  bool contains(WordRank rank) const;
  bool contains_word(const Word& w) const;
};

// Code-spec document (the "tgs" path key, if present, is ignored here; the
// caller resolves it):
//   {"construction": "...", "n": int, "ideal": [...], "A": [...],
//    "B": [...], "generators": [[...]]}
Code build_code(const Structure& t, const nlohmann::json& spec,
                const Bounds& bounds, bool force);

// Individual constructions (spec parsing not required).
Code ideal_power_code(const Structure& t, ElemMask ideal, std::size_t n,
                      const Bounds& bounds, bool force);
Code constraint_code(const Structure& t, std::vector<Elem> a, std::vector<Elem> b,
                     ElemMask ideal, const Bounds& bounds, bool force);
Code kernel_code(const Structure& t, std::vector<Elem> a, std::vector<Elem> b,
                 const Bounds& bounds, bool force);
Code generated_code(const Structure& t, std::vector<Word> generators,
                    const Bounds& bounds, bool force);

struct CodeParams {
  std::size_t n = 0;
  std::size_t alphabet = 0;        // |T|
  std::uint64_t cardinality = 0;   // exact integer of record
  double k = 0.0;                  // log_{|T|} |C|
  bool zero_in_code = false;
  std::optional<int> d;
  std::string d_source;            // "tgs-weight" or "pairwise-hamming"
  std::optional<int> radius;           // floor((d-1)/2)
  std::optional<int> mu_literal;       // min weight of a nonzero ideal element
  std::optional<int> radius_literal;   // floor((mu-1)/2)
  // Cross-checks against the structural predictions.
  std::optional<std::uint64_t> cardinality_formula;  // |I|^n, ideal powers
  std::optional<bool> cardinality_ok;
  std::optional<int> d_predicted;  // from minimal nonzero ideal elements
  std::optional<bool> d_prediction_ok;
};

CodeParams code_params(const Code& code);

struct SpanReport {
  bool applicable = false;  // generators inside ideal^n
  std::optional<Word> offending_generator;
  bool inclusion = false;   // <G> subset of ideal^n (hard requirement)
  bool equality = false;    // <G> equals ideal^n
  std::uint64_t span_size = 0;
  std::uint64_t power_size = 0;
};

SpanReport check_span_theorem(const Structure& t, const std::vector<Word>& generators,
                              ElemMask ideal, std::size_t n, const Bounds& bounds,
                              bool force);

nlohmann::json code_params_to_json(const Code& code, const CodeParams& params);
nlohmann::json code_members_to_json(const Code& code);
nlohmann::json span_report_to_json(const Structure& t, const SpanReport& report);

}  // namespace tgs
