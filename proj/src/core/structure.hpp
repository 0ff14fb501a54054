// Finite commutative ternary Gamma-semiring given by explicit operation
// tables, plus the derived order x <= y  <=>  x (+) y = y.
#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/common.hpp"

namespace tgs {

class Structure {
 public:
  Structure() = default;
  Structure(const Structure& other);
  Structure& operator=(const Structure& other);
  Structure(Structure&&) = default;
  Structure& operator=(Structure&&) = default;

  // Document format:
  //   {"elements": ["0","a","1"], "zero": "0", "gamma": ["e"],
  //    "plus": [[...]], "ternary": [[[...]]], "gamma_action": {"e": [...]},
  //    "description": "..."}          (description optional, preserved)
  // Rejects missing keys, unknown keys, duplicate or unknown labels,
  // non-square/non-cubic tables and oversized carriers.
  static Structure from_json(const nlohmann::json& doc);
  static Structure from_json_text(const std::string& text);
  nlohmann::json to_json() const;
  std::string to_json_text() const;  // canonical: sorted keys, 2-space indent

  std::size_t size() const { return labels_.size(); }
  std::size_t gamma_size() const { return gamma_labels_.size(); }
  Elem zero() const { return zero_; }
  ElemMask carrier_mask() const { return size() == kCarrierLimit ? ~ElemMask{0} : bit(Elem(size())) - 1; }

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& gamma_label(std::size_t g) const { return gamma_labels_[g]; }
  const std::vector<std::string>& gamma_labels() const { return gamma_labels_; }
  const std::string& description() const { return description_; }

  std::optional<Elem> find(const std::string& label) const;
  std::optional<std::size_t> find_gamma(const std::string& label) const;
  // Throws ErrorKind::NotFound for unknown labels.
  Elem require(const std::string& label) const;
  std::size_t require_gamma(const std::string& label) const;

  Elem plus(Elem x, Elem y) const { return plus_[x * size() + y]; }
  Elem ternary(Elem x, Elem y, Elem z) const {
    const std::size_t m = size();
    return ternary_[(x * m + y) * m + z];
  }
  Elem gamma(std::size_t g, Elem x) const { return gamma_[g * size() + x]; }
  bool leq(Elem x, Elem y) const { return plus(x, y) == y; }
  // {y : y <= x}; meaningful once the plus laws hold, computable always.
  ElemMask down_set(Elem x) const { return down_[x]; }

  bool in_range(Elem x) const { return x < size(); }

  // True when the full axiom check (including the zero identity) passes.
  // Memoized; the underlying scan is pure.
  bool is_valid() const;

  // Builds a structure directly from tables (quotients, products, search).
  static Structure from_tables(std::vector<std::string> labels, Elem zero,
                               std::vector<Elem> plus, std::vector<Elem> ternary,
                               std::vector<std::string> gamma_labels,
                               std::vector<Elem> gamma_action,
                               std::string description = "");

 private:
  void finish();  // derives down-set masks, validates table entries

  std::vector<std::string> labels_;
  Elem zero_ = 0;
  std::vector<Elem> plus_;           // m*m, row-major
  std::vector<Elem> ternary_;        // m*m*m
  std::vector<std::string> gamma_labels_;
  std::vector<Elem> gamma_;          // |Gamma|*m
  std::vector<ElemMask> down_;       // per element
  std::string description_;

  // 0 = unknown, 1 = valid, 2 = invalid. Benign race: recomputation is pure.
  mutable std::atomic<int> validity_{0};
};

// Parses "a,0,1" against the structure's labels. Empty string -> empty list.
std::vector<Elem> parse_labels_csv(const Structure& t, const std::string& csv);
std::vector<std::string> to_labels(const Structure& t, const std::vector<Elem>& xs);

ElemMask mask_of(const std::vector<Elem>& xs);
std::vector<Elem> mask_elements(ElemMask mask);
nlohmann::json mask_to_labels(const Structure& t, ElemMask mask);
ElemMask mask_from_labels(const Structure& t, const nlohmann::json& labels);

}  // namespace tgs
