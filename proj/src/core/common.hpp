// Shared basic types: element indices, carrier masks, bounds, errors.
#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tgs {

using Elem = unsigned;          // index into the carrier
using ElemMask = std::uint64_t; // subset of the carrier, bit i = element i

// Hard limit of the mask representation; enumeration bounds are far lower.
inline constexpr std::size_t kCarrierLimit = 64;

inline constexpr ElemMask bit(Elem x) { return ElemMask{1} << x; }
inline constexpr bool has(ElemMask s, Elem x) { return (s >> x) & 1; }
inline int popcount(ElemMask s) { return std::popcount(s); }

// Enumeration caps. All three are overridable through the "--bounds" flag of
// the CLI or the TGS_BOUNDS environment variable ("carrier=..,words=..,
// witnesses=..").
struct Bounds {
  std::size_t max_carrier = 12;         // k-ideal enumeration refuses above this
  std::size_t max_words = 1u << 20;     // word-space / code-member cap
  std::size_t witness_cap = 32;         // reported witnesses per check
};

enum class ErrorKind {
  Parse,
  Usage,
  Bounds,
  InvalidStructure,
  NotFound,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parses "carrier=12,words=1048576,witnesses=32"; keys may appear in any
// order and any subset. Empty or null-ish input yields the defaults.
Bounds parse_bounds(const std::string& spec);

}  // namespace tgs
