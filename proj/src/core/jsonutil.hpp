#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace tgs {

// Rounds to 12 significant digits; reports use this fixed formatting so that
// identical runs serialize identically.
inline double round_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

inline std::string format_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

// Canonical document serialization: sorted keys, two-space indent, newline.
inline std::string dump_canonical(const nlohmann::json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace tgs
