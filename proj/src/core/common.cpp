#include "core/common.hpp"

#include <charconv>

namespace tgs {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Bounds: return "bounds";
    case ErrorKind::InvalidStructure: return "invalid-structure";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::Internal: return "internal";
  }
  return "internal";
}

Bounds parse_bounds(const std::string& spec) {
  Bounds bounds;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Usage, "bounds entry '" + item + "' is not key=value");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    std::size_t parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size() || parsed == 0)
      throw Error(ErrorKind::Usage, "bounds value '" + value + "' is not a positive integer");
    if (key == "carrier") {
      bounds.max_carrier = parsed;
    } else if (key == "words") {
      bounds.max_words = parsed;
    } else if (key == "witnesses") {
      bounds.witness_cap = parsed;
    } else {
      throw Error(ErrorKind::Usage, "unknown bounds key '" + key + "'");
    }
  }
  return bounds;
}

}  // namespace tgs
