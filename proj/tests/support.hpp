// Shared helpers for the unit suites.
#pragma once

#include <string>
#include <vector>

#include "core/fixtures.hpp"
#include "core/structure.hpp"
#include "core/words.hpp"

namespace tgs::testing {

inline Structure load_fixture(const std::string& name) {
  return Structure::from_json_text(fixture_document(name));
}

inline Word word_of(const Structure& t, const std::vector<std::string>& labels) {
  Word w;
  for (const auto& s : labels) w.push_back(t.require(s));
  return w;
}

inline std::vector<std::string> labels_of(const Structure& t, const Word& w) {
  return to_labels(t, w);
}

}  // namespace tgs::testing
