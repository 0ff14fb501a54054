// Bundled fixture documents (structures and code specs) with a checksummed
// manifest. The canonical serialized text is the artifact of record; the
// fixtures/ directory of the repository is materialized from it.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tgs {

inline constexpr const char* kLibraryVersion = "1.0.0";

std::vector<std::string> fixture_names();          // sorted
std::string fixture_document(const std::string& name);  // throws NotFound
nlohmann::json fixtures_manifest();                // version + name/sha256/bytes

std::string sha256_hex(const std::string& data);

}  // namespace tgs
