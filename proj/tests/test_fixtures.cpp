#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/fixtures.hpp"
#include "support.hpp"

using namespace tgs;

TEST_CASE("bundle lists the expected documents") {
  const auto names = fixture_names();
  const std::vector<std::string> expected = {"M3.json",     "M3xM3.json",
                                             "P3.json",     "chain2.json",
                                             "kernel_n1.json", "repetition.json",
                                             "sec42.json"};
  CHECK(names == expected);
  CHECK_THROWS_AS(fixture_document("nope.json"), Error);
}

TEST_CASE("manifest checksums match the documents") {
  const auto manifest = fixtures_manifest();
  CHECK(manifest["version"] == kLibraryVersion);
  REQUIRE(manifest["files"].size() == fixture_names().size());
  for (const auto& f : manifest["files"]) {
    const std::string text = fixture_document(f["name"]);
    CHECK(f["sha256"] == sha256_hex(text));
    CHECK(f["bytes"] == text.size());
  }
}

TEST_CASE("sha256 reference vectors") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("bundled structures have the advertised validity") {
  using tgs::testing::load_fixture;
  CHECK(load_fixture("M3.json").is_valid());
  CHECK(load_fixture("chain2.json").is_valid());
  CHECK(load_fixture("M3xM3.json").is_valid());
  CHECK(!load_fixture("P3.json").is_valid());
}

#ifdef TGS_SOURCE_DIR
TEST_CASE("checked-in fixtures match the embedded bundle byte for byte") {
  const std::filesystem::path dir = std::filesystem::path(TGS_SOURCE_DIR) / "fixtures";
  for (const auto& name : fixture_names()) {
    std::ifstream in(dir / name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing fixtures/", name);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    CHECK_MESSAGE(buffer.str() == fixture_document(name), "fixtures/", name,
                  " drifted from the embedded bundle");
  }
  // The checked-in manifest, likewise.
  std::ifstream in(dir / "manifest.json", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == fixtures_manifest().dump(2) + "\n");
}
#endif
