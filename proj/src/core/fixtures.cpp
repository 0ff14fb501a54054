#include "core/fixtures.hpp"

#include <map>

#include <openssl/evp.h>

#include "core/jsonutil.hpp"
#include "core/structure.hpp"

namespace tgs {

using nlohmann::json;

namespace {

// Three-element chain 0 < a < 1 with join for (+) and meet for the ternary
// product; the workhorse valid fixture.
Structure make_m3() {
  const std::size_t m = 3;
  std::vector<Elem> plus(m * m), tern(m * m * m), gamma(m);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) plus[x * m + y] = std::max(x, y);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z) tern[(x * m + y) * m + z] = std::min({x, y, z});
  for (Elem x = 0; x < m; ++x) gamma[x] = x;
  return Structure::from_tables(
      {"0", "a", "1"}, 0, std::move(plus), std::move(tern), {"e"}, std::move(gamma),
      "Three-element chain 0 < a < 1: join for addition, meet for the ternary "
      "product, trivial gamma action.");
}

// Three-element table with a case-split ternary product. Fails monotonicity,
// distributivity and balanced associativity; {0,a} is not a k-ideal here.
// Bundled as the negative diagnostic fixture.
Structure make_p3() {
  const std::size_t m = 3;
  std::vector<Elem> plus(m * m), tern(m * m * m), gamma(m);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) plus[x * m + y] = std::max(x, y);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z) {
        Elem value;
        if (x == 0 || y == 0 || z == 0)
          value = 0;
        else if ((x == 1) + (y == 1) + (z == 1) == 1)
          value = 1;
        else
          value = 2;
        tern[(x * m + y) * m + z] = value;
      }
  for (Elem x = 0; x < m; ++x) gamma[x] = x;
  return Structure::from_tables(
      {"0", "a", "1"}, 0, std::move(plus), std::move(tern), {"e"}, std::move(gamma),
      "Case-split ternary table over the chain 0 < a < 1. Retained as a "
      "negative fixture: the axiom check reports monotonicity violations and "
      "{0,a} fails ternary absorption (see `check` and `ideals --test`).");
}

Structure make_chain2() {
  const std::size_t m = 2;
  std::vector<Elem> plus(m * m), tern(m * m * m), gamma(m);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) plus[x * m + y] = std::max(x, y);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y)
      for (Elem z = 0; z < m; ++z) tern[(x * m + y) * m + z] = std::min({x, y, z});
  for (Elem x = 0; x < m; ++x) gamma[x] = x;
  return Structure::from_tables(
      {"0", "1"}, 0, std::move(plus), std::move(tern), {"e"}, std::move(gamma),
      "Two-element chain: join for addition, meet for the ternary product.");
}

// Direct product of two copies of the three-element chain; nine elements
// whose k-ideals form a 3x3 grid lattice.
Structure make_m3xm3() {
  const char* base[] = {"0", "a", "1"};
  const std::size_t m = 9;
  std::vector<std::string> labels;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) labels.push_back(std::string(base[x]) + base[y]);
  auto pack = [](int x, int y) { return Elem(x * 3 + y); };
  std::vector<Elem> plus(m * m), tern(m * m * m), gamma(m);
  for (int x1 = 0; x1 < 3; ++x1)
    for (int y1 = 0; y1 < 3; ++y1)
      for (int x2 = 0; x2 < 3; ++x2)
        for (int y2 = 0; y2 < 3; ++y2)
          plus[pack(x1, y1) * m + pack(x2, y2)] =
              pack(std::max(x1, x2), std::max(y1, y2));
  for (int x1 = 0; x1 < 3; ++x1)
    for (int y1 = 0; y1 < 3; ++y1)
      for (int x2 = 0; x2 < 3; ++x2)
        for (int y2 = 0; y2 < 3; ++y2)
          for (int x3 = 0; x3 < 3; ++x3)
            for (int y3 = 0; y3 < 3; ++y3)
              tern[(pack(x1, y1) * m + pack(x2, y2)) * m + pack(x3, y3)] =
                  pack(std::min({x1, x2, x3}), std::min({y1, y2, y3}));
  for (Elem x = 0; x < m; ++x) gamma[x] = x;
  return Structure::from_tables(
      std::move(labels), 0, std::move(plus), std::move(tern), {"e"}, std::move(gamma),
      "Direct product of two copies of the M3 chain; its nine k-ideals form a "
      "3x3 grid lattice.");
}

json make_sec42_spec() {
  return json{{"construction", "constraint"},
              {"n", 3},
              {"A", {"1", "1", "1"}},
              {"B", {"1", "1", "1"}},
              {"ideal", {"0", "a"}},
              {"tgs", "M3.json"},
              {"description",
               "Length-3 constraint code over M3 cutting to the ideal {0,a}; "
               "coincides with the ideal power code and carries the syndrome "
               "map with two coset classes."}};
}

json make_repetition_spec() {
  return json{{"construction", "generated"},
              {"n", 3},
              {"generators", {{"0", "0", "0"}, {"a", "a", "a"}}},
              {"tgs", "M3.json"},
              {"description",
               "Two-word repetition-style generated code on M3; minimum "
               "distance 3, nearest-codeword decoding corrects single "
               "errors."}};
}

json make_kernel_n1_spec() {
  return json{{"construction", "kernel"},
              {"n", 1},
              {"A", {"1"}},
              {"B", {"1"}},
              {"tgs", "M3.json"},
              {"description",
               "Length-1 kernel code on M3 (modulo the zero ideal); every "
               "coset class has a unique leader."}};
}

const std::map<std::string, std::string>& documents() {
  static const std::map<std::string, std::string> docs = [] {
    std::map<std::string, std::string> out;
    out["M3.json"] = make_m3().to_json_text();
    out["P3.json"] = make_p3().to_json_text();
    out["chain2.json"] = make_chain2().to_json_text();
    out["M3xM3.json"] = make_m3xm3().to_json_text();
    out["sec42.json"] = dump_canonical(make_sec42_spec());
    out["repetition.json"] = dump_canonical(make_repetition_spec());
    out["kernel_n1.json"] = dump_canonical(make_kernel_n1_spec());
    return out;
  }();
  return docs;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : documents()) names.push_back(name);
  return names;
}

std::string fixture_document(const std::string& name) {
  const auto& docs = documents();
  auto it = docs.find(name);
  if (it == docs.end())
    throw Error(ErrorKind::NotFound, "no bundled fixture named '" + name + "'");
  return it->second;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

json fixtures_manifest() {
  json doc;
  doc["version"] = kLibraryVersion;
  json files = json::array();
  for (const auto& [name, text] : documents()) {
    json f;
    f["name"] = name;
    f["sha256"] = sha256_hex(text);
    f["bytes"] = text.size();
    files.push_back(std::move(f));
  }
  doc["files"] = std::move(files);
  return doc;
}

}  // namespace tgs
