#include <doctest.h>

#include "core/structure.hpp"
#include "support.hpp"

using namespace tgs;
using tgs::testing::load_fixture;

TEST_CASE("M3 evaluators follow the chain tables") {
  const Structure t = load_fixture("M3.json");
  const Elem zero = t.require("0"), a = t.require("a"), one = t.require("1");

  CHECK(t.size() == 3);
  CHECK(t.zero() == zero);
  // Join/meet on the chain; the independent oracle is max/min on indices.
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) CHECK(t.plus(x, y) == std::max(x, y));
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y)
      for (Elem z = 0; z < 3; ++z) CHECK(t.ternary(x, y, z) == std::min({x, y, z}));

  CHECK(t.plus(a, one) == one);
  CHECK(t.ternary(a, one, one) == a);
  CHECK(t.gamma(0, a) == a);
  CHECK(t.leq(zero, a));
  CHECK(!t.leq(one, a));
  CHECK(t.leq(a, a));
}

TEST_CASE("order relation is a partial order with minimum zero on valid fixtures") {
  for (const char* name : {"M3.json", "chain2.json", "M3xM3.json"}) {
    const Structure t = load_fixture(name);
    for (Elem x = 0; x < t.size(); ++x) {
      CHECK(t.leq(x, x));
      CHECK(t.leq(t.zero(), x));
      for (Elem y = 0; y < t.size(); ++y) {
        if (t.leq(x, y) && t.leq(y, x)) CHECK(x == y);
        for (Elem z = 0; z < t.size(); ++z)
          if (t.leq(x, y) && t.leq(y, z)) CHECK(t.leq(x, z));
      }
    }
  }
}

TEST_CASE("document round-trips to an equal structure") {
  for (const char* name : {"M3.json", "P3.json", "chain2.json", "M3xM3.json"}) {
    const Structure t = load_fixture(name);
    const Structure again = Structure::from_json_text(t.to_json_text());
    CHECK(t.to_json() == again.to_json());
    CHECK(t.to_json_text() == again.to_json_text());
  }
}

TEST_CASE("loader rejects malformed documents") {
  const std::string good = load_fixture("M3.json").to_json_text();

  auto mutate = [&](auto&& fn) {
    nlohmann::json doc = nlohmann::json::parse(good);
    fn(doc);
    return doc.dump();
  };

  CHECK_THROWS_AS(Structure::from_json_text("not json"), Error);
  CHECK_THROWS_AS(Structure::from_json_text(mutate([](auto& d) { d.erase("plus"); })), Error);
  CHECK_THROWS_AS(Structure::from_json_text(mutate([](auto& d) { d["zero"] = "q"; })), Error);
  CHECK_THROWS_AS(
      Structure::from_json_text(mutate([](auto& d) { d["elements"] = {"0", "a", "a"}; })),
      Error);
  CHECK_THROWS_AS(
      Structure::from_json_text(mutate([](auto& d) { d["ternary"][0].erase(0); })), Error);
  CHECK_THROWS_AS(
      Structure::from_json_text(mutate([](auto& d) { d["plus"][0][0] = "nope"; })), Error);
  CHECK_THROWS_AS(
      Structure::from_json_text(mutate([](auto& d) { d["extra"] = 1; })), Error);
  CHECK_THROWS_AS(
      Structure::from_json_text(mutate([](auto& d) { d["gamma_action"].erase("e"); })),
      Error);
}

TEST_CASE("label lookup and csv parsing") {
  const Structure t = load_fixture("M3.json");
  CHECK(parse_labels_csv(t, "a,0,1") == Word{1, 0, 2});
  CHECK(parse_labels_csv(t, " a , 0 ") == Word{1, 0});
  CHECK(parse_labels_csv(t, "").empty());
  CHECK_THROWS_AS(parse_labels_csv(t, "a,q"), Error);
  CHECK(t.find("missing") == std::nullopt);
}

TEST_CASE("bounds parsing") {
  const Bounds defaults = parse_bounds("");
  CHECK(defaults.max_carrier == 12);
  CHECK(defaults.max_words == (1u << 20));
  CHECK(defaults.witness_cap == 32);
  const Bounds custom = parse_bounds("carrier=4,witnesses=2");
  CHECK(custom.max_carrier == 4);
  CHECK(custom.witness_cap == 2);
  CHECK(custom.max_words == (1u << 20));
  CHECK_THROWS_AS(parse_bounds("carrier"), Error);
  CHECK_THROWS_AS(parse_bounds("carrier=0"), Error);
  CHECK_THROWS_AS(parse_bounds("nope=3"), Error);
}
