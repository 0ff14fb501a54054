#include <doctest.h>

#include <random>

#include "core/ideals.hpp"
#include "support.hpp"

using namespace tgs;
using tgs::testing::load_fixture;

namespace {

ElemMask mask_from(const Structure& t, const std::vector<std::string>& labels) {
  ElemMask m = 0;
  for (const auto& s : labels) m |= bit(t.require(s));
  return m;
}

}  // namespace

TEST_CASE("M3 k-ideals are the three chain downsets") {
  const Structure t = load_fixture("M3.json");
  const Bounds bounds;
  const auto ideals = enumerate_k_ideals(t, false, bounds);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0] == mask_from(t, {"0"}));
  CHECK(ideals[1] == mask_from(t, {"0", "a"}));
  CHECK(ideals[2] == mask_from(t, {"0", "a", "1"}));
  // Chain downsets are closed under plus, so literal mode agrees.
  CHECK(enumerate_k_ideals(t, true, bounds) == ideals);
}

TEST_CASE("is_k_ideal verdicts on M3") {
  const Structure t = load_fixture("M3.json");
  CHECK(is_k_ideal(t, mask_from(t, {"0", "a"})).ok);
  const auto bad = is_k_ideal(t, mask_from(t, {"a", "1"}));
  CHECK(!bad.ok);
  CHECK(bad.witness->clause == "contains-zero");
}

TEST_CASE("P3: {0,a} fails absorption with witness [a,1,a] = 1") {
  const Structure t = load_fixture("P3.json");
  const auto check = is_k_ideal(t, mask_from(t, {"0", "a"}));
  REQUIRE(!check.ok);
  const Elem a = t.require("a"), one = t.require("1");
  CHECK(check.witness->clause == "ternary-absorption-slot3");
  CHECK(check.witness->inputs == std::vector<Elem>{a, one, a});
  CHECK(check.witness->value == one);

  // And enumeration (which is allowed diagnostically) omits {0,a}.
  const auto ideals = enumerate_k_ideals(t, false, Bounds{});
  for (ElemMask ideal : ideals) CHECK(ideal != mask_from(t, {"0", "a"}));
}

TEST_CASE("ideal closure is idempotent and monotone") {
  const Structure t = load_fixture("M3xM3.json");
  CHECK(ideal_closure(t, 0) == bit(t.zero()));
  // The top element generates everything by downward closure.
  CHECK(ideal_closure(t, bit(t.require("11"))) == t.carrier_mask());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const ElemMask seed = rng() & t.carrier_mask();
    const ElemMask once = ideal_closure(t, seed);
    CHECK(is_k_ideal(t, once).ok);
    CHECK(ideal_closure(t, once) == once);
    const ElemMask bigger = seed | (rng() & t.carrier_mask());
    const ElemMask closed_bigger = ideal_closure(t, bigger);
    CHECK((once & closed_bigger) == once);  // monotone in the seed
  }
}

TEST_CASE("closure worked examples on M3") {
  const Structure t = load_fixture("M3.json");
  CHECK(ideal_closure(t, mask_from(t, {"1"})) == mask_from(t, {"0", "a", "1"}));
  CHECK(ideal_closure(t, 0) == mask_from(t, {"0"}));
  CHECK(ideal_closure(t, mask_from(t, {"a"})) == mask_from(t, {"0", "a"}));
}

TEST_CASE("meet and join on nested M3 ideals") {
  const Structure t = load_fixture("M3.json");
  const ElemMask i0 = mask_from(t, {"0"});
  const ElemMask ia = mask_from(t, {"0", "a"});
  CHECK(meet_ideals(ia, i0) == i0);
  CHECK(join_ideals(t, i0, ia) == ia);
  CHECK(join_ideals(t, ia, ia) == ia);
}

TEST_CASE("M3xM3 has 9 strict and 19 literal ideals") {
  const Structure t = load_fixture("M3xM3.json");
  const Bounds bounds;
  const auto strict = enumerate_k_ideals(t, false, bounds);
  const auto literal = enumerate_k_ideals(t, true, bounds);
  CHECK(strict.size() == 9);
  CHECK(literal.size() == 19);
  // Strict ideals all appear in the literal enumeration.
  for (ElemMask ideal : strict)
    CHECK(std::find(literal.begin(), literal.end(), ideal) != literal.end());
  // A literal-only ideal is not plus-closed: the staircase {00,0a,a0}.
  const ElemMask staircase = mask_from(t, {"00", "0a", "a0"});
  CHECK(std::find(literal.begin(), literal.end(), staircase) != literal.end());
  CHECK(!is_k_ideal(t, staircase, false).ok);
  CHECK(is_k_ideal(t, staircase, true).ok);
}

TEST_CASE("enumeration refuses oversized carriers") {
  const Structure t = load_fixture("M3xM3.json");
  Bounds bounds;
  bounds.max_carrier = 4;
  CHECK_THROWS_AS(enumerate_k_ideals(t, false, bounds), Error);
}

TEST_CASE("lattice structure of the bundled fixtures") {
  const Bounds bounds;
  SUBCASE("M3 chain") {
    const Structure t = load_fixture("M3.json");
    const Lattice lattice = build_lattice(t, false, bounds);
    CHECK(lattice.nodes.size() == 3);
    CHECK(lattice.distributive);
    CHECK(!lattice.counterexample);
    CHECK(lattice.hasse == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  }
  SUBCASE("M3xM3 grid") {
    const Structure t = load_fixture("M3xM3.json");
    const Lattice lattice = build_lattice(t, false, bounds);
    CHECK(lattice.nodes.size() == 9);
    CHECK(lattice.distributive);
    // Bottom {00} and top (everything).
    CHECK(popcount(lattice.nodes.front()) == 1);
    CHECK(popcount(lattice.nodes.back()) == 9);
    // Absorption laws over all node pairs.
    const int n = int(lattice.nodes.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(lattice.meet[i][lattice.join[i][j]] == i);
        CHECK(lattice.join[i][lattice.meet[i][j]] == i);
      }
  }
  SUBCASE("single-element lattice") {
    const Structure t = Structure::from_tables({"0"}, 0, {0}, {0}, {"e"}, {0});
    const Lattice lattice = build_lattice(t, false, bounds);
    CHECK(lattice.nodes.size() == 1);
    CHECK(lattice.distributive);
  }
}

TEST_CASE("enumeration output is closed under meet and join") {
  for (const char* name : {"M3.json", "chain2.json", "M3xM3.json"}) {
    const Structure t = load_fixture(name);
    const auto ideals = enumerate_k_ideals(t, false, Bounds{});
    for (ElemMask a : ideals)
      for (ElemMask b : ideals) {
        const ElemMask m = meet_ideals(a, b);
        const ElemMask j = join_ideals(t, a, b);
        CHECK(std::find(ideals.begin(), ideals.end(), m) != ideals.end());
        CHECK(std::find(ideals.begin(), ideals.end(), j) != ideals.end());
      }
  }
}

TEST_CASE("minimal nonzero elements") {
  const Structure t = load_fixture("M3.json");
  CHECK(minimal_nonzero_elements(t, mask_from(t, {"0", "a"})) == mask_from(t, {"a"}));
  CHECK(minimal_nonzero_elements(t, t.carrier_mask()) == mask_from(t, {"a"}));
  CHECK(minimal_nonzero_elements(t, mask_from(t, {"0"})) == 0);

  const Structure p = load_fixture("M3xM3.json");
  const ElemMask square = mask_from(p, {"00", "0a", "a0", "aa"});
  CHECK(minimal_nonzero_elements(p, square) == mask_from(p, {"0a", "a0"}));
}

TEST_CASE("ternary annihilators on M3") {
  const Structure t = load_fixture("M3.json");
  CHECK(annihilator(t, mask_from(t, {"a"})) == mask_from(t, {"0"}));
  CHECK(annihilator(t, mask_from(t, {"0"})) == t.carrier_mask());
  CHECK(annihilator(t, 0) == t.carrier_mask());
  CHECK(is_k_ideal(t, annihilator(t, mask_from(t, {"a"}))).ok);
}

TEST_CASE("prime and semiprime ideals on M3") {
  const Structure t = load_fixture("M3.json");
  CHECK(is_prime(t, mask_from(t, {"0", "a"})).status == PrimeStatus::Yes);
  CHECK(is_prime(t, mask_from(t, {"0"})).status == PrimeStatus::Yes);
  CHECK(is_semiprime(t, mask_from(t, {"0", "a"})).status == PrimeStatus::Yes);
  CHECK(is_prime(t, t.carrier_mask()).status == PrimeStatus::NotApplicable);
}

TEST_CASE("prime implies semiprime over every enumerated proper ideal") {
  for (const char* name : {"M3.json", "chain2.json", "M3xM3.json"}) {
    const Structure t = load_fixture(name);
    for (ElemMask ideal : enumerate_k_ideals(t, false, Bounds{})) {
      if (ideal == t.carrier_mask()) continue;
      if (is_prime(t, ideal).status == PrimeStatus::Yes)
        CHECK(is_semiprime(t, ideal).status == PrimeStatus::Yes);
    }
  }
}

TEST_CASE("a non-prime ideal produces a witness") {
  // On the product, {00} is not prime: [0a, a0, 11] = 00 with no factor in {00}.
  const Structure t = load_fixture("M3xM3.json");
  const auto result = is_prime(t, mask_from(t, {"00"}));
  REQUIRE(result.status == PrimeStatus::No);
  const auto [x, y, z] = *result.witness;
  CHECK(t.ternary(x, y, z) == t.require("00"));
  CHECK(x != t.require("00"));
  CHECK(y != t.require("00"));
  CHECK(z != t.require("00"));
}
