#include <doctest.h>

#include "core/axioms.hpp"
#include "core/ideals.hpp"
#include "core/quotient.hpp"
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

TEST_CASE("Bourne partition of M3 by {0,a} merges 0 with a") {
  const Structure t = load_fixture("M3.json");
  const auto classes = bourne_partition(t, mask_from(t, {"0", "a"}));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == mask_from(t, {"0", "a"}));
  CHECK(classes[1] == mask_from(t, {"1"}));
}

TEST_CASE("quotient by the zero ideal is the structure itself") {
  const Structure t = load_fixture("M3.json");
  const Quotient q = build_quotient(t, mask_from(t, {"0"}));
  CHECK(q.classes.size() == t.size());
  CHECK(q.well_defined);
  for (Elem x = 0; x < t.size(); ++x)
    for (Elem y = 0; y < t.size(); ++y)
      CHECK(q.induced.plus(Elem(project(q, x)), Elem(project(q, y))) ==
            Elem(project(q, t.plus(x, y))));
}

TEST_CASE("quotient by the whole carrier has one class") {
  const Structure t = load_fixture("M3.json");
  const Quotient q = build_quotient(t, t.carrier_mask());
  CHECK(q.classes.size() == 1);
  CHECK(q.well_defined);
}

TEST_CASE("M3 / {0,a} is the well-defined two-chain") {
  const Structure t = load_fixture("M3.json");
  const ElemMask ideal = mask_from(t, {"0", "a"});
  const Quotient q = build_quotient(t, ideal);
  REQUIRE(q.classes.size() == 2);
  CHECK(q.well_defined);
  CHECK(q.witness.is_null());

  // Zero class equals the ideal exactly.
  CHECK(q.classes[std::size_t(project(q, t.zero()))] == ideal);
  CHECK(project(q, t.require("a")) == project(q, t.zero()));
  CHECK(project(q, t.require("1")) != project(q, t.zero()));

  // Induced operations: join/meet on the two-chain.
  const Elem z = Elem(project(q, t.zero())), o = Elem(project(q, t.require("1")));
  CHECK(q.induced.plus(z, o) == o);
  CHECK(q.induced.plus(o, o) == o);
  CHECK(q.induced.ternary(o, z, o) == z);
  CHECK(q.induced.ternary(o, o, o) == o);
  CHECK(q.induced.label(z) == "0+I");
  CHECK(q.induced.label(o) == "1+I");

  // The induced structure itself satisfies all axioms.
  CHECK(check_axioms(q.induced, 8).valid);

  // Export format round-trips.
  const Structure reloaded = Structure::from_json_text(q.induced.to_json_text());
  CHECK(reloaded.to_json() == q.induced.to_json());
}

TEST_CASE("projection is a morphism for both operations, exhaustively") {
  for (const char* name : {"M3.json", "chain2.json", "M3xM3.json"}) {
    const Structure t = load_fixture(name);
    for (ElemMask ideal : enumerate_k_ideals(t, false, Bounds{})) {
      const Quotient q = build_quotient(t, ideal);
      REQUIRE(q.well_defined);
      // Zero class equals the ideal on every fixture.
      CHECK(q.classes[std::size_t(project(q, t.zero()))] == ideal);
      // Class sizes partition the carrier.
      std::size_t total = 0;
      for (ElemMask cls : q.classes) total += std::size_t(popcount(cls));
      CHECK(total == t.size());
      for (Elem x = 0; x < t.size(); ++x) {
        for (Elem y = 0; y < t.size(); ++y) {
          CHECK(project(q, t.plus(x, y)) ==
                int(q.induced.plus(Elem(project(q, x)), Elem(project(q, y)))));
          for (Elem z = 0; z < t.size(); ++z)
            CHECK(project(q, t.ternary(x, y, z)) ==
                  int(q.induced.ternary(Elem(project(q, x)), Elem(project(q, y)),
                                        Elem(project(q, z)))));
        }
        for (std::size_t g = 0; g < t.gamma_size(); ++g)
          CHECK(project(q, t.gamma(g, x)) == int(q.induced.gamma(g, Elem(project(q, x)))));
      }
    }
  }
}

TEST_CASE("quotient rejects non-ideals") {
  const Structure t = load_fixture("M3.json");
  CHECK_THROWS_AS(build_quotient(t, mask_from(t, {"a", "1"})), Error);
}

TEST_CASE("a congruence-breaking ternary table is reported with a witness") {
  // Diamond join-semilattice 0 < a,b < c with plus = join and a ternary table
  // that is zero except [b,b,b] = b. The set {0,a} is a k-ideal (every triple
  // touching it evaluates to 0), and its Bourne classes are {0,a} and {b,c}
  // because b (+) a = c. Representatives b and c then disagree on [.,b,b],
  // so the induced ternary table is representative-dependent.
  std::vector<Elem> plus = {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3};
  std::vector<Elem> tern(64, 0);
  tern[(2 * 4 + 2) * 4 + 2] = 2;
  const Structure t = Structure::from_tables({"0", "a", "b", "c"}, 0, std::move(plus),
                                             std::move(tern), {"e"}, {0, 1, 2, 3});
  const ElemMask ideal = bit(Elem(0)) | bit(Elem(1));
  REQUIRE(is_k_ideal(t, ideal).ok);

  const auto classes = bourne_partition(t, ideal);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == ideal);
  CHECK(classes[1] == (bit(Elem(2)) | bit(Elem(3))));

  const Quotient q = build_quotient(t, ideal);
  CHECK(!q.well_defined);
  REQUIRE(!q.witness.is_null());
  CHECK(q.witness["operation"] == "ternary");
  CHECK(q.witness["representatives"] == nlohmann::json::array({"b", "c"}));
}
