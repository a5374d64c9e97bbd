#include <vector>

#include "doctest.h"
#include "quiverk/groth.hpp"
#include "quiverk/kclass.hpp"

using namespace quiverk;

namespace {

Quiver a2() { return Quiver(2, {{0, 1}}); }
Quiver a3_inbound() { return Quiver(3, {{0, 1}, {2, 1}}); }

OrbitVector a2_full_orbit() {
  return OrbitVector::from_entries({{{1, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}});
}

OrbitVector a3_worked_orbit() {
  return OrbitVector::from_entries(
      {{{1, 1, 0}, 1}, {{1, 1, 1}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
}

}  // namespace

TEST_CASE("root alphabets") {
  const auto e2 = bundle_roots(1, 3);
  REQUIRE(e2.size() == 3);
  CHECK(e2[0] == Variable::groth_root(2, 1));
  CHECK(e2[2] == Variable::groth_root(2, 3));

  const Quiver q = a3_inbound();
  const DimVector v{2, 3, 2};
  // Arrows 1 -> 2 and 3 -> 2: the middle vertex collects both end alphabets,
  // smaller tail first; the ends collect nothing.
  const auto m2 = incoming_roots(q, v, 1);
  std::vector<Variable> expect = bundle_roots(0, 2);
  const auto e3 = bundle_roots(2, 2);
  expect.insert(expect.end(), e3.begin(), e3.end());
  CHECK(m2 == expect);
  CHECK(incoming_roots(q, v, 0).empty());
  CHECK(incoming_roots(q, v, 2).empty());
}

TEST_CASE("alphabet symmetry guard") {
  const auto e1 = bundle_roots(0, 2);
  const LaurentPoly sym = LaurentPoly::variable(e1[0]) + LaurentPoly::variable(e1[1]);
  require_alphabet_symmetry(sym, {2, 0});
  CHECK_THROWS_AS(require_alphabet_symmetry(LaurentPoly::variable(e1[0]), {2, 0}), DomainError);
}

TEST_CASE("factor assembly") {
  const Quiver q = a2();

  SUBCASE("single step has no interference factors") {
    const FactorSet fs = build_factors(q, {2, 2}, {{1}, {1}});
    REQUIRE(fs.alphabets.size() == 1);
    REQUIRE(fs.alphabets[0].size() == 1);
    const Variable z = fs.alphabets[0][0];
    CHECK(fs.elimination_order == std::vector<Variable>{z});
    // R_1 = prod_{x in E_1-roots}(1 - x z) / prod_{e in E_2-roots}(1 - e z),
    // D_1 = dlog z; a one-variable alphabet has no discriminant pairs.
    CHECK(fs.integrand.numf.size() == 2);
    CHECK(fs.integrand.den.size() == 2);
    CHECK(fs.integrand.mono == Monomial::variable(z, -1));
  }

  SUBCASE("alphabets match the rank sequence and eliminate innermost-first") {
    const FactorSet fs = build_factors(q, {2, 2}, {{1, 0, 1}, {1, 2, 1}});
    REQUIRE(fs.alphabets.size() == 3);
    CHECK(fs.alphabets[0].size() == 1);
    CHECK(fs.alphabets[1].size() == 2);
    CHECK(fs.alphabets[2].size() == 1);
    const std::vector<Variable> expect = {fs.alphabets[2][0], fs.alphabets[1][0],
                                          fs.alphabets[1][1], fs.alphabets[0][0]};
    CHECK(fs.elimination_order == expect);
    for (const auto& zk : fs.alphabets)
      for (const auto& z : zk) CHECK(fs.integrand.contains(z));
  }
}

TEST_CASE("orbit classes on A2") {
  const Quiver q = a2();
  const OrbitVector m = a2_full_orbit();
  const KClass kc = kclass(q, m);

  SUBCASE("matches the rank-one basis polynomial") {
    // The minimal degenerate orbit's class is the first basis element in the
    // vertex-2-minus-vertex-1 difference alphabet.
    CHECK(kc == g_poly_in({1}, bundle_roots(1, 2), bundle_roots(0, 2)));
  }

  SUBCASE("both evaluation routes agree") {
    CHECK(kc == stepwise_pushforward(q, m));
  }

  SUBCASE("output is symmetric per vertex alphabet") {
    const DimVector v{2, 2};
    require_alphabet_symmetry(kc, v);
    CHECK(kc.is_symmetric_in(bundle_roots(0, 2)));
    CHECK(kc.is_symmetric_in(bundle_roots(1, 2)));
  }

  SUBCASE("class does not depend on the directed partition") {
    const DimVector v{2, 2};
    const DimVector r11{1, 0}, r12{1, 1}, r22{0, 1};
    const RootPartition grouped = {{r22}, {r12, r11}};
    const RootPartition singletons = {{r22}, {r12}, {r11}};
    REQUIRE(is_directed_partition(q, {r11, r12, r22}, grouped).ok);
    REQUIRE(is_directed_partition(q, {r11, r12, r22}, singletons).ok);
    const ResolutionPair rp1 = resolution_pair(q, m, grouped);
    const ResolutionPair rp2 = resolution_pair(q, m, singletons);
    CHECK(rp1.steps() != rp2.steps());
    CHECK(kclass(q, v, rp1) == kclass(q, v, rp2));
  }

  SUBCASE("degeneracy-locus shortcut") {
    // The same locus resolves in one step through the quotient at vertex 2;
    // the class must not notice the shorter tower.
    CHECK(kclass(q, {2, 2}, {{1}, {1}}) == kc);
    // Zero map C -> C^2: the quotient-side step of rank v_2 cuts it out alone.
    const OrbitVector zero_map = OrbitVector::from_entries({{{1, 0}, 1}, {{0, 1}, 2}});
    CHECK(kclass(q, {1, 2}, {{1}, {2}}) == kclass(q, zero_map));
  }
}

TEST_CASE("dense orbits carry the trivial class") {
  const Quiver q = a2();
  const OrbitVector generic1 = OrbitVector::from_entries({{{1, 1}, 1}});
  CHECK(kclass(q, generic1).is_one());
  const OrbitVector generic2 = OrbitVector::from_entries({{{1, 1}, 2}});
  CHECK(kclass(q, generic2).is_one());
  CHECK(kclass(q, OrbitVector{}).is_one());
  CHECK(stepwise_pushforward(q, OrbitVector{}).is_one());
}

TEST_CASE("worked inbound A3 orbit") {
  const Quiver q = a3_inbound();
  const OrbitVector m = a3_worked_orbit();
  const KClass kc = kclass(q, m);

  CHECK(kc.term_count() == 12);
  CHECK(kc.constant_term() == Rat(1));
  require_alphabet_symmetry(kc, {2, 3, 2});
  CHECK(kc == stepwise_pushforward(q, m));
}
