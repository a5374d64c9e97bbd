#include <map>
#include <vector>

#include "doctest.h"
#include "quiverk/groth.hpp"

using namespace quiverk;

namespace {

Quiver a2() { return Quiver(2, {{0, 1}}); }

OrbitVector a2_full_orbit() {
  return OrbitVector::from_entries({{{1, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}});
}

// Evaluates a straightening table as an actual polynomial identity: the
// combination of partition-indexed basis elements must reproduce the basis
// element of the raw sequence at every rank pair.
bool straighten_matches_basis(const IntegerSequence& s, int n, int p) {
  const auto table = straighten(s);
  LaurentPoly sum;
  for (const auto& [nu, c] : table) sum += g_poly(nu, n, p) * Rat(c);
  return sum == g_poly(s, n, p);
}

}  // namespace

TEST_CASE("sequence helpers") {
  CHECK(is_partition({}));
  CHECK(is_partition({3, 1, 1}));
  CHECK_FALSE(is_partition({1, 2}));
  CHECK_FALSE(is_partition({2, 0}));
  CHECK_FALSE(is_partition({-1}));
  CHECK(sequence_weight({2, -1, 3}) == 4);
  CHECK(sequence_weight({}) == 0);
  CHECK(partition_str({2, 1}) == "(2,1)");
  CHECK(partition_str({}) == "()");
}

TEST_CASE("basis polynomials") {
  SUBCASE("empty index gives the constant one") {
    CHECK(g_poly({}, 2, 2).is_one());
    CHECK(g_poly({0, -1}, 2, 3).is_one());
  }

  SUBCASE("single box at rank two") {
    const LaurentPoly g = g_poly({1}, 2, 2);
    LaurentPoly expect(1);
    expect -= LaurentPoly::monomial(
        Rat(1), Monomial::from_factors({{Variable::letter('b', 1), 1},
                                        {Variable::letter('b', 2), 1},
                                        {Variable::letter('a', 1), -1},
                                        {Variable::letter('a', 2), -1}}));
    CHECK(g == expect);
  }

  SUBCASE("explicit alphabets agree with the letter shorthand") {
    const std::vector<Variable> a = {Variable::letter('a', 1), Variable::letter('a', 2)};
    const std::vector<Variable> b = {Variable::letter('b', 1), Variable::letter('b', 2),
                                     Variable::letter('b', 3)};
    CHECK(g_poly_in({2, 1}, a, b) == g_poly({2, 1}, 2, 3));
  }

  SUBCASE("results are symmetric and nonzero for admissible lengths") {
    for (const IntegerSequence lam : {IntegerSequence{2, 1}, {1, 1}, {3}}) {
      const LaurentPoly g = g_poly(lam, 2, 2);
      CHECK_FALSE(g.is_zero());
      CHECK(g.is_symmetric_in({Variable::letter('a', 1), Variable::letter('a', 2)}));
      CHECK(g.is_symmetric_in({Variable::letter('b', 1), Variable::letter('b', 2)}));
    }
  }

  SUBCASE("memoized lookups are reproducible") {
    CHECK(g_poly({2, 1}, 2, 2) == g_poly({2, 1}, 2, 2));
  }

  SUBCASE("trailing non-positive entries never matter") {
    CHECK(g_poly({2, 1, 0, -1}, 2, 2) == g_poly({2, 1}, 2, 2));
    CHECK(g_poly({1, -2}, 2, 3) == g_poly({1}, 2, 3));
  }

  SUBCASE("an adjacent ascent promotes") {
    CHECK(g_poly({1, 2}, 2, 2) == g_poly({2, 2}, 2, 2));
    CHECK(g_poly({3, 1, 2}, 2, 3) == g_poly({3, 2, 2}, 2, 3));
  }
}

TEST_CASE("straightening") {
  SUBCASE("partitions are fixed points") {
    const auto t = straighten({2, 1});
    REQUIRE(t.size() == 1);
    CHECK(t.at({2, 1}) == 1);
    CHECK(straighten({}).at({}) == 1);
  }

  SUBCASE("trailing non-positive entries drop") {
    CHECK(straighten({2, 1, 0, -3}) == std::map<Partition, long>{{{2, 1}, 1}});
    CHECK(straighten({0, -1}) == std::map<Partition, long>{{{}, 1}});
  }

  SUBCASE("adjacent ascents promote") {
    CHECK(straighten({1, 2}) == std::map<Partition, long>{{{2, 2}, 1}});
  }

  SUBCASE("every rewrite is an exact basis identity") {
    const std::vector<IntegerSequence> sequences = {
        {0, 2}, {-1, 2}, {1, 3}, {0, 2, 1}, {2, 0, 2}, {1, 1, 2}, {0, 1, 1}};
    for (const auto& s : sequences) {
      CAPTURE(partition_str(s));
      CHECK(straighten_matches_basis(s, 2, 2));
      CHECK(straighten_matches_basis(s, 2, 3));
    }
  }

  SUBCASE("coefficients are pure integers with bounded support") {
    for (const auto& [nu, c] : straighten({0, 3})) {
      CHECK(is_partition(nu));
      CHECK(c != 0);
      CHECK(sequence_weight(nu) <= 6);
    }
  }
}

TEST_CASE("codimension from resolution data") {
  const Quiver q = a2();

  SUBCASE("one missing rank costs one") {
    const OrbitVector m = a2_full_orbit();
    const DimVector v{2, 2};
    CHECK(resolution_codimension(q, v, resolution_pair(q, m)) == 1);
  }

  SUBCASE("the zero map costs the whole hom space") {
    const OrbitVector zero_map = OrbitVector::from_entries({{{1, 0}, 1}, {{0, 1}, 2}});
    CHECK(resolution_codimension(q, {1, 2}, resolution_pair(q, zero_map)) == 2);
  }

  SUBCASE("the dense orbit is free") {
    CHECK(resolution_codimension(q, {1, 1}, ResolutionPair{}) == 0);
  }
}

TEST_CASE("quiver coefficients on A2") {
  const Quiver q = a2();
  const OrbitVector m = a2_full_orbit();
  const DimVector v{2, 2};

  QuiverCoefficientTable want;
  want.codimension = 1;
  want.entries[{{}, {1}}] = 1;

  SUBCASE("kernel-series route") {
    const QuiverCoefficientTable t = quiver_coefficients(q, m, v);
    CHECK(t == want);
    CHECK(sign_check(t, t.codimension));
  }

  SUBCASE("tables are stable under a larger explicit bound") {
    CHECK(quiver_coefficients(q, m, v, 8) == want);
  }

  SUBCASE("solver route agrees") {
    CHECK(expansion_oracle(kclass(q, m), q, v) == want);
  }

  SUBCASE("dimension vector is enforced") {
    CHECK_THROWS_AS(quiver_coefficients(q, m, {2, 3}), DomainError);
  }

  SUBCASE("trivial class expands to the empty tuple") {
    const QuiverCoefficientTable t = expansion_oracle(LaurentPoly(1), q, v);
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries.begin()->first == PartitionTuple{{}, {}});
    CHECK(t.entries.begin()->second == 1);
    CHECK(t.codimension == 0);
  }

  SUBCASE("smallest rectangle locus") {
    const OrbitVector zero_map = OrbitVector::from_entries({{{1, 0}, 1}, {{0, 1}, 2}});
    QuiverCoefficientTable rect;
    rect.codimension = 2;
    rect.entries[{{}, {1, 1}}] = 1;
    CHECK(quiver_coefficients(q, zero_map, {1, 2}) == rect);
  }
}

TEST_CASE("sign pattern checker") {
  QuiverCoefficientTable t;
  t.codimension = 2;
  t.entries[{{}, {2}}] = 1;
  t.entries[{{1}, {2}}] = -1;
  t.entries[{{1}, {2, 1}}] = 2;
  CHECK(sign_check(t, 2));
  t.entries[{{2}, {2}}] = 5;  // weight 4, even distance from codim, positive fits
  CHECK(sign_check(t, 2));
  t.entries[{{1, 1}, {2}}] = -3;  // weight 4 must be non-negative
  CHECK_FALSE(sign_check(t, 2));
}

TEST_CASE("table rendering is canonical") {
  QuiverCoefficientTable t;
  t.codimension = 1;
  t.entries[{{}, {1}}] = 1;
  const std::string s = table_str(t);
  CHECK(s == "codimension 1\n[(),(1)] 1\n");
}
