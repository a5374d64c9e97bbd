#include <vector>

#include "doctest.h"
#include "quiverk/series.hpp"

using namespace quiverk;

namespace {

const Variable A = Variable::letter('a');
const Variable B = Variable::letter('b');
const Variable C = Variable::letter('c');

Monomial mono(std::vector<std::pair<Variable, int>> fs) {
  return Monomial::from_factors(std::move(fs));
}

// Keeps only the terms the domain counts as degree <= bound, so products of
// truncated series can be compared against a jointly expanded product.
LaurentPoly truncate(const LaurentPoly& p, const ExpansionDomain& dom, int bound) {
  std::vector<LaurentPoly::Term> kept;
  for (const auto& t : p.terms())
    if (dom.truncation_degree(t.mono) <= bound) kept.push_back(t);
  return LaurentPoly::from_terms(std::move(kept));
}

}  // namespace

TEST_CASE("expansion domain classification") {
  const ExpansionDomain dom({A, B});
  CHECK(dom.classify(mono({{A, 1}, {B, -1}})) == ExpansionDomain::Direction::Small);
  CHECK(dom.classify(mono({{A, -1}, {B, 1}})) == ExpansionDomain::Direction::Large);
  CHECK(dom.classify(mono({{B, 2}})) == ExpansionDomain::Direction::Small);
  CHECK(dom.classify(mono({{C, 1}})) == ExpansionDomain::Direction::NoDomainVariable);
  CHECK(dom.truncation_degree(mono({{A, 2}, {B, -5}})) == 2);
  CHECK(dom.truncation_degree(mono({{A, 1}, {B, 3}})) == 4);
  CHECK(dom.contains(A));
  CHECK_FALSE(dom.contains(C));
}

TEST_CASE("geometric series in one small ratio") {
  // 1/(1 - a/b) with a << b expands to 1 + a/b + a^2/b^2 + ...
  const FactoredRational f = FactoredRational::geometric(Rat(1), mono({{A, 1}, {B, -1}}));
  const ExpansionDomain dom({A, B});
  const LaurentPoly got = series_expand(f, dom, 2);

  LaurentPoly expect(1);
  expect += LaurentPoly::monomial(Rat(1), mono({{A, 1}, {B, -1}}));
  expect += LaurentPoly::monomial(Rat(1), mono({{A, 2}, {B, -2}}));
  CHECK(got == expect);
}

TEST_CASE("vanishing factor expands to one") {
  const FactoredRational f = FactoredRational::geometric(Rat(0), mono({{A, 1}}));
  CHECK(series_expand(f, ExpansionDomain({A}), 4).is_one());
}

TEST_CASE("double pole against the squared-series oracle") {
  const FactoredRational f = FactoredRational::geometric(Rat(1), mono({{A, 1}}), 2);
  const ExpansionDomain dom({A});
  const LaurentPoly got = series_expand(f, dom, 3);

  // Square the plain geometric series by hand: coefficient of a^k is k+1.
  LaurentPoly expect;
  for (int k = 0; k <= 3; ++k)
    expect += LaurentPoly::monomial(Rat(k + 1), mono({{A, k}}));
  CHECK(got == expect);
}

TEST_CASE("numerators shift the truncation correctly") {
  // (1 - a^2) / (1 - a) = 1 + a exactly; no truncation artifacts.
  FactoredRational f(LaurentPoly::one_minus(Rat(1), mono({{A, 2}})));
  f = f * FactoredRational::geometric(Rat(1), mono({{A, 1}}));
  const LaurentPoly got = series_expand(f, ExpansionDomain({A}), 5);
  CHECK(got == LaurentPoly(1) + LaurentPoly::variable(A));
}

TEST_CASE("multiplicativity up to the bound") {
  const ExpansionDomain dom({A});
  const int bound = 4;
  const FactoredRational f = FactoredRational::geometric(Rat(1), mono({{A, 1}, {B, -1}}));
  const FactoredRational g = FactoredRational::geometric(Rat(2), mono({{A, 1}, {C, -2}}));

  const LaurentPoly joint = series_expand(f * g, dom, bound);
  const LaurentPoly split =
      truncate(series_expand(f, dom, bound) * series_expand(g, dom, bound), dom, bound);
  CHECK(joint == split);
}

TEST_CASE("larger bounds only append terms") {
  const FactoredRational f =
      FactoredRational::geometric(Rat(1), mono({{A, 1}, {B, -1}})) *
      FactoredRational::geometric(Rat(-1), mono({{A, 1}}), 2);
  const ExpansionDomain dom({A});
  const LaurentPoly lo = series_expand(f, dom, 3);
  const LaurentPoly hi = series_expand(f, dom, 6);
  CHECK(truncate(hi, dom, 3) == lo);
}

TEST_CASE("non-expandable factor is rejected") {
  // 1/(1 - b/a) has its pole on the wrong side of a << b.
  const FactoredRational f = FactoredRational::geometric(Rat(1), mono({{A, -1}, {B, 1}}));
  CHECK_THROWS_AS(series_expand(f, ExpansionDomain({A, B}), 2), DomainError);
}

TEST_CASE("product-sum route matches the combined route") {
  const ExpansionDomain dom({A, B});
  FactorProduct t1;
  t1.mul_one_minus(Rat(1), mono({{B, 1}, {C, -1}}));
  t1.div_one_minus(Rat(1), mono({{A, 1}, {B, -1}}));
  FactorProduct t2;
  t2.mul_monomial(Rat(-1, 2), mono({{A, 1}}));
  t2.div_one_minus(Rat(1), mono({{A, 1}, {C, -1}}), 2);
  const ProductSum sum = {t1, t2};

  const LaurentPoly via_products = series_expand(sum, dom, 3);
  const LaurentPoly via_rational =
      series_expand(combine(sum), dom, 3);
  CHECK(via_products == via_rational);
}
