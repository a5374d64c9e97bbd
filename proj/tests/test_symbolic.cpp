#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "quiverk/factored.hpp"
#include "quiverk/laurent.hpp"
#include "quiverk/monomial.hpp"
#include "quiverk/rational.hpp"

using namespace quiverk;

namespace {

const Variable X = Variable::letter('x');
const Variable Y = Variable::letter('y');
const Variable Z = Variable::letter('z');

Monomial mono(std::vector<std::pair<Variable, int>> fs) {
  return Monomial::from_factors(std::move(fs));
}

// Deterministic random Laurent polynomial in x, y, z with small exponents.
LaurentPoly random_poly(std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<LaurentPoly::Term> terms;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m = mono({{X, expo(rng)}, {Y, expo(rng)}, {Z, expo(rng)}});
    terms.push_back({m, Rat(coef(rng))});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-12") == Rat(-12));
  CHECK(rat_from_string("+6/4") == Rat(3, 2));
  CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
  CHECK_THROWS_AS(rat_from_string(""), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rat_from_string("2x"), ParseError);
  CHECK_THROWS_AS(rat_from_string("1/"), ParseError);
  CHECK_THROWS_AS(rat_to_long(Rat(1, 2)), DomainError);
  CHECK(rat_to_long(Rat(-7)) == -7);
  CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
  CHECK(rat_binomial(-1, 3) == Rat(-1));
  CHECK(rat_binomial(4, 2) == Rat(6));
}

TEST_CASE("monomial canonical form and order") {
  CHECK(mono({{X, 0}}).is_one());
  CHECK(mono({{X, 2}, {X, -2}}).is_one());
  CHECK(mono({{Y, 1}, {X, 1}}) == mono({{X, 1}, {Y, 1}}));
  CHECK(mono({{X, 3}}).exponent_of(X) == 3);
  CHECK(mono({{X, 3}}).exponent_of(Y) == 0);
  CHECK(mono({{X, 2}, {Y, -1}}).total_degree() == 1);

  // Graded ordering: total degree decides first.
  CHECK(mono({{X, 2}}) > mono({{X, 1}}));
  CHECK(mono({{Y, 3}}) > mono({{X, 1}, {Y, 1}}));
  // Same degree: lexicographic on the earliest differing variable.
  CHECK(mono({{X, 2}}) > mono({{X, 1}, {Y, 1}}));
  CHECK(mono({{X, 1}, {Y, 1}}) > mono({{Y, 2}}));

  SUBCASE("order is multiplicative") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> expo(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
      Monomial a = mono({{X, expo(rng)}, {Y, expo(rng)}});
      Monomial b = mono({{X, expo(rng)}, {Y, expo(rng)}});
      Monomial c = mono({{X, expo(rng)}, {Z, expo(rng)}});
      if (a < b) {
        CHECK(a * c < b * c);
      } else if (b < a) {
        CHECK(b * c < a * c);
      } else {
        CHECK(a * c == b * c);
      }
    }
  }

  SUBCASE("divisibility is componentwise") {
    CHECK(mono({{X, 2}, {Y, 1}}).divisible_by(mono({{X, 1}})));
    CHECK_FALSE(mono({{X, 2}}).divisible_by(mono({{Y, 1}})));
    CHECK_FALSE(mono({{X, -2}}).divisible_by(mono({{X, -1}})));
    CHECK(mono({{X, 2}}) / mono({{X, 3}}) == mono({{X, -1}}));
  }

  CHECK(mono({{X, 2}, {Y, 1}}).without(Y) == mono({{X, 2}}));
  CHECK(mono({{X, 2}}).rename(X, Y) == mono({{Y, 2}}));
  CHECK(mono({{X, 2}}).pow(-2) == mono({{X, -4}}));
}

TEST_CASE("laurent polynomial canonical form") {
  const LaurentPoly x = LaurentPoly::variable(X);
  const LaurentPoly y = LaurentPoly::variable(Y);

  // from_terms merges duplicates and drops zero coefficients.
  LaurentPoly p = LaurentPoly::from_terms(
      {{mono({{X, 1}}), Rat(2)}, {mono({{X, 1}}), Rat(-2)}, {mono({{Y, 1}}), Rat(1)}});
  CHECK(p == y);
  CHECK(p.term_count() == 1);

  CHECK((x - x).is_zero());
  CHECK(LaurentPoly(Rat(1)).is_one());
  CHECK((x * LaurentPoly(Rat(0))).is_zero());
  CHECK(LaurentPoly::one_minus(Rat(1), Monomial()).is_zero());  // 1 - 1

  const LaurentPoly q = (x + y) * (x - y);
  CHECK(q == x * x - y * y);
  CHECK(q.max_total_degree() == 2);
  CHECK(q.total_degree_part(2) == q);
  CHECK(q.coefficient_in(X, 2).is_one());
  CHECK(q.coefficient_in(X, 0) == -(y * y));

  CHECK((x + y).is_symmetric_in({X, Y}));
  CHECK_FALSE((x - y).is_symmetric_in({X, Y}));

  CHECK(q.evaluate({{X, Rat(3)}, {Y, Rat(2)}}) == Rat(5));

  const LaurentPoly inv = LaurentPoly::variable(X, -1);
  CHECK(inv.min_degree_in(X) == -1);
  CHECK((inv * x).is_one());
  CHECK(inv.substitute_monomial(X, Rat(1, 2), Monomial()) == LaurentPoly(Rat(2)));
  CHECK_THROWS_AS(inv.substitute_monomial(X, Rat(0), Monomial()), DomainError);
}

TEST_CASE("laurent ring axioms on random triples") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    const LaurentPoly a = random_poly(rng, 5);
    const LaurentPoly b = random_poly(rng, 5);
    const LaurentPoly c = random_poly(rng, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("exact division") {
  const LaurentPoly x = LaurentPoly::variable(X);
  const LaurentPoly y = LaurentPoly::variable(Y);

  SUBCASE("clean quotients") {
    const LaurentPoly num = x * x - y * y;
    auto q = num.exact_div(x - y);
    REQUIRE(q.has_value());
    CHECK(*q == x + y);
    CHECK_FALSE(num.exact_div(x + LaurentPoly(1)).has_value());
  }

  SUBCASE("monomial divisor") {
    auto q = (x * y + x * x).exact_div(LaurentPoly::monomial(Rat(2), mono({{X, 1}})));
    REQUIRE(q.has_value());
    CHECK(*q == (y + x) * Rat(1, 2));
  }

  SUBCASE("zero dividend") {
    auto q = LaurentPoly().exact_div(x - y);
    REQUIRE(q.has_value());
    CHECK(q->is_zero());
  }

  // (P*B) / B == P for random P, exercising both the two-term fast path and
  // the general long-division path (three-term divisor) against each other.
  SUBCASE("differential fuzz against multiplication") {
    std::mt19937 rng(99);
    const std::vector<LaurentPoly> divisors = {
        LaurentPoly::one_minus(Rat(1), mono({{X, 1}, {Y, -1}})),
        LaurentPoly::one_minus(Rat(-3, 2), mono({{X, 2}})),
        x - y,
        LaurentPoly(1) + x + y * y,
        x + y + LaurentPoly::monomial(Rat(1), mono({{X, -1}, {Y, -1}})),
    };
    for (int trial = 0; trial < 80; ++trial) {
      const LaurentPoly p = random_poly(rng, 6);
      const LaurentPoly& b = divisors[trial % divisors.size()];
      const auto q = (p * b).exact_div(b);
      REQUIRE(q.has_value());
      CHECK(*q == p);
    }
  }

  // A near-miss product must be rejected, not rounded.
  SUBCASE("non-divisible inputs return nullopt") {
    const LaurentPoly b = LaurentPoly::one_minus(Rat(1), mono({{X, 1}}));
    const LaurentPoly almost = (x + y) * b + LaurentPoly(1);
    CHECK_FALSE(almost.exact_div(b).has_value());
  }
}

TEST_CASE("factored rational arithmetic") {
  const Monomial x_over_y = mono({{X, 1}, {Y, -1}});
  const FactoredRational one_minus_xy = FactoredRational(LaurentPoly::one_minus(Rat(1), x_over_y));
  const FactoredRational geo = FactoredRational::geometric(Rat(1), x_over_y);

  SUBCASE("binomial cancellation") {
    // (1 - x/y) * 1/(1 - x/y) -> 1
    const FactoredRational p = (one_minus_xy * geo).reduced();
    CHECK(p.denominator().empty());
    CHECK(p.numerator().is_one());
  }

  SUBCASE("additive inverse") {
    const FactoredRational f = FactoredRational::geometric(Rat(2), mono({{X, 1}}), 2);
    CHECK((f - f).is_zero());
    CHECK((f + (-f)).is_zero());
  }

  SUBCASE("mixed product cancels one factor") {
    // (1 - a x)/(1 - b x) * (1 - b x) -> (1 - a x)
    const Variable A = Variable::letter('a');
    const Variable B = Variable::letter('b');
    const auto ax = mono({{A, 1}, {X, 1}});
    const auto bx = mono({{B, 1}, {X, 1}});
    FactoredRational f = FactoredRational(LaurentPoly::one_minus(Rat(1), ax)) *
                         FactoredRational::geometric(Rat(1), bx);
    f = (f * FactoredRational(LaurentPoly::one_minus(Rat(1), bx))).reduced();
    CHECK(f.denominator().empty());
    CHECK(f.numerator() == LaurentPoly::one_minus(Rat(1), ax));
  }

  SUBCASE("division and reciprocal") {
    const FactoredRational f = FactoredRational(LaurentPoly::one_minus(Rat(3), x_over_y));
    const FactoredRational g = f / f;
    CHECK(g.equals(FactoredRational(1)));
    CHECK(f.reciprocal().equals(FactoredRational(1) / f));
    // Reciprocal needs a unit-times-binomial numerator.
    const FactoredRational three_terms(LaurentPoly(1) + LaurentPoly::variable(X) +
                                       LaurentPoly::variable(Y));
    CHECK_THROWS_AS(three_terms.reciprocal(), DomainError);
    CHECK_THROWS_AS(f / FactoredRational(), DomainError);
  }

  SUBCASE("pow") {
    const FactoredRational f = FactoredRational::geometric(Rat(1), mono({{X, 1}}));
    CHECK(f.pow(0).equals(FactoredRational(1)));
    CHECK(f.pow(2).equals(f * f));
    CHECK(f.pow(-1).equals(FactoredRational(LaurentPoly::one_minus(Rat(1), mono({{X, 1}})))));
  }

  SUBCASE("substitution") {
    // f = 1/(1 - z/a), z := a/2  ->  2
    const Variable Zv = Variable::residue(1, 1);
    const Variable A = Variable::letter('a');
    const FactoredRational f =
        FactoredRational::geometric(Rat(1), mono({{Zv, 1}, {A, -1}}));
    const FactoredRational val =
        f.substitute_monomials({{Zv, {Rat(1, 2), Monomial::variable(A)}}});
    CHECK(val.equals(FactoredRational(2)));
    // z := a makes the denominator factor vanish identically.
    CHECK_THROWS_AS(f.substitute_monomials({{Zv, {Rat(1), Monomial::variable(A)}}}), DomainError);
  }

  SUBCASE("to_laurent requires a complete cancellation") {
    const FactoredRational f = FactoredRational::geometric(Rat(1), x_over_y);
    CHECK_THROWS_AS(f.to_laurent(), DomainError);
    const FactoredRational g = f * FactoredRational(LaurentPoly::one_minus(Rat(1), x_over_y));
    CHECK(g.to_laurent().is_one());
  }
}

TEST_CASE("canonical serialization is stable") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentPoly p = random_poly(rng, 6);
    CHECK(p.str() == p.str());
    // Rebuilding from the term list reproduces the polynomial exactly.
    CHECK(LaurentPoly::from_terms(p.terms()) == p);
  }
  const LaurentPoly p =
      LaurentPoly::variable(X, 2) - LaurentPoly::variable(Y) * Rat(1, 3) + LaurentPoly(1);
  CHECK(p.str() == "x^2 - 1/3*y + 1");
}
