#include <vector>

#include "doctest.h"
#include "quiverk/residues.hpp"
#include "quiverk/series.hpp"

using namespace quiverk;

namespace {

const Variable Av = Variable::letter('a');
const Variable Bv = Variable::letter('b');
const Variable Zv = Variable::residue(1, 1);

Monomial mono(std::vector<std::pair<Variable, int>> fs) {
  return Monomial::from_factors(std::move(fs));
}

// da/((1 - a/b) a): the one-variable model integrand.
FactoredRational model_integrand() {
  return FactoredRational::fraction(LaurentPoly::variable(Av, -1),
                                    {{Rat(1), mono({{Av, 1}, {Bv, -1}}), 1}});
}

}  // namespace

TEST_CASE("pole enumeration") {
  SUBCASE("single finite pole at a = b") {
    const auto poles = enumerate_poles(model_integrand(), Av);
    REQUIRE(poles.size() == 1);
    CHECK(poles[0].var == Av);
    CHECK(poles[0].c == Rat(1));
    CHECK(poles[0].m == Monomial::variable(Bv));
    CHECK(poles[0].order == 1);
  }

  SUBCASE("a bare monomial denominator has no finite nonzero pole") {
    const FactoredRational f(LaurentPoly::variable(Zv, -1));
    CHECK(enumerate_poles(f, Zv).empty());
  }

  SUBCASE("numerator vanishing cancels a would-be pole") {
    // (1 - z/a) / ((1 - z/a)(1 - z/b) z): only z = b remains.
    const FactoredRational f = FactoredRational::fraction(
        LaurentPoly::one_minus(Rat(1), mono({{Zv, 1}, {Av, -1}})) *
            LaurentPoly::variable(Zv, -1),
        {{Rat(1), mono({{Zv, 1}, {Av, -1}}), 1}, {Rat(1), mono({{Zv, 1}, {Bv, -1}}), 1}});
    const auto poles = enumerate_poles(f, Zv);
    REQUIRE(poles.size() == 1);
    CHECK(poles[0].m == Monomial::variable(Bv));
  }

  SUBCASE("multiplicities accumulate") {
    const FactoredRational f = FactoredRational::geometric(Rat(1), mono({{Zv, 1}, {Av, -1}}), 2);
    const auto poles = enumerate_poles(f, Zv);
    REQUIRE(poles.size() == 1);
    CHECK(poles[0].order == 2);
  }
}

TEST_CASE("single residues and the two-point operator") {
  SUBCASE("residue at the finite pole") {
    const FactoredRational f = model_integrand();
    const auto poles = enumerate_poles(f, Av);
    REQUIRE(poles.size() == 1);
    CHECK(residue_at(f, poles[0]).equals(FactoredRational(-1)));
  }

  SUBCASE("the model integrand integrates to one") {
    CHECK(ir_zero_infty(model_integrand(), Av).equals(FactoredRational(1)));
  }

  SUBCASE("dlog alone integrates to zero") {
    const FactoredRational f(LaurentPoly::variable(Zv, -1));
    CHECK(ir_zero_infty(f, Zv).is_zero());
  }

  SUBCASE("result never mentions the eliminated variable") {
    const FactoredRational g = ir_zero_infty(model_integrand(), Av);
    CHECK_FALSE(g.contains(Av));
  }
}

TEST_CASE("residue-theorem consistency against series extraction") {
  // For f = z^e * prod numf / prod geo(c_i z m_i) with enough denominator
  // decay there is no residue at infinity, so the operator's value (minus the
  // sum of finite residues) must equal the z^{-1} series coefficient at 0.
  struct Case {
    int e;
    std::vector<std::pair<Rat, Monomial>> den;  // (c, m) of (1 - c z m)^{-1}
    std::vector<std::pair<Rat, Monomial>> num;  // (c, m) of (1 - c z m)
  };
  const Monomial alpha = Monomial::variable(Av);
  const Monomial beta = Monomial::variable(Bv);
  const Monomial one;
  const std::vector<Case> cases = {
      {-1, {{Rat(1), alpha}}, {}},
      {-1, {{Rat(2), one}}, {}},
      {-2, {{Rat(1), alpha}, {Rat(1), beta}}, {}},
      {-2, {{Rat(1), alpha}, {Rat(-3, 2), beta}}, {{Rat(1), alpha * beta}}},
      {-3, {{Rat(1), alpha}, {Rat(1), beta}, {Rat(2), alpha}}, {{Rat(5), one}}},
      {-1, {{Rat(1), alpha}, {Rat(1), alpha}}, {}},  // doubled pole
      {-2, {{Rat(1, 2), alpha.pow(2)}, {Rat(1), beta}}, {{Rat(-1), alpha}}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.e);
    FactorProduct t;
    t.mul_monomial(Rat(1), Monomial::variable(Zv).pow(c.e));
    for (const auto& [cc, m] : c.den) t.div_one_minus(cc, m * Monomial::variable(Zv));
    for (const auto& [cc, m] : c.num) t.mul_one_minus(cc, m * Monomial::variable(Zv));
    const FactoredRational f = t.to_factored();

    const FactoredRational via_residues = ir_zero_infty(f, Zv);

    // Oracle: coefficient of z^{-1} in the expansion at z = 0.
    const LaurentPoly series =
        series_expand(f * FactoredRational(LaurentPoly::variable(Zv)), ExpansionDomain({Zv}),
                      -c.e + 2);
    const LaurentPoly res0 = series.coefficient_in(Zv, 0);
    CHECK(via_residues.equals(FactoredRational(res0)));
  }
}

TEST_CASE("product-sum elimination matches the rational route") {
  FactorProduct t1;
  t1.mul_monomial(Rat(1), Monomial::variable(Zv, -1));
  t1.div_one_minus(Rat(1), mono({{Zv, 1}, {Av, -1}}));
  FactorProduct t2;
  t2.mul_monomial(Rat(-1, 3), Monomial::variable(Zv, -2));
  t2.div_one_minus(Rat(1), mono({{Zv, 1}, {Bv, -1}}), 2);
  t2.mul_one_minus(Rat(2), mono({{Zv, 1}}));
  const ProductSum sum = {t1, t2};

  const FactoredRational via_products = combine(ir_once(sum, Zv));
  const FactoredRational via_rational = ir_zero_infty(combine(sum), Zv);
  CHECK(via_products.equals(via_rational));
}

TEST_CASE("iterated elimination") {
  const Variable Z1 = Variable::residue(1, 1);
  const Variable Z2 = Variable::residue(1, 2);

  SUBCASE("empty alphabet is the identity") {
    const FactoredRational f = model_integrand();
    CHECK(ir_alphabet(f, {}).equals(f));
  }

  SUBCASE("a one-letter alphabet is the plain operator") {
    const FactoredRational f = model_integrand();
    CHECK(ir_alphabet(f, {Av}).equals(ir_zero_infty(f, Av)));
  }

  SUBCASE("two letters eliminate in the given order") {
    // f = 1/((1 - z1/z2) z1 z2): inner variable first gives 1 then 0 stays 0.
    FactorProduct t;
    t.mul_monomial(Rat(1), mono({{Z1, -1}, {Z2, -1}}));
    t.div_one_minus(Rat(1), mono({{Z1, 1}, {Z2, -1}}));
    const FactoredRational f = t.to_factored();
    const FactoredRational inner_first = ir_alphabet(f, {Z1, Z2});
    // IR_z1 leaves dz2/z2 whose operator value is 0.
    CHECK(inner_first.is_zero());
    const FactoredRational outer_first = ir_alphabet(f, {Z2, Z1});
    CHECK_FALSE(ir_zero_infty(f, Z2).equals(FactoredRational(1)));
    CHECK(outer_first.is_zero());
  }
}

TEST_CASE("grassmannian push-forwards") {
  const std::vector<Variable> roots2 = {Variable::letter('a', 1), Variable::letter('a', 2)};
  const Variable sig = Variable::letter('s', 1);
  const Variable om = Variable::letter('w', 1);
  const Variable b1 = Variable::letter('b', 1);
  const Variable b2 = Variable::letter('b', 2);

  SUBCASE("the worked two-root example, all three routes") {
    // f = (1 - b1/w)(1 - b2/w) pushed along the line sub-bundle of rank 2.
    const FactoredRational f(LaurentPoly::one_minus(Rat(1), mono({{b1, 1}, {om, -1}})) *
                             LaurentPoly::one_minus(Rat(1), mono({{b2, 1}, {om, -1}})));
    LaurentPoly expect = LaurentPoly(1);
    expect -= LaurentPoly::monomial(
        Rat(1), mono({{b1, 1}, {b2, 1}, {roots2[0], -1}, {roots2[1], -1}}));

    const FactoredRational loc = localization_pushforward(f, {sig}, {om}, roots2);
    CHECK(loc.equals(FactoredRational(expect)));
    const FactoredRational full = ir_pushforward_full(f, {sig}, {om}, roots2);
    CHECK(full.equals(FactoredRational(expect)));
    const FactoredRational viaq = ir_pushforward_Q(f, {om}, roots2);
    CHECK(viaq.equals(FactoredRational(expect)));
  }

  SUBCASE("push-forward of the trivial class is trivial") {
    for (int n = 1; n <= 3; ++n) {
      std::vector<Variable> roots;
      for (int i = 1; i <= n; ++i) roots.push_back(Variable::letter('a', i));
      for (int k = 1; k <= n; ++k) {
        std::vector<Variable> sigv, omv;
        for (int i = 1; i <= k; ++i) sigv.push_back(Variable::letter('s', i));
        for (int i = 1; i <= n - k; ++i) omv.push_back(Variable::letter('w', i));
        CAPTURE(n);
        CAPTURE(k);
        CHECK(localization_pushforward(FactoredRational(1), sigv, omv, roots)
                  .equals(FactoredRational(1)));
        CHECK(ir_pushforward_S(FactoredRational(1), sigv, roots).equals(FactoredRational(1)));
      }
    }
  }

  SUBCASE("full-rank sub-bundle substitutes the whole alphabet") {
    // k = n: the sum has one term and no denominator.
    const FactoredRational f(
        LaurentPoly::monomial(Rat(1), mono({{Variable::letter('s', 1), 1},
                                            {Variable::letter('s', 2), 1}})));
    const FactoredRational got = localization_pushforward(
        f, {Variable::letter('s', 1), Variable::letter('s', 2)}, {}, roots2);
    CHECK(got.equals(FactoredRational(
        LaurentPoly::monomial(Rat(1), mono({{roots2[0], 1}, {roots2[1], 1}})))));
  }

  SUBCASE("localization agrees with the full-alphabet residue on monomials") {
    for (int n = 2; n <= 3; ++n) {
      std::vector<Variable> roots;
      for (int i = 1; i <= n; ++i) roots.push_back(Variable::letter('a', i));
      for (int k = 1; k < n; ++k) {
        std::vector<Variable> sigv, omv;
        for (int i = 1; i <= k; ++i) sigv.push_back(Variable::letter('s', i));
        for (int i = 1; i <= n - k; ++i) omv.push_back(Variable::letter('w', i));
        // Symmetric monomial-ish classes in each slot group.
        std::vector<LaurentPoly> slots;
        LaurentPoly se(1), oe(1);
        for (const auto& v : sigv) se *= LaurentPoly::variable(v);
        for (const auto& v : omv) oe *= LaurentPoly::variable(v, 2);
        slots.push_back(se);
        slots.push_back(se * oe);
        LaurentPoly ssum, osum;
        for (const auto& v : sigv) ssum += LaurentPoly::variable(v);
        for (const auto& v : omv) osum += LaurentPoly::variable(v);
        slots.push_back(ssum * osum + LaurentPoly(3));
        for (const auto& p : slots) {
          CAPTURE(n);
          CAPTURE(k);
          const FactoredRational f(p);
          CHECK(localization_pushforward(f, sigv, omv, roots)
                    .equals(ir_pushforward_full(f, sigv, omv, roots)));
        }
      }
    }
  }
}
