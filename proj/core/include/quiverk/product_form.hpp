#pragma once

#include <map>
#include <utility>
#include <vector>

#include "quiverk/factored.hpp"

namespace quiverk {

// One multiplicative term of an integrand, kept fully factored:
//
//   coef * mono * prod(numf) / prod(den)
//
// where both factor lists hold canonical (1 - c*m)^mult blocks. Residue and
// series machinery works on sums of these (ProductSum); keeping numerators
// unexpanded is what makes the larger iterated-residue runs feasible.
struct FactorProduct {
  Rat coef = 1;
  Monomial mono;
  std::vector<DenomFactor> numf;
  std::vector<DenomFactor> den;

  bool is_zero() const { return coef == 0; }

  void mul_scalar(const Rat& c);
  void mul_monomial(const Rat& c, const Monomial& m);
  // Multiplies by (1 - c*m)^exp; the factor may vanish (c == 1, trivial m),
  // which zeroes the whole product.
  void mul_one_minus(const Rat& c, const Monomial& m, int exp = 1);
  // Divides by (1 - c*m)^exp; throws DomainError when the factor is zero.
  void div_one_minus(const Rat& c, const Monomial& m, int exp = 1);
  // Multiplies by an arbitrary polynomial factor of at most two terms.
  void mul_poly_factor(const LaurentPoly& p, int exp = 1);

  // Simultaneous substitution v := c*m per variable; no value monomial may
  // contain a substituted variable. A factor whose transformed coefficient
  // vanishes drops to 1; a denominator factor transformed to zero throws.
  FactorProduct substitute_monomials(
      const std::map<Variable, std::pair<Rat, Monomial>>& values) const;

  // Cancels identical (c, m) blocks between numf and den.
  void cancel();

  bool contains(Variable v) const;
  LaurentPoly numerator_expanded() const;
  FactoredRational to_factored() const;
  std::string str() const;
};

using ProductSum = std::vector<FactorProduct>;

// One FactorProduct per numerator term; factored denominator is shared.
ProductSum product_sum_from(const FactoredRational& f);
// Sums everything over a least common denominator and cancels. This is the
// step that turns an integrand-shaped sum back into a single canonical
// rational function.
FactoredRational combine(const ProductSum& terms);

}  // namespace quiverk
