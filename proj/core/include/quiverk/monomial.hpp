#pragma once

#include <compare>
#include <string>
#include <vector>

#include "quiverk/variables.hpp"

namespace quiverk {

// Laurent monomial: a finite product of variables with integer (possibly
// negative) exponents. Factors are kept sorted by variable with no zero
// exponents, so equal monomials compare equal structurally.
//
// The total order is graded lexicographic: first by total degree (sum of all
// exponents, which may be negative), then by the exponent on the earliest
// variable where two monomials differ, larger exponent first. This order is
// multiplicative, which the exact-division routine relies on.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(Variable v, int exponent = 1);
  // Factors may be unsorted / contain repeats; they are normalized.
  static Monomial from_factors(std::vector<std::pair<Variable, int>> factors);

  bool is_one() const { return factors_.empty(); }
  int exponent_of(Variable v) const;
  int total_degree() const;
  const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& rhs) const;
  Monomial inverse() const;
  Monomial pow(int k) const;
  // Componentwise exponent comparison: true when every exponent of rhs is
  // <= the matching exponent here and rhs has no variable this lacks.
  bool divisible_by(const Monomial& rhs) const;
  Monomial operator/(const Monomial& rhs) const { return *this * rhs.inverse(); }

  // Drops `v` and returns the remaining monomial.
  Monomial without(Variable v) const;
  bool contains(Variable v) const { return exponent_of(v) != 0; }
  // Renames v -> w (w must not already appear unless equal to v).
  Monomial rename(Variable v, Variable w) const;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

  std::string str() const;

 private:
  std::vector<std::pair<Variable, int>> factors_;
};

}  // namespace quiverk
