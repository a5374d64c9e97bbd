#pragma once

#include <map>
#include <string>
#include <vector>

#include "quiverk/laurent.hpp"

namespace quiverk {

// One denominator (or factored numerator) building block (1 - c*m)^mult.
// Canonical shape: c != 0, m a non-trivial monomial with m > 1 in monomial
// order, mult >= 1. Any (1 - c*m) with m < 1 can be brought to this shape by
// the identity 1 - c*m = (-c*m) * (1 - (1/c) * m^{-1}).
struct DenomFactor {
  Rat c;
  Monomial m;
  int mult = 1;

  LaurentPoly poly() const { return LaurentPoly::one_minus(c, m); }
  std::string str() const;
  bool operator==(const DenomFactor&) const = default;
};

// Canonicalized factor lists, sorted by (m, c) with multiplicities merged.
namespace factor_lists {

// Inserts a factor already in canonical shape.
void push(std::vector<DenomFactor>& fs, const Rat& c, const Monomial& m, int mult);
// Accounts for dividing by (1 - c*m)^mult with arbitrary c, m: the canonical
// factor lands in `fs` and the numerator adjustment multiplies into
// (unit_c, unit_m). c == 0 is a no-op; c == 1 with trivial m is a zero
// denominator and throws.
void push_canonical(std::vector<DenomFactor>& fs, const Rat& c, const Monomial& m, int mult,
                    Rat& unit_c, Monomial& unit_m);
std::vector<DenomFactor> merge(const std::vector<DenomFactor>& a,
                               const std::vector<DenomFactor>& b);
// max(mult_a, mult_b) per factor: least common denominator of two lists.
std::vector<DenomFactor> lcm(const std::vector<DenomFactor>& a,
                             const std::vector<DenomFactor>& b);
// Pointwise difference whole - part; part must be contained in whole.
std::vector<DenomFactor> diff(const std::vector<DenomFactor>& whole,
                              const std::vector<DenomFactor>& part);
LaurentPoly expand(const std::vector<DenomFactor>& fs);

}  // namespace factor_lists

// Rational function kept as an expanded numerator over a multiset of
// binomial denominator factors. The denominator is never expanded, which is
// what keeps pole bookkeeping and series expansion exact and cheap.
class FactoredRational {
 public:
  FactoredRational() = default;  // zero
  FactoredRational(LaurentPoly num) : num_(std::move(num)) {}
  FactoredRational(const Rat& c) : num_(LaurentPoly(c)) {}
  FactoredRational(long c) : num_(LaurentPoly(c)) {}
  // num / prod(den); den entries may be in arbitrary shape and are
  // canonicalized here.
  static FactoredRational fraction(LaurentPoly num, const std::vector<DenomFactor>& den);
  // 1 / (1 - c*m)^mult
  static FactoredRational geometric(const Rat& c, const Monomial& m, int mult = 1);

  const LaurentPoly& numerator() const { return num_; }
  const std::vector<DenomFactor>& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  FactoredRational operator-() const;
  FactoredRational operator+(const FactoredRational& rhs) const;
  FactoredRational operator-(const FactoredRational& rhs) const;
  FactoredRational operator*(const FactoredRational& rhs) const;
  FactoredRational operator/(const FactoredRational& rhs) const;
  FactoredRational& operator+=(const FactoredRational& r) { return *this = *this + r; }
  FactoredRational& operator-=(const FactoredRational& r) { return *this = *this - r; }
  FactoredRational& operator*=(const FactoredRational& r) { return *this = *this * r; }
  FactoredRational& operator/=(const FactoredRational& r) { return *this = *this / r; }
  // Requires a numerator with at most two terms (a unit times a binomial);
  // throws DomainError otherwise.
  FactoredRational reciprocal() const;
  FactoredRational pow(int k) const;

  // Cancels denominator factors that divide the numerator exactly.
  FactoredRational reduced() const;
  bool equals(const FactoredRational& rhs) const { return (*this - rhs).is_zero(); }
  // Requires the denominator to cancel completely; throws otherwise.
  LaurentPoly to_laurent() const;

  // Simultaneous substitution. Values may be arbitrary rational functions;
  // throws DomainError when a substituted denominator factor cannot be
  // represented (its transformed numerator has more than two terms).
  FactoredRational substitute(const std::map<Variable, FactoredRational>& values) const;
  // Fast path: every variable goes to c * m.
  FactoredRational substitute_monomials(
      const std::map<Variable, std::pair<Rat, Monomial>>& values) const;
  FactoredRational rename(Variable v, Variable w) const;

  bool contains(Variable v) const;

  std::string str() const;

 private:
  LaurentPoly num_;
  std::vector<DenomFactor> den_;
};

inline FactoredRational operator*(const Rat& c, const FactoredRational& f) {
  return FactoredRational(c) * f;
}

}  // namespace quiverk
