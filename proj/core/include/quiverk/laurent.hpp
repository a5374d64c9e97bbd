#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quiverk/monomial.hpp"
#include "quiverk/rational.hpp"

namespace quiverk {

// Laurent polynomial with exact rational coefficients. Terms are stored in
// strictly descending monomial order with nonzero coefficients, so structural
// equality is mathematical equality and serialization is canonical.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    Rat coef;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(const Rat& c);         // constant
  LaurentPoly(long c) : LaurentPoly(Rat(c)) {}
  static LaurentPoly variable(Variable v, int exponent = 1);
  static LaurentPoly monomial(const Rat& c, const Monomial& m);
  // Normalizes an arbitrary term list (merges, drops zeros, sorts).
  static LaurentPoly from_terms(std::vector<Term> terms);
  // 1 - c*m
  static LaurentPoly one_minus(const Rat& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Constant term (coefficient of the trivial monomial).
  Rat constant_term() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  LaurentPoly& operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
  LaurentPoly& operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
  LaurentPoly operator*(const Rat& c) const;
  LaurentPoly mul_monomial(const Rat& c, const Monomial& m) const;
  LaurentPoly pow(unsigned k) const;
  bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }

  // Exact division: returns the quotient when rhs divides this exactly in the
  // Laurent polynomial ring, std::nullopt otherwise.
  std::optional<LaurentPoly> exact_div(const LaurentPoly& rhs) const;

  // Substitutes v := c * m. Negative powers of v require c != 0.
  LaurentPoly substitute_monomial(Variable v, const Rat& c, const Monomial& m) const;
  LaurentPoly rename(Variable v, Variable w) const;

  std::set<Variable> variables() const;
  bool contains(Variable v) const;
  int max_degree_in(Variable v) const;  // 0 when absent
  int min_degree_in(Variable v) const;  // 0 when absent
  // Collects the coefficient of v^k as a polynomial in the other variables.
  LaurentPoly coefficient_in(Variable v, int k) const;
  // Sum of all exponents, maximized / minimized over terms (0 for the zero
  // polynomial).
  int max_total_degree() const;
  int min_total_degree() const;
  // Terms whose total degree equals d.
  LaurentPoly total_degree_part(int d) const;

  // Invariance under every transposition of adjacent variables in the list.
  bool is_symmetric_in(const std::vector<Variable>& alphabet) const;

  Rat evaluate(const std::map<Variable, Rat>& point) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

inline LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

}  // namespace quiverk
