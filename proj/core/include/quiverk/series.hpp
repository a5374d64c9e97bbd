#pragma once

#include <map>
#include <vector>

#include "quiverk/product_form.hpp"

namespace quiverk {

// An ordered list of variables, smallest first. Geometric series are taken in
// the direction where every denominator factor's monomial is "small": its
// first domain variable (in this order) with nonzero exponent must appear
// with positive exponent.
class ExpansionDomain {
 public:
  explicit ExpansionDomain(std::vector<Variable> smallest_first);

  const std::vector<Variable>& order() const { return order_; }
  bool contains(Variable v) const { return positions_.count(v) > 0; }

  enum class Direction { NoDomainVariable, Small, Large };
  Direction classify(const Monomial& m) const;

  // Sum of the positive exponents of domain variables: the truncation degree
  // used by series_expand's bound.
  int truncation_degree(const Monomial& m) const;

 private:
  std::vector<Variable> order_;
  std::map<Variable, int> positions_;
};

// Expands a rational function as a power series in the domain variables and
// returns the sum of all terms of truncation degree <= degree_bound, exactly.
// Requires every denominator factor to be small in the domain (so its
// geometric series converges formally); throws DomainError otherwise.
LaurentPoly series_expand(const FactoredRational& f, const ExpansionDomain& domain,
                          int degree_bound);
LaurentPoly series_expand(const ProductSum& f, const ExpansionDomain& domain, int degree_bound);

}  // namespace quiverk
