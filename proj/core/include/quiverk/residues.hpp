#pragma once

#include <string>
#include <vector>

#include "quiverk/product_form.hpp"

namespace quiverk {

// A finite nonzero pole of a rational form in one variable: var = c * m,
// where m is a monomial in the other variables and c != 0. `order` is the
// pole order after cancelling numerator factors that vanish there; locations
// are only reported when order >= 1.
struct PoleLocation {
  Variable var;
  Rat c;
  Monomial m;
  int order = 1;

  std::string str() const;
};

// Finite nonzero poles in `var`, grouped by location with multiplicities
// added. Every denominator factor involving var must be linear in it;
// otherwise DomainError.
std::vector<PoleLocation> enumerate_poles(const FactoredRational& f, Variable var);
std::vector<PoleLocation> enumerate_poles(const FactorProduct& f, Variable var);

// Residue of f d(var) at var = p.c * p.m, by the local substitution
// var = (c*m)(1+t) and extraction of the t^{-1} coefficient.
FactoredRational residue_at(const FactoredRational& f, const PoleLocation& p);
ProductSum residue_at(const FactorProduct& f, const PoleLocation& p);

// IR_{var=0,infty}(f dvar): the sum of the residues at 0 and infinity,
// computed as minus the sum of the residues at the finite nonzero poles.
// Any dlog measure must already be folded into f as a 1/var factor. The
// result never involves var.
FactoredRational ir_zero_infty(const FactoredRational& f, Variable var);
ProductSum ir_once(const ProductSum& f, Variable var);

// Iterated IR over an ordered alphabet, innermost variable first: the
// variables are eliminated in the order given.
FactoredRational ir_alphabet(const FactoredRational& f, const std::vector<Variable>& z);
ProductSum ir_alphabet_products(ProductSum f, const std::vector<Variable>& z);

// Torus-fixed-point push-forward along a Grassmannization: the sum over all
// k-element subsets I of the root list,
//
//   sum_I f(alpha_I; alpha_complement) / prod_{i in I, j not in I} (1 - alpha_i/alpha_j),
//
// where f's sigma-slots receive alpha_I and omega-slots the complement, both
// in increasing root order (f must be separately symmetric in each group for
// the result to be meaningful).
FactoredRational localization_pushforward(const FactoredRational& f,
                                          const std::vector<Variable>& sigma,
                                          const std::vector<Variable>& omega,
                                          const std::vector<Variable>& roots);

// The same push-forward as one iterated residue over the full alphabet
// sigma ++ omega:
//
//   IR( f(z) * prod_{i<j}(1 - z_j/z_i) / prod_{i,j}(1 - z_i/alpha_j) * dlog z ).
FactoredRational ir_pushforward_full(const FactoredRational& f,
                                     const std::vector<Variable>& sigma,
                                     const std::vector<Variable>& omega,
                                     const std::vector<Variable>& roots);

// Push-forward of a class depending only on the sigma-slots (k residue
// variables instead of n).
FactoredRational ir_pushforward_S(const FactoredRational& f,
                                  const std::vector<Variable>& sigma,
                                  const std::vector<Variable>& roots);

// Push-forward of a class depending only on the omega-slots: f's omega
// variables are replaced by reciprocals of fresh residue variables z, and
//
//   IR( f(z^{-1}) * prod_{i<j<=q}(1 - z_j/z_i) / prod_{i<=q, j<=n}(1 - alpha_j z_i) * dlog z ).
FactoredRational ir_pushforward_Q(const FactoredRational& f,
                                  const std::vector<Variable>& omega,
                                  const std::vector<Variable>& roots);

}  // namespace quiverk
