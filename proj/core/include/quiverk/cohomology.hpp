#pragma once

#include <utility>
#include <vector>

#include "quiverk/groth.hpp"

namespace quiverk {

// Polynomial in Chern roots (the Grothendieck root symbols reinterpreted) or,
// after to_chern_classes, in the per-bundle class symbols c{i}_{k}.
using ChernPoly = LaurentPoly;

// c_0..c_n elementary symmetric polynomials of the given roots (c_0 = 1).
std::vector<LaurentPoly> elementary_symmetric(const std::vector<Variable>& roots);

// Substitutes every root monomial prod e^a by exp(xi * sum a e), expands in
// xi and returns the first nonvanishing coefficient together with its order.
// The order is also the homogeneous degree of the returned polynomial. The
// expansion cap defaults to max(2 * (#roots)^2, 8); exceeding it throws.
std::pair<ChernPoly, int> chern_character_leading(const KClass& kc, int cap = -1);

// Exact rewrite of a polynomial symmetric in each root alphabet into the
// elementary symmetric classes c{i}_{k} of those alphabets. Alphabet sizes
// are inferred from the largest index present per vertex. Throws DomainError
// on asymmetric input or negative root exponents.
LaurentPoly to_chern_classes(const ChernPoly& p);

// Coefficients of sum_k cV[k] (-xi)^k / sum_l cW[l] (-xi)^l: the Chern
// classes of the dual difference V^v - W^v. c[0] = 1 always.
struct RelativeChernSeries {
  std::vector<LaurentPoly> c;
};

RelativeChernSeries relative_chern(const std::vector<LaurentPoly>& cV,
                                   const std::vector<LaurentPoly>& cW, int order);

// Complete homogeneous classes h_0..h_order of the difference V - W given by
// Chern roots: coefficients of prod_w (1 - w xi) / prod_v (1 - v xi), so that
// h(xi) c(-xi) = 1 against the Chern series of V - W.
std::vector<LaurentPoly> h_classes(const std::vector<Variable>& v_roots,
                                   const std::vector<Variable>& w_roots, int order);

// Jacobi-Trudi determinant det(h_{lambda_i + j - i}). Entries below index 0
// are zero; an index beyond the supplied list throws (insufficient order).
LaurentPoly schur_det(const Partition& lambda, const std::vector<LaurentPoly>& h);

// Degree of the lowest nonvanishing cohomology term of the orbit class.
int codimension(const Quiver& q, const OrbitVector& m, const DimVector& v);

}  // namespace quiverk
