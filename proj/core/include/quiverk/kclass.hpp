#pragma once

#include <vector>

#include "quiverk/product_form.hpp"
#include "quiverk/quiver.hpp"
#include "quiverk/reineke.hpp"

namespace quiverk {

// The K-class of an orbit closure: a Laurent polynomial in the Grothendieck
// roots e{i}_{j}, 1 <= j <= v_i, separately symmetric in each alphabet.
using KClass = LaurentPoly;

// Roots of the tautological bundle at `vertex` (0-based): e{vertex+1}_{1..size}.
std::vector<Variable> bundle_roots(int vertex, int size);
// Concatenated roots of the bundles at the tails of arrows into vertex i,
// tails ascending.
std::vector<Variable> incoming_roots(const Quiver& q, const DimVector& v, int i);

// Throws DomainError unless p is symmetric within each vertex alphabet.
void require_alphabet_symmetry(const LaurentPoly& p, const DimVector& v);

// The assembled integrand prod_k R_k I_k D_k of the orbit-class formula over
// fresh residue alphabets z_k of sizes r_k:
//   R_k: (1 - x y) over incoming roots x, divided by the same over the
//        vertex's own roots, for every y in z_k;
//   I_k: (1 - y/x) over earlier alphabets at the same vertex, divided by the
//        same over earlier alphabets at tail vertices;
//   D_k: the discriminant prod_{i<j}(1 - z_{kj}/z_{ki}) and dlog measure.
struct FactorSet {
  ResolutionPair rp;
  std::vector<std::vector<Variable>> alphabets;
  FactorProduct integrand;
  // Innermost-first elimination order: the last step's alphabet first, and
  // z_{k,1} before z_{k,2} within an alphabet.
  std::vector<Variable> elimination_order;
};

FactorSet build_factors(const Quiver& q, const DimVector& v, const ResolutionPair& rp);

// Iterated residue of the assembled integrand. The result is validated to be
// a true Laurent polynomial, separately symmetric in each vertex alphabet.
KClass kclass(const Quiver& q, const DimVector& v, const ResolutionPair& rp);
// Same, with the resolution pair built from a directed partition of the
// support of m.
KClass kclass(const Quiver& q, const OrbitVector& m, const DimVector& v);
KClass kclass(const Quiver& q, const OrbitVector& m);

// Alternative evaluation: one zero-scheme inclusion factor and one
// Grassmannian push-forward per resolution step, composed from the last step
// down to the first, starting from the class 1. Agrees with kclass exactly.
KClass stepwise_pushforward(const Quiver& q, const DimVector& v, const ResolutionPair& rp);
KClass stepwise_pushforward(const Quiver& q, const OrbitVector& m);

}  // namespace quiverk
