#pragma once

#include <map>
#include <string>
#include <vector>

#include "quiverk/kclass.hpp"

namespace quiverk {

// A finite sequence of integers, possibly negative, indexing a stable
// Grothendieck polynomial. A Partition is the canonical case: weakly
// decreasing, strictly positive entries, no trailing zeros.
using IntegerSequence = std::vector<int>;
using Partition = std::vector<int>;
using PartitionTuple = std::vector<Partition>;

bool is_partition(const IntegerSequence& s);

// Total size |mu| = sum of entries.
int sequence_weight(const IntegerSequence& s);

// Expansion of an orbit class in products of stable Grothendieck
// polynomials, one partition per vertex. Entries are the nonzero
// coefficients; codimension is the minimal total weight over the support.
struct QuiverCoefficientTable {
  std::map<PartitionTuple, long> entries;
  int codimension = 0;

  bool operator==(const QuiverCoefficientTable&) const = default;
};

std::string partition_str(const Partition& p);
std::string table_str(const QuiverCoefficientTable& t);

// Stable Grothendieck polynomial g_lambda(A - B) in explicit root alphabets:
// `a` lists the roots of the positive argument (these end up in denominators)
// and `b` the roots of the negative argument. Defined for any integer
// sequence lambda via an iterated residue, and equal to the symmetric-function
// G_lambda when lambda is a partition. Results are memoized per
// (lambda, a, b).
LaurentPoly g_poly_in(const IntegerSequence& lambda, const std::vector<Variable>& a,
                      const std::vector<Variable>& b);

// Same, in the canonical letter alphabets a_1..a_n / b_1..b_p.
LaurentPoly g_poly(const IntegerSequence& lambda, int rank_n, int rank_p);

// Rewrites g_lambda for an arbitrary integer sequence as an integer
// combination of partition-indexed g's: trailing non-positive entries drop,
// and a strict ascent (a, b) resolves through the transposition identity
//   g_(..,a,b,..) = sum_{j=a+1..b} g_(..,b,j,..) - sum_{j=a+1..b-1} g_(..,b-1,j,..)
// applied at the leftmost ascent until every survivor is a partition.
std::map<Partition, long> straighten(const IntegerSequence& lambda);

// Codimension of the orbit closure, counted from the resolution data: the
// rank of the vanishing conditions minus the fiber dimension of the tower.
long resolution_codimension(const Quiver& q, const DimVector& v, const ResolutionPair& rp);

// Quiver coefficients of the orbit closure: the unique expansion of its
// class in products of g's of the vertex differences E_i - M_i. Computed by
// expanding the resolution kernel as a Laurent series in shifted weights and
// straightening term by term; the series bound starts at degree_bound
// (default codimension + sum of v) and doubles until the table stabilizes.
QuiverCoefficientTable quiver_coefficients(const Quiver& q, const OrbitVector& m,
                                           const DimVector& v, int degree_bound = -1);

// Independent route to the same table: solves  sum_mu c_mu prod_i
// g_{mu_i}(E_i - M_i) = kc  exactly over all partition tuples with
// |mu| <= bound and len(mu_i) <= v_i, growing the bound until the residual
// vanishes. Throws DomainError if the system stays inconsistent at the cap.
QuiverCoefficientTable expansion_oracle(const KClass& kc, const Quiver& q, const DimVector& v,
                                        int degree_bound = -1);

// Alternating-sign property: (-1)^(|mu| - codim) c_mu >= 0 for every entry.
bool sign_check(const QuiverCoefficientTable& t, int codim);

}  // namespace quiverk
