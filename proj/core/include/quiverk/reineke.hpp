#pragma once

#include <string>
#include <vector>

#include "quiverk/quiver.hpp"

namespace quiverk {

// Ordered partition of a set of positive roots into parts I_1, ..., I_l.
using RootPartition = std::vector<std::vector<DimVector>>;

struct PartitionCheck {
  bool ok = true;
  std::string reason;  // first violated condition when !ok
};

// A directed partition requires
//   (a) <a, b> >= 0 for roots a, b in the same part, and
//   (b) <a, b> >= 0 >= <b, a> for a in an earlier part than b,
// and that the parts exactly cover `support` without repeats.
PartitionCheck is_directed_partition(const Quiver& q, const std::vector<DimVector>& support,
                                     const RootPartition& parts);

// Deterministic directed partition of the given roots. Roots are first
// grouped by the earliest vertex of their support in quiver topological
// order; the groups are ordered by their pairwise admissibility constraints.
// When that fails, falls back to singleton parts in a backtracking-found
// admissible total order. Throws DomainError if no directed partition
// exists (does not happen for subsets of the positive roots of a Dynkin
// quiver).
RootPartition directed_partition(const Quiver& q, const std::vector<DimVector>& support);

// Sequence of (vertex, rank) steps describing a resolution. Vertices are
// 0-based internally.
struct ResolutionPair {
  std::vector<int> vertex;
  std::vector<int> rank;

  std::size_t steps() const { return vertex.size(); }
  bool operator==(const ResolutionPair&) const = default;
};

// Builds the resolution pair of an orbit from a directed partition of its
// support: per part, the multiplicity-weighted sum p of its roots yields one
// step (i, p_i) for every vertex with p_i != 0, tails listed before heads.
ResolutionPair resolution_pair(const Quiver& q, const OrbitVector& m, const RootPartition& parts);
// Same, with the partition computed by directed_partition.
ResolutionPair resolution_pair(const Quiver& q, const OrbitVector& m);

// Drops steps of rank zero (they contribute nothing to the resolution);
// negative ranks throw DomainError.
ResolutionPair drop_zero_steps(const ResolutionPair& rp);

// Ranks must be positive, vertices in range, and per vertex the ranks may
// sum to at most v_i. Throws DomainError otherwise.
void validate_resolution_pair(const Quiver& q, const DimVector& v, const ResolutionPair& rp);

}  // namespace quiverk
