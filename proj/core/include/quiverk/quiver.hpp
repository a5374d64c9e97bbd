#pragma once

#include <string>
#include <vector>

namespace quiverk {

// Dimension vectors and roots are plain integer vectors indexed by vertex
// (0-based internally; all serialization uses 1-based vertex labels).
using DimVector = std::vector<int>;

struct Arrow {
  int tail;
  int head;
  bool operator==(const Arrow&) const = default;
};

// A finite quiver. Construction only checks index ranges; whether the
// underlying graph is a simply-laced Dynkin diagram is checked by
// dynkin_type(), which root enumeration requires.
class Quiver {
 public:
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  // Sorted distinct tails of arrows pointing at `head`.
  std::vector<int> tails_of(int head) const;

  // <u, w> = sum_i u_i w_i - sum_{a} u_{tail(a)} w_{head(a)}
  long euler_form(const DimVector& u, const DimVector& w) const;

  struct DynkinType {
    char family;  // 'A', 'D' or 'E'
    int rank;
    std::string str() const { return family + std::to_string(rank); }
  };
  // Classifies the underlying undirected graph; throws DomainError with a
  // "not Dynkin: ..." reason otherwise.
  DynkinType dynkin_type() const;

  // All positive roots in canonical order: ascending height, ties broken by
  // lexicographically larger coefficient vector first (so the vertex-1
  // simple root leads). Requires a Dynkin quiver.
  std::vector<DimVector> positive_roots() const;

  // Vertex order with every arrow tail before its head; Kahn's algorithm
  // taking the smallest available vertex first. Throws on directed cycles.
  std::vector<int> topo_order() const;

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

// Canonical root order used throughout (see Quiver::positive_roots).
bool root_order_less(const DimVector& a, const DimVector& b);

// An orbit of the representation variety: multiplicity of each positive
// root appearing in the decomposition. Entries are kept sorted in canonical
// root order with positive multiplicities.
struct OrbitVector {
  std::vector<std::pair<DimVector, int>> entries;

  static OrbitVector from_entries(std::vector<std::pair<DimVector, int>> entries);
};

// Checks that every entry is a positive root of q (throws DomainError
// otherwise) and returns the dimension vector sum(mult * root).
DimVector dimension_vector(const Quiver& q, const OrbitVector& m);

std::string dimvector_str(const DimVector& d);

}  // namespace quiverk
