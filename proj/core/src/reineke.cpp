#include "quiverk/reineke.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quiverk/errors.hpp"

namespace quiverk {

namespace {

std::string pair_str(const DimVector& a, const DimVector& b) {
  return dimvector_str(a) + ", " + dimvector_str(b);
}

// Whether part `a` may be listed before part `b`.
bool may_precede(const Quiver& q, const std::vector<DimVector>& a,
                 const std::vector<DimVector>& b) {
  for (const auto& x : a)
    for (const auto& y : b)
      if (q.euler_form(x, y) < 0 || q.euler_form(y, x) > 0) return false;
  return true;
}

bool part_internally_valid(const Quiver& q, const std::vector<DimVector>& part) {
  for (const auto& x : part)
    for (const auto& y : part)
      if (q.euler_form(x, y) < 0) return false;
  return true;
}

// Backtracking construction of an admissible total order with singleton
// parts: the next root must be placeable before everything remaining.
// Candidates are tried in canonical root order, so the result is
// deterministic.
bool singleton_order(const Quiver& q, std::vector<DimVector> remaining,
                     std::vector<DimVector>& out) {
  if (remaining.empty()) return true;
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    const DimVector candidate = remaining[i];
    bool fits = true;
    for (std::size_t j = 0; j < remaining.size() && fits; ++j) {
      if (j == i) continue;
      fits = q.euler_form(candidate, remaining[j]) >= 0 &&
             q.euler_form(remaining[j], candidate) <= 0;
    }
    if (!fits) continue;
    std::vector<DimVector> rest;
    rest.reserve(remaining.size() - 1);
    for (std::size_t j = 0; j < remaining.size(); ++j)
      if (j != i) rest.push_back(remaining[j]);
    out.push_back(candidate);
    if (singleton_order(q, std::move(rest), out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

PartitionCheck is_directed_partition(const Quiver& q, const std::vector<DimVector>& support,
                                     const RootPartition& parts) {
  std::multiset<DimVector> covered;
  for (const auto& part : parts) {
    if (part.empty()) return {false, "empty part"};
    for (const auto& r : part) covered.insert(r);
  }
  std::multiset<DimVector> wanted(support.begin(), support.end());
  if (covered != wanted) return {false, "parts do not cover the support exactly"};

  for (const auto& part : parts)
    for (const auto& x : part)
      for (const auto& y : part)
        if (q.euler_form(x, y) < 0)
          return {false, "<a,b> < 0 within one part for a, b = " + pair_str(x, y)};
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (const auto& x : parts[i])
        for (const auto& y : parts[j]) {
          if (q.euler_form(x, y) < 0)
            return {false, "<a,b> < 0 across parts for a, b = " + pair_str(x, y)};
          if (q.euler_form(y, x) > 0)
            return {false, "<b,a> > 0 across parts for a, b = " + pair_str(x, y)};
        }
  return {};
}

RootPartition directed_partition(const Quiver& q, const std::vector<DimVector>& support) {
  if (support.empty()) return {};
  {
    std::set<DimVector> uniq(support.begin(), support.end());
    if (uniq.size() != support.size())
      throw DomainError("repeated root in directed partition input");
  }

  // Group by the earliest supported vertex in topological order.
  std::vector<int> topo = q.topo_order();
  std::vector<int> topo_pos(q.vertex_count());
  for (std::size_t i = 0; i < topo.size(); ++i) topo_pos[topo[i]] = static_cast<int>(i);
  std::map<int, std::vector<DimVector>> groups;  // keyed by topo position
  for (const auto& root : support) {
    int best = -1;
    for (int v = 0; v < q.vertex_count(); ++v)
      if (root[v] != 0 && (best < 0 || topo_pos[v] < best)) best = topo_pos[v];
    groups[best].push_back(root);
  }

  bool grouped_ok = true;
  for (auto& [key, part] : groups) {
    std::sort(part.begin(), part.end(), root_order_less);
    grouped_ok = grouped_ok && part_internally_valid(q, part);
  }

  if (grouped_ok) {
    // Order the groups: an edge a -> b wherever b cannot come first. Kahn's
    // algorithm on that digraph, smallest group key first.
    std::vector<int> keys;
    std::vector<std::vector<DimVector>> parts;
    for (auto& [key, part] : groups) {
      keys.push_back(key);
      parts.push_back(std::move(part));
    }
    std::size_t g = parts.size();
    std::vector<std::vector<bool>> edge(g, std::vector<bool>(g, false));
    bool orderable = true;
    for (std::size_t a = 0; a < g && orderable; ++a)
      for (std::size_t b = a + 1; b < g && orderable; ++b) {
        bool ab = may_precede(q, parts[a], parts[b]);
        bool ba = may_precede(q, parts[b], parts[a]);
        if (ab && !ba) edge[a][b] = true;
        if (ba && !ab) edge[b][a] = true;
        orderable = ab || ba;
      }
    if (orderable) {
      std::vector<int> indeg(g, 0);
      for (std::size_t a = 0; a < g; ++a)
        for (std::size_t b = 0; b < g; ++b)
          if (edge[a][b]) ++indeg[b];
      std::vector<bool> done(g, false);
      RootPartition ordered;
      for (std::size_t step = 0; step < g; ++step) {
        int pick = -1;
        for (std::size_t a = 0; a < g; ++a)
          if (!done[a] && indeg[a] == 0 && (pick < 0 || keys[a] < keys[pick]))
            pick = static_cast<int>(a);
        if (pick < 0) break;  // constraint cycle; fall through to singletons
        done[pick] = true;
        ordered.push_back(parts[pick]);
        for (std::size_t b = 0; b < g; ++b)
          if (edge[pick][b]) --indeg[b];
      }
      if (ordered.size() == g && is_directed_partition(q, support, ordered).ok) return ordered;
    }
  }

  // Fallback: singleton parts in an admissible total order.
  std::vector<DimVector> sorted = support;
  std::sort(sorted.begin(), sorted.end(), root_order_less);
  std::vector<DimVector> order;
  if (!singleton_order(q, sorted, order))
    throw DomainError("no directed partition found for the given roots");
  RootPartition parts;
  for (auto& r : order) parts.push_back({std::move(r)});
  return parts;
}

ResolutionPair resolution_pair(const Quiver& q, const OrbitVector& m,
                               const RootPartition& parts) {
  std::vector<DimVector> support;
  for (const auto& [root, mult] : m.entries) support.push_back(root);
  auto check = is_directed_partition(q, support, parts);
  if (!check.ok) throw DomainError("not a directed partition: " + check.reason);

  std::map<DimVector, int> mult;
  for (const auto& [root, k] : m.entries) mult[root] = k;
  std::vector<int> topo = q.topo_order();

  ResolutionPair rp;
  for (const auto& part : parts) {
    DimVector p(q.vertex_count(), 0);
    for (const auto& root : part)
      for (int v = 0; v < q.vertex_count(); ++v) p[v] += mult[root] * root[v];
    for (int v : topo)
      if (p[v] != 0) {
        rp.vertex.push_back(v);
        rp.rank.push_back(p[v]);
      }
  }
  validate_resolution_pair(q, dimension_vector(q, m), rp);
  return rp;
}

ResolutionPair resolution_pair(const Quiver& q, const OrbitVector& m) {
  std::vector<DimVector> support;
  for (const auto& [root, mult] : m.entries) support.push_back(root);
  return resolution_pair(q, m, directed_partition(q, support));
}

ResolutionPair drop_zero_steps(const ResolutionPair& rp) {
  if (rp.vertex.size() != rp.rank.size())
    throw DomainError("resolution pair length mismatch");
  ResolutionPair out;
  for (std::size_t k = 0; k < rp.steps(); ++k) {
    if (rp.rank[k] < 0) throw DomainError("resolution step rank must be non-negative");
    if (rp.rank[k] == 0) continue;
    out.vertex.push_back(rp.vertex[k]);
    out.rank.push_back(rp.rank[k]);
  }
  return out;
}

void validate_resolution_pair(const Quiver& q, const DimVector& v, const ResolutionPair& rp) {
  if (rp.vertex.size() != rp.rank.size())
    throw DomainError("resolution pair length mismatch");
  if (static_cast<int>(v.size()) != q.vertex_count())
    throw DomainError("dimension vector length mismatch");
  DimVector used(q.vertex_count(), 0);
  for (std::size_t k = 0; k < rp.steps(); ++k) {
    int i = rp.vertex[k];
    if (i < 0 || i >= q.vertex_count())
      throw DomainError("resolution step vertex out of range");
    if (rp.rank[k] <= 0) throw DomainError("resolution step rank must be positive");
    used[i] += rp.rank[k];
  }
  for (int i = 0; i < q.vertex_count(); ++i)
    if (used[i] > v[i])
      throw DomainError("resolution ranks at vertex " + std::to_string(i + 1) +
                        " exceed the dimension vector");
}

}  // namespace quiverk
