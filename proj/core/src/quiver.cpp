#include "quiverk/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "quiverk/errors.hpp"

namespace quiverk {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ <= 0) throw DomainError("quiver needs at least one vertex");
  for (const auto& a : arrows_) {
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
      throw DomainError("arrow endpoint out of range");
  }
}

std::vector<int> Quiver::tails_of(int head) const {
  if (head < 0 || head >= n_) throw DomainError("vertex out of range");
  std::set<int> tails;
  for (const auto& a : arrows_)
    if (a.head == head) tails.insert(a.tail);
  return {tails.begin(), tails.end()};
}

long Quiver::euler_form(const DimVector& u, const DimVector& w) const {
  if (static_cast<int>(u.size()) != n_ || static_cast<int>(w.size()) != n_)
    throw DomainError("dimension vector length mismatch");
  long total = 0;
  for (int i = 0; i < n_; ++i) total += static_cast<long>(u[i]) * w[i];
  for (const auto& a : arrows_) total -= static_cast<long>(u[a.tail]) * w[a.head];
  return total;
}

Quiver::DynkinType Quiver::dynkin_type() const {
  // Underlying undirected graph must be a tree shaped like A/D/E.
  std::vector<std::set<int>> adj(n_);
  for (const auto& a : arrows_) {
    if (a.tail == a.head) throw DomainError("not Dynkin: self-loop at vertex " +
                                            std::to_string(a.tail + 1));
    if (adj[a.tail].count(a.head))
      throw DomainError("not Dynkin: repeated edge between vertices " +
                        std::to_string(a.tail + 1) + " and " + std::to_string(a.head + 1));
    adj[a.tail].insert(a.head);
    adj[a.head].insert(a.tail);
  }
  if (static_cast<int>(arrows_.size()) != n_ - 1)
    throw DomainError("not Dynkin: underlying graph is not a tree");
  // Connectivity (with n-1 edges this also rules out cycles).
  std::vector<bool> seen(n_, false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        bfs.push(w);
      }
  }
  if (reached != n_) throw DomainError("not Dynkin: underlying graph is disconnected");

  std::vector<int> branch;
  for (int v = 0; v < n_; ++v) {
    if (adj[v].size() > 3)
      throw DomainError("not Dynkin: vertex " + std::to_string(v + 1) + " has degree " +
                        std::to_string(adj[v].size()));
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.size() > 1) throw DomainError("not Dynkin: more than one branch vertex");
  if (branch.empty()) return DynkinType{'A', n_};

  // Arm lengths from the single branch vertex, descending.
  int center = branch[0];
  std::vector<int> arms;
  for (int start : adj[center]) {
    int length = 1;
    int prev = center, cur = start;
    while (adj[cur].size() == 2) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      prev = cur;
      cur = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.rbegin(), arms.rend());
  if (arms[1] == 1 && arms[2] == 1) return DynkinType{'D', arms[0] + 3};
  if (arms[1] == 2 && arms[2] == 1 && arms[0] >= 2 && arms[0] <= 4)
    return DynkinType{'E', arms[0] + 4};
  throw DomainError("not Dynkin: branch arms (" + std::to_string(arms[0]) + "," +
                    std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                    ") fit no A/D/E diagram");
}

bool root_order_less(const DimVector& a, const DimVector& b) {
  int ha = 0, hb = 0;
  for (int x : a) ha += x;
  for (int x : b) hb += x;
  if (ha != hb) return ha < hb;
  return a > b;  // lexicographically larger coefficient vector first
}

std::vector<DimVector> Quiver::positive_roots() const {
  dynkin_type();
  // Neighbor lists of the underlying graph drive the simple reflections
  // s_i(d)_i = -d_i + sum of d over neighbors of i.
  std::vector<std::vector<int>> nbr(n_);
  for (const auto& a : arrows_) {
    nbr[a.tail].push_back(a.head);
    nbr[a.head].push_back(a.tail);
  }
  std::set<DimVector> roots;
  std::queue<DimVector> work;
  for (int i = 0; i < n_; ++i) {
    DimVector simple(n_, 0);
    simple[i] = 1;
    roots.insert(simple);
    work.push(simple);
  }
  while (!work.empty()) {
    DimVector d = work.front();
    work.pop();
    for (int i = 0; i < n_; ++i) {
      DimVector r = d;
      r[i] = -d[i];
      for (int j : nbr[i]) r[i] += d[j];
      if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; }) &&
          roots.insert(r).second)
        work.push(r);
    }
  }
  std::vector<DimVector> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), root_order_less);
  return out;
}

std::vector<int> Quiver::topo_order() const {
  std::vector<int> indeg(n_, 0);
  for (const auto& a : arrows_) ++indeg[a.head];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n_; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n_);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto& a : arrows_)
      if (a.tail == v && --indeg[a.head] == 0) ready.push(a.head);
  }
  if (static_cast<int>(order.size()) != n_)
    throw DomainError("quiver has a directed cycle");
  return order;
}

OrbitVector OrbitVector::from_entries(std::vector<std::pair<DimVector, int>> entries) {
  std::erase_if(entries, [](const auto& e) { return e.second == 0; });
  for (const auto& [root, mult] : entries)
    if (mult < 0) throw DomainError("negative multiplicity for root " + dimvector_str(root));
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return root_order_less(a.first, b.first); });
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i].first == entries[i + 1].first)
      throw DomainError("repeated root " + dimvector_str(entries[i].first) +
                        " in orbit data");
  OrbitVector m;
  m.entries = std::move(entries);
  return m;
}

DimVector dimension_vector(const Quiver& q, const OrbitVector& m) {
  auto roots = q.positive_roots();
  DimVector v(q.vertex_count(), 0);
  for (const auto& [root, mult] : m.entries) {
    if (!std::binary_search(roots.begin(), roots.end(), root, root_order_less))
      throw DomainError(dimvector_str(root) + " is not a positive root of this quiver");
    for (int i = 0; i < q.vertex_count(); ++i) v[i] += mult * root[i];
  }
  return v;
}

std::string dimvector_str(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

}  // namespace quiverk
