#include "quiverk/groth.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>
#include <vector>

#include "quiverk/errors.hpp"
#include "quiverk/residues.hpp"
#include "quiverk/series.hpp"

namespace quiverk {

bool is_partition(const IntegerSequence& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0) return false;
    if (i + 1 < s.size() && s[i] < s[i + 1]) return false;
  }
  return true;
}

int sequence_weight(const IntegerSequence& s) {
  int w = 0;
  for (int x : s) w += x;
  return w;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

std::string table_str(const QuiverCoefficientTable& t) {
  std::ostringstream os;
  os << "codimension " << t.codimension << '\n';
  for (const auto& [mu, c] : t.entries) {
    os << '[';
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (i) os << ',';
      os << partition_str(mu[i]);
    }
    os << "] " << c << '\n';
  }
  return os.str();
}

namespace {

Monomial mono(Variable v, int e = 1) { return Monomial::variable(v, e); }

std::vector<Variable> letter_alphabet(char c, int count) {
  std::vector<Variable> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 1; i <= count; ++i) out.push_back(Variable::letter(c, i));
  return out;
}

void gen_partitions_rec(int maxlen, int budget, int maxpart, Partition& cur,
                        std::vector<Partition>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == maxlen) return;
  for (int part = std::min(budget, maxpart); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions_rec(maxlen, budget - part, part, cur, out);
    cur.pop_back();
  }
}

// All partitions with at most maxlen rows and weight at most maxsize, sorted
// by (weight, lex) so solver column order is deterministic.
std::vector<Partition> partitions_up_to(int maxlen, int maxsize) {
  Partition cur;
  std::vector<Partition> out;
  gen_partitions_rec(std::max(maxlen, 0), std::max(maxsize, 0), maxsize, cur, out);
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    const int wx = sequence_weight(x), wy = sequence_weight(y);
    if (wx != wy) return wx < wy;
    return x < y;
  });
  return out;
}

// Exact solve of sum_c x_c * cols[c] == target by Gauss-Jordan elimination
// over the monomial-indexed coefficient matrix. Free variables get zero.
// Returns nullopt when the system is inconsistent.
std::optional<std::vector<Rat>> solve_linear(const std::vector<LaurentPoly>& cols,
                                             const LaurentPoly& target) {
  std::map<Monomial, int> rows;
  for (const auto& c : cols)
    for (const auto& t : c.terms()) rows.emplace(t.mono, 0);
  for (const auto& t : target.terms()) rows.emplace(t.mono, 0);
  int nr = 0;
  for (auto& [m, idx] : rows) idx = nr++;
  const int nc = static_cast<int>(cols.size());

  std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc + 1, Rat(0)));
  for (int c = 0; c < nc; ++c)
    for (const auto& t : cols[c].terms()) a[rows[t.mono]][c] = t.coef;
  for (const auto& t : target.terms()) a[rows[t.mono]][nc] = t.coef;

  std::vector<std::pair<int, int>> pivots;
  int prow = 0;
  for (int c = 0; c < nc && prow < nr; ++c) {
    int pr = -1;
    for (int r = prow; r < nr; ++r)
      if (a[r][c] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[prow], a[pr]);
    const Rat piv = a[prow][c];
    for (int j = c; j <= nc; ++j) a[prow][j] /= piv;
    for (int r = 0; r < nr; ++r) {
      if (r == prow || a[r][c] == 0) continue;
      const Rat f = a[r][c];
      for (int j = c; j <= nc; ++j) a[r][j] -= f * a[prow][j];
    }
    pivots.emplace_back(prow, c);
    ++prow;
  }
  for (int r = prow; r < nr; ++r)
    if (a[r][nc] != 0) return std::nullopt;

  std::vector<Rat> x(nc, Rat(0));
  for (auto [r, c] : pivots) x[c] = a[r][nc];
  return x;
}

LaurentPoly g_poly_uncached(const IntegerSequence& lam, const std::vector<Variable>& a,
                            const std::vector<Variable>& b) {
  const int r = static_cast<int>(lam.size());
  if (r == 0) return LaurentPoly(1);
  const int n = static_cast<int>(a.size());
  const int p = static_cast<int>(b.size());
  const int l = p - n;

  std::vector<Variable> z;
  z.reserve(r);
  for (int i = 1; i <= r; ++i) z.push_back(Variable::residue(0, i));
  for (Variable zi : z)
    if (std::find(a.begin(), a.end(), zi) != a.end() ||
        std::find(b.begin(), b.end(), zi) != b.end())
      throw DomainError("g_poly: alphabets collide with the integration variables");

  FactorProduct f;
  for (int i = 0; i < r; ++i) {
    f.mul_one_minus(1, mono(z[i]), lam[i] - (i + 1));
    for (Variable bv : b) f.mul_one_minus(1, mono(bv) * mono(z[i]));
    f.mul_one_minus(1, mono(z[i]), -l);
    for (Variable av : a) f.div_one_minus(1, mono(av) * mono(z[i]));
    f.mul_monomial(1, mono(z[i], -1));
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) f.mul_one_minus(1, mono(z[j]) * mono(z[i], -1));

  const ProductSum reduced = ir_alphabet_products({f}, z);
  LaurentPoly out = combine(reduced).reduced().to_laurent();
  if (!out.is_symmetric_in(a) || !out.is_symmetric_in(b))
    throw DomainError("g_poly: result is not symmetric in its alphabets");
  return out;
}

}  // namespace

LaurentPoly g_poly_in(const IntegerSequence& lambda, const std::vector<Variable>& a,
                      const std::vector<Variable>& b) {
  using Key = std::tuple<IntegerSequence, std::vector<Variable>, std::vector<Variable>>;
  static std::mutex lock;
  static std::map<Key, LaurentPoly> cache;
  Key key{lambda, a, b};
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LaurentPoly out = g_poly_uncached(lambda, a, b);
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

LaurentPoly g_poly(const IntegerSequence& lambda, int rank_n, int rank_p) {
  return g_poly_in(lambda, letter_alphabet('a', rank_n), letter_alphabet('b', rank_p));
}

namespace {

std::map<Partition, long> straighten_uncached(const IntegerSequence& lambda) {
  IntegerSequence s = lambda;
  while (!s.empty() && s.back() <= 0) s.pop_back();
  if (is_partition(s)) return {{s, 1L}};

  // A non-partition with a positive tail has a strict ascent; resolve the
  // leftmost one through the transposition identity
  //   g_(..,a,b,..) = sum_{j=a+1..b} g_(..,b,j,..) - sum_{j=a+1..b-1} g_(..,b-1,j,..)
  // (the adjacent case b = a+1 degenerates to g_(..,a,a+1,..) = g_(..,a+1,a+1,..)).
  // Every replacement keeps entries within [min s, max s] and either raises
  // the weight or sorts the shifted entries s_i - i one swap further, so the
  // recursion bottoms out; intermediate sequences memoize via straighten().
  std::size_t asc = 0;
  while (s[asc] >= s[asc + 1]) ++asc;
  const int a = s[asc];
  const int b = s[asc + 1];

  std::map<Partition, long> out;
  const auto add = [&out](const std::map<Partition, long>& table, long c) {
    for (const auto& [nu, k] : table) {
      const auto it = out.emplace(nu, 0L).first;
      it->second += c * k;
      if (it->second == 0) out.erase(it);
    }
  };
  for (int j = a + 1; j <= b; ++j) {
    s[asc] = b;
    s[asc + 1] = j;
    add(straighten(s), 1);
  }
  for (int j = a + 1; j <= b - 1; ++j) {
    s[asc] = b - 1;
    s[asc + 1] = j;
    add(straighten(s), -1);
  }
  return out;
}

}  // namespace

std::map<Partition, long> straighten(const IntegerSequence& lambda) {
  static std::mutex lock;
  static std::map<IntegerSequence, std::map<Partition, long>> cache;
  {
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  auto out = straighten_uncached(lambda);
  std::lock_guard<std::mutex> guard(lock);
  return cache.emplace(lambda, std::move(out)).first->second;
}

long resolution_codimension(const Quiver& q, const DimVector& v, const ResolutionPair& rp) {
  validate_resolution_pair(q, v, rp);
  std::vector<long> taken(q.vertex_count(), 0);
  long codim = 0;
  for (std::size_t k = 0; k < rp.steps(); ++k) {
    const int i = rp.vertex[k];
    const long r = rp.rank[k];
    long incoming = 0;
    for (int j : q.tails_of(i)) incoming += v[j] - taken[j];
    const long remaining = v[i] - taken[i];
    codim += r * (incoming - (remaining - r));
    taken[i] += r;
  }
  return codim;
}

namespace {

// One table evaluation at a fixed series degree bound.
std::map<PartitionTuple, Rat> coefficients_at_bound(const ProductSum& kernel,
                                                    const ExpansionDomain& dom, int bound,
                                                    const std::vector<std::vector<Variable>>& uvars) {
  const int n = static_cast<int>(uvars.size());
  const LaurentPoly series = series_expand(kernel, dom, bound);

  std::map<PartitionTuple, Rat> acc;
  for (const auto& term : series.terms()) {
    std::vector<std::map<Partition, long>> parts(n);
    bool vanished = false;
    for (int i = 0; i < n && !vanished; ++i) {
      IntegerSequence lam;
      lam.reserve(uvars[i].size());
      for (Variable w : uvars[i]) lam.push_back(term.mono.exponent_of(w));
      parts[i] = straighten(lam);
      vanished = parts[i].empty();
    }
    if (vanished) continue;

    std::vector<std::map<Partition, long>::const_iterator> its(n);
    for (int i = 0; i < n; ++i) its[i] = parts[i].begin();
    while (true) {
      PartitionTuple tup(n);
      long cprod = 1;
      for (int i = 0; i < n; ++i) {
        tup[i] = its[i]->first;
        cprod *= its[i]->second;
      }
      acc[std::move(tup)] += term.coef * Rat(cprod);
      int i = n - 1;
      while (i >= 0) {
        ++its[i];
        if (its[i] != parts[i].end()) break;
        its[i] = parts[i].begin();
        --i;
      }
      if (i < 0) break;
    }
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = (it->second == 0) ? acc.erase(it) : std::next(it);
  return acc;
}

QuiverCoefficientTable finish_table(const std::map<PartitionTuple, Rat>& acc,
                                    const DimVector& v) {
  QuiverCoefficientTable out;
  int mincd = INT_MAX;
  for (const auto& [mu, c] : acc) {
    int w = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (static_cast<int>(mu[i].size()) > v[i])
        throw DomainError("quiver coefficient partition is longer than its vertex rank");
      w += sequence_weight(mu[i]);
    }
    out.entries.emplace(mu, rat_to_long(c));
    mincd = std::min(mincd, w);
  }
  out.codimension = out.entries.empty() ? 0 : mincd;
  return out;
}

}  // namespace

QuiverCoefficientTable quiver_coefficients(const Quiver& q, const OrbitVector& m,
                                           const DimVector& v, int degree_bound) {
  if (dimension_vector(q, m) != v)
    throw DomainError("quiver_coefficients: m does not have dimension vector v");
  const ResolutionPair rp = resolution_pair(q, m);
  validate_resolution_pair(q, v, rp);
  const int n = q.vertex_count();

  std::vector<std::vector<Variable>> uvars(n);
  std::vector<int> start(rp.steps(), 0);
  for (std::size_t k = 0; k < rp.steps(); ++k) {
    const int i = rp.vertex[k];
    start[k] = static_cast<int>(uvars[i].size());
    for (int t = 0; t < rp.rank[k]; ++t)
      uvars[i].push_back(Variable::shifted_weight(i + 1, static_cast<int>(uvars[i].size()) + 1));
  }

  // The expansion kernel in shifted weights: the per-vertex monomial
  // v_{i1}^{1-l_i} ... v_{i n_i}^{n_i-l_i} and one transformed factor
  // (1-v_x) / (v_y (1-v_x/v_y)) per (tail step, head step) variable pair.
  FactorProduct kernel;
  for (int i = 0; i < n; ++i) {
    long li = v[i];
    for (int j : q.tails_of(i)) li -= v[j];
    for (std::size_t j = 0; j < uvars[i].size(); ++j)
      kernel.mul_monomial(1, mono(uvars[i][j], static_cast<int>(j) + 1 - static_cast<int>(li)));
  }
  for (std::size_t k = 0; k < rp.steps(); ++k) {
    const int i = rp.vertex[k];
    const auto& tails = q.tails_of(i);
    for (std::size_t e = 0; e < k; ++e) {
      const int jv = rp.vertex[e];
      if (!std::binary_search(tails.begin(), tails.end(), jv)) continue;
      for (int b = 0; b < rp.rank[k]; ++b) {
        const Variable y = uvars[i][start[k] + b];
        for (int a = 0; a < rp.rank[e]; ++a) {
          const Variable x = uvars[jv][start[e] + a];
          kernel.mul_one_minus(1, mono(x));
          kernel.mul_monomial(1, mono(y, -1));
          kernel.div_one_minus(1, mono(x) * mono(y, -1));
        }
      }
    }
  }

  std::vector<Variable> order;
  for (int i : q.topo_order())
    for (Variable w : uvars[i]) order.push_back(w);
  const ExpansionDomain dom(order);
  const ProductSum ps{kernel};

  long sumv = 0;
  for (int vi : v) sumv += vi;
  int b0 = degree_bound > 0
               ? degree_bound
               : static_cast<int>(resolution_codimension(q, v, rp) + sumv);
  b0 = std::max(b0, 1);
  const int cap = 16 * b0;

  auto prev = coefficients_at_bound(ps, dom, b0, uvars);
  for (int b = 2 * b0; b <= cap; b *= 2) {
    auto cur = coefficients_at_bound(ps, dom, b, uvars);
    if (cur == prev) return finish_table(cur, v);
    prev = std::move(cur);
  }
  throw DomainError("quiver_coefficients: series did not stabilize below degree bound " +
                    std::to_string(cap));
}

namespace {

void gen_tuples_rec(const std::vector<std::vector<Partition>>& pcand, int pos, int budget,
                    PartitionTuple& cur, std::vector<PartitionTuple>& out) {
  if (pos == static_cast<int>(pcand.size())) {
    out.push_back(cur);
    return;
  }
  for (const auto& p : pcand[pos]) {
    const int w = sequence_weight(p);
    if (w > budget) continue;
    cur[pos] = p;
    gen_tuples_rec(pcand, pos + 1, budget - w, cur, out);
  }
  cur[pos].clear();
}

}  // namespace

QuiverCoefficientTable expansion_oracle(const KClass& kc, const Quiver& q, const DimVector& v,
                                        int degree_bound) {
  const int n = q.vertex_count();
  require_alphabet_symmetry(kc, v);
  std::vector<std::vector<Variable>> eroots(n), mroots(n);
  for (int i = 0; i < n; ++i) {
    eroots[i] = bundle_roots(i, v[i]);
    mroots[i] = incoming_roots(q, v, i);
  }
  long sumv = 0;
  for (int vi : v) sumv += vi;
  const int cap = degree_bound > 0 ? degree_bound : static_cast<int>(2 * sumv + 8);

  std::vector<std::vector<Partition>> pcand(n);
  for (int i = 0; i < n; ++i) pcand[i] = partitions_up_to(v[i], cap);

  std::map<PartitionTuple, LaurentPoly> products;
  for (int bound = 0; bound <= cap; ++bound) {
    std::vector<PartitionTuple> tuples;
    PartitionTuple cur(n);
    gen_tuples_rec(pcand, 0, bound, cur, tuples);

    std::vector<LaurentPoly> cols;
    cols.reserve(tuples.size());
    for (const auto& tup : tuples) {
      auto it = products.find(tup);
      if (it == products.end()) {
        LaurentPoly prod(1);
        for (int i = 0; i < n; ++i) prod *= g_poly_in(tup[i], eroots[i], mroots[i]);
        it = products.emplace(tup, std::move(prod)).first;
      }
      cols.push_back(it->second);
    }

    const auto sol = solve_linear(cols, kc);
    if (!sol) continue;

    std::map<PartitionTuple, Rat> acc;
    for (std::size_t i = 0; i < tuples.size(); ++i)
      if ((*sol)[i] != 0) acc.emplace(tuples[i], (*sol)[i]);
    return finish_table(acc, v);
  }
  throw DomainError("expansion_oracle: no expansion within degree bound " + std::to_string(cap));
}

bool sign_check(const QuiverCoefficientTable& t, int codim) {
  for (const auto& [mu, c] : t.entries) {
    int w = 0;
    for (const auto& p : mu) w += sequence_weight(p);
    const bool even = (w - codim) % 2 == 0;
    if (even ? c < 0 : c > 0) return false;
  }
  return true;
}

}  // namespace quiverk
