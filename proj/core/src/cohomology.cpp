#include "quiverk/cohomology.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "quiverk/errors.hpp"

namespace quiverk {

std::vector<LaurentPoly> elementary_symmetric(const std::vector<Variable>& roots) {
  std::vector<LaurentPoly> e;
  e.reserve(roots.size() + 1);
  e.emplace_back(1);
  for (Variable r : roots) {
    // Multiply the generating product (1 + r t) in: e_k += r * e_{k-1}.
    e.emplace_back(0);
    const LaurentPoly rv = LaurentPoly::variable(r);
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += rv * e[k - 1];
  }
  return e;
}

std::pair<ChernPoly, int> chern_character_leading(const KClass& kc, int cap) {
  if (kc.is_zero()) throw DomainError("chern_character_leading: the zero class has no degree");
  for (Variable v : kc.variables())
    if (v.kind() != VarKind::GrothRoot)
      throw DomainError("chern_character_leading: class must be in Grothendieck roots only");
  if (cap < 0) {
    const int nv = static_cast<int>(kc.variables().size());
    cap = std::max(2 * nv * nv, 8);
  }

  // Per term, the linear form sum_j a_j e_j; its powers are accumulated
  // order by order so each xi-degree is expanded exactly once.
  struct TermState {
    Rat c;
    LaurentPoly lin;
    LaurentPoly pow;
  };
  std::vector<TermState> terms;
  terms.reserve(kc.term_count());
  for (const auto& t : kc.terms()) {
    LaurentPoly lin;
    for (const auto& [v, e] : t.mono.factors()) lin += LaurentPoly::variable(v) * Rat(e);
    terms.push_back({t.coef, std::move(lin), LaurentPoly(1)});
  }

  Rat factorial(1);
  for (int d = 0; d <= cap; ++d) {
    if (d > 0) {
      factorial *= d;
      for (auto& t : terms) t.pow *= t.lin;
    }
    LaurentPoly bucket;
    for (const auto& t : terms) bucket += t.pow * t.c;
    if (!bucket.is_zero()) {
      Rat inv = 1 / factorial;
      return {bucket * inv, d};
    }
  }
  throw DomainError("chern_character_leading: no nonzero term up to xi-order " +
                    std::to_string(cap));
}

namespace {

// Rewrites p, symmetric in `roots`, as a polynomial in the elementary
// symmetric classes c{bundle}_{1..k} of that alphabet, leaving every other
// variable untouched. Classic leading-term reduction: the lexicographically
// largest exponent vector on the alphabet must be weakly decreasing, is
// matched by a product of class symbols, and strictly drops after removal.
LaurentPoly rewrite_alphabet(LaurentPoly p, const std::vector<Variable>& roots, int bundle) {
  const int k = static_cast<int>(roots.size());
  const auto esym = elementary_symmetric(roots);
  LaurentPoly out;
  while (!p.is_zero()) {
    std::vector<int> best;
    for (const auto& t : p.terms()) {
      std::vector<int> a(k);
      for (int j = 0; j < k; ++j) {
        a[j] = t.mono.exponent_of(roots[j]);
        if (a[j] < 0)
          throw DomainError("to_chern_classes: negative exponent on a Chern root");
      }
      if (best.empty() || a > best) best = std::move(a);
    }
    if (std::all_of(best.begin(), best.end(), [](int x) { return x == 0; })) {
      out += p;
      break;
    }
    for (int j = 0; j + 1 < k; ++j)
      if (best[j] < best[j + 1])
        throw DomainError("to_chern_classes: input is not symmetric in alphabet of bundle " +
                          std::to_string(bundle));

    LaurentPoly cpoly;
    for (const auto& t : p.terms()) {
      bool match = true;
      for (int j = 0; j < k && match; ++j) match = t.mono.exponent_of(roots[j]) == best[j];
      if (!match) continue;
      Monomial rest = t.mono;
      for (Variable r : roots) rest = rest.without(r);
      cpoly += LaurentPoly::monomial(t.coef, rest);
    }

    LaurentPoly class_part(1), expansion(1);
    for (int j = 0; j < k; ++j) {
      const int e = best[j] - (j + 1 < k ? best[j + 1] : 0);
      if (e == 0) continue;
      class_part *= LaurentPoly::variable(Variable::chern(bundle, j + 1), e);
      expansion *= esym[j + 1].pow(static_cast<unsigned>(e));
    }
    out += cpoly * class_part;
    p -= cpoly * expansion;
  }
  return out;
}

}  // namespace

LaurentPoly to_chern_classes(const ChernPoly& p) {
  // Infer the alphabets: vertex -> largest root index present. A symmetric
  // polynomial mentions every variable of its alphabet, so the largest index
  // is the rank.
  std::map<int, int> rank;
  for (Variable v : p.variables()) {
    if (v.kind() != VarKind::GrothRoot)
      throw DomainError("to_chern_classes: input must be a polynomial in Chern roots");
    int& r = rank[v.first()];
    r = std::max(r, v.second());
  }
  LaurentPoly out = p;
  for (const auto& [vertex, k] : rank) {
    std::vector<Variable> roots;
    roots.reserve(k);
    for (int j = 1; j <= k; ++j) roots.push_back(Variable::groth_root(vertex, j));
    out = rewrite_alphabet(std::move(out), roots, vertex);
  }
  return out;
}

RelativeChernSeries relative_chern(const std::vector<LaurentPoly>& cV,
                                   const std::vector<LaurentPoly>& cW, int order) {
  if (order < 0) throw DomainError("relative_chern: order must be nonnegative");
  auto at = [](const std::vector<LaurentPoly>& c, int k) {
    return k < static_cast<int>(c.size()) ? c[k] : LaurentPoly(0);
  };
  if (!at(cV, 0).is_one() || !at(cW, 0).is_one())
    throw DomainError("relative_chern: class lists must start with c_0 = 1");

  // num(xi) = sum cV[k] (-xi)^k, den likewise; quotient by the recurrence
  // q[n] = num[n] - sum_{k>=1} den[k] q[n-k].
  auto signed_at = [&](const std::vector<LaurentPoly>& c, int k) {
    LaurentPoly x = at(c, k);
    return (k % 2 != 0) ? -x : x;
  };
  RelativeChernSeries out;
  out.c.resize(order + 1);
  for (int n = 0; n <= order; ++n) {
    LaurentPoly q = signed_at(cV, n);
    for (int k = 1; k <= n; ++k) q -= signed_at(cW, k) * out.c[n - k];
    out.c[n] = std::move(q);
  }
  return out;
}

std::vector<LaurentPoly> h_classes(const std::vector<Variable>& v_roots,
                                   const std::vector<Variable>& w_roots, int order) {
  if (order < 0) throw DomainError("h_classes: order must be nonnegative");
  // prod_w (1 - w xi) expanded: elementary symmetric with alternating signs.
  const auto ew = elementary_symmetric(w_roots);
  const auto ev = elementary_symmetric(v_roots);
  auto signed_at = [](const std::vector<LaurentPoly>& e, int k) {
    if (k >= static_cast<int>(e.size())) return LaurentPoly(0);
    return (k % 2 != 0) ? -e[k] : e[k];
  };
  std::vector<LaurentPoly> h(order + 1);
  for (int n = 0; n <= order; ++n) {
    LaurentPoly q = signed_at(ew, n);
    for (int k = 1; k <= n; ++k) q -= signed_at(ev, k) * h[n - k];
    h[n] = std::move(q);
  }
  return h;
}

namespace {

LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  if (n == 1) return m[0][0];
  LaurentPoly det;
  std::vector<std::vector<LaurentPoly>> minor(n - 1, std::vector<LaurentPoly>(n - 1));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        if (c2 == c) continue;
        minor[r - 1][cc++] = m[r][c2];
      }
    }
    const LaurentPoly cofactor = m[0][c] * determinant(minor);
    det = (c % 2 == 0) ? det + cofactor : det - cofactor;
  }
  return det;
}

}  // namespace

LaurentPoly schur_det(const Partition& lambda, const std::vector<LaurentPoly>& h) {
  if (!is_partition(lambda)) throw DomainError("schur_det: index must be a partition");
  const int n = static_cast<int>(lambda.size());
  auto h_at = [&](int k) {
    if (k < 0) return LaurentPoly(0);
    if (k >= static_cast<int>(h.size()))
      throw DomainError("schur_det: h-classes supplied only up to order " +
                        std::to_string(static_cast<int>(h.size()) - 1));
    return h[k];
  };
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m[i - 1][j - 1] = h_at(lambda[i - 1] + j - i);
  return determinant(m);
}

int codimension(const Quiver& q, const OrbitVector& m, const DimVector& v) {
  return chern_character_leading(kclass(q, m, v)).second;
}

}  // namespace quiverk
