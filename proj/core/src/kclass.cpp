#include "quiverk/kclass.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "quiverk/errors.hpp"
#include "quiverk/residues.hpp"

namespace quiverk {

namespace {

Monomial mono(Variable v, int e = 1) { return Monomial::variable(v, e); }

LaurentPoly finish(FactoredRational f, const DimVector& v) {
  LaurentPoly out = f.reduced().to_laurent();
  require_alphabet_symmetry(out, v);
  return out;
}

}  // namespace

std::vector<Variable> bundle_roots(int vertex, int size) {
  std::vector<Variable> out;
  out.reserve(static_cast<std::size_t>(size));
  for (int j = 1; j <= size; ++j) out.push_back(Variable::groth_root(vertex + 1, j));
  return out;
}

std::vector<Variable> incoming_roots(const Quiver& q, const DimVector& v, int i) {
  std::vector<Variable> out;
  for (int j : q.tails_of(i)) {
    auto e = bundle_roots(j, v[static_cast<std::size_t>(j)]);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

void require_alphabet_symmetry(const LaurentPoly& p, const DimVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!p.is_symmetric_in(bundle_roots(static_cast<int>(i), v[i])))
      throw DomainError("class is not symmetric in the roots of vertex " + std::to_string(i + 1));
  }
}

FactorSet build_factors(const Quiver& q, const DimVector& v, const ResolutionPair& rp) {
  validate_resolution_pair(q, v, rp);
  FactorSet fs;
  fs.rp = rp;
  const int p = static_cast<int>(rp.steps());
  for (int k = 0; k < p; ++k) {
    std::vector<Variable> zk;
    for (int s = 1; s <= rp.rank[static_cast<std::size_t>(k)]; ++s)
      zk.push_back(Variable::residue(k + 1, s));
    fs.alphabets.push_back(std::move(zk));
  }

  FactorProduct& f = fs.integrand;
  for (int k = 0; k < p; ++k) {
    const int i = rp.vertex[static_cast<std::size_t>(k)];
    const auto& zk = fs.alphabets[static_cast<std::size_t>(k)];

    for (Variable y : zk) {
      for (Variable x : incoming_roots(q, v, i)) f.mul_one_minus(1, mono(x) * mono(y));
      for (Variable x : bundle_roots(i, v[static_cast<std::size_t>(i)]))
        f.div_one_minus(1, mono(x) * mono(y));
    }

    const auto tails = q.tails_of(i);
    for (int l = 0; l < k; ++l) {
      const int il = rp.vertex[static_cast<std::size_t>(l)];
      const bool same = il == i;
      const bool tail = std::find(tails.begin(), tails.end(), il) != tails.end();
      if (!same && !tail) continue;
      for (Variable y : zk)
        for (Variable x : fs.alphabets[static_cast<std::size_t>(l)]) {
          if (same) f.mul_one_minus(1, mono(y) * mono(x, -1));
          if (tail) f.div_one_minus(1, mono(y) * mono(x, -1));
        }
    }

    for (std::size_t a = 0; a < zk.size(); ++a) {
      for (std::size_t b = a + 1; b < zk.size(); ++b)
        f.mul_one_minus(1, mono(zk[b]) * mono(zk[a], -1));
      f.mono = f.mono * mono(zk[a], -1);
    }
  }

  for (int k = p - 1; k >= 0; --k)
    for (Variable z : fs.alphabets[static_cast<std::size_t>(k)])
      fs.elimination_order.push_back(z);
  return fs;
}

KClass kclass(const Quiver& q, const DimVector& v, const ResolutionPair& rp) {
  FactorSet fs = build_factors(q, v, rp);
  ProductSum ps{fs.integrand};
  ps = ir_alphabet_products(std::move(ps), fs.elimination_order);
  return finish(combine(ps), v);
}

KClass kclass(const Quiver& q, const OrbitVector& m, const DimVector& v) {
  return kclass(q, v, resolution_pair(q, m));
}

KClass kclass(const Quiver& q, const OrbitVector& m) {
  return kclass(q, m, dimension_vector(q, m));
}

KClass stepwise_pushforward(const Quiver& q, const DimVector& v, const ResolutionPair& rp) {
  validate_resolution_pair(q, v, rp);
  const int p = static_cast<int>(rp.steps());

  auto quot_alphabet = [&](int k) {
    std::vector<Variable> out;
    for (int s = 1; s <= rp.rank[static_cast<std::size_t>(k)]; ++s)
      out.push_back(Variable::quot_root(k + 1, s));
    return out;
  };

  ProductSum f{FactorProduct{}};
  for (int k = p - 1; k >= 0; --k) {
    const int i = rp.vertex[static_cast<std::size_t>(k)];
    const auto qk = quot_alphabet(k);
    std::vector<Variable> zk;
    for (int s = 1; s <= rp.rank[static_cast<std::size_t>(k)]; ++s)
      zk.push_back(Variable::residue(k + 1, s));

    // Zero-scheme inclusion: for every tail j, the factor
    // (1 - S_j_bullet / Q_bullet) with the remaining sub-bundle at j written
    // as the full bundle over the quotients already taken there.
    for (auto& term : f) {
      for (int j : q.tails_of(i)) {
        for (Variable x : bundle_roots(j, v[static_cast<std::size_t>(j)]))
          for (Variable y : qk) term.mul_one_minus(1, mono(x) * mono(y, -1));
        for (int l = 0; l < k; ++l) {
          if (rp.vertex[static_cast<std::size_t>(l)] != j) continue;
          for (Variable x : quot_alphabet(l))
            for (Variable y : qk) term.div_one_minus(1, mono(x) * mono(y, -1));
        }
      }
    }

    // Grassmannian push-forward: quotient roots become reciprocal residue
    // variables, and the kernel denominator (1 - C_bullet z) is expanded as
    // (1 - E_i_bullet z) over the factors of the earlier quotients at i.
    std::map<Variable, std::pair<Rat, Monomial>> sub;
    for (std::size_t s = 0; s < qk.size(); ++s) sub[qk[s]] = {Rat(1), mono(zk[s], -1)};

    ProductSum g;
    g.reserve(f.size());
    for (const auto& term : f) {
      FactorProduct t = term.substitute_monomials(sub);
      if (t.is_zero()) continue;
      for (std::size_t a = 0; a < zk.size(); ++a)
        for (std::size_t b = a + 1; b < zk.size(); ++b)
          t.mul_one_minus(1, mono(zk[b]) * mono(zk[a], -1));
      for (Variable z : zk) {
        for (int l = 0; l < k; ++l) {
          if (rp.vertex[static_cast<std::size_t>(l)] != i) continue;
          for (Variable x : quot_alphabet(l)) t.mul_one_minus(1, mono(x) * mono(z));
        }
        for (Variable x : bundle_roots(i, v[static_cast<std::size_t>(i)]))
          t.div_one_minus(1, mono(x) * mono(z));
        t.mono = t.mono * mono(z, -1);
      }
      g.push_back(std::move(t));
    }
    f = ir_alphabet_products(std::move(g), zk);
  }

  FactoredRational out = combine(f);
  for (int k = 0; k < p; ++k)
    for (Variable x : quot_alphabet(k))
      if (out.contains(x))
        throw DomainError("push-forward did not consume quotient root " + x.str());
  return finish(std::move(out), v);
}

KClass stepwise_pushforward(const Quiver& q, const OrbitVector& m) {
  const DimVector v = dimension_vector(q, m);
  return stepwise_pushforward(q, v, resolution_pair(q, m));
}

}  // namespace quiverk
