#include "quiverk/residues.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "quiverk/errors.hpp"

namespace quiverk {

namespace {

int cmp_factor_lists(const std::vector<DenomFactor>& a, const std::vector<DenomFactor>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i].m <=> b[i].m; c != 0) return c < 0 ? -1 : 1;
    if (int c = cmp(a[i].c, b[i].c); c != 0) return c;
    if (a[i].mult != b[i].mult) return a[i].mult < b[i].mult ? -1 : 1;
  }
  return 0;
}

// Merges terms with identical monomial and factor lists; keeps the sum small
// across iterated residue stages.
void coalesce(ProductSum& terms) {
  std::sort(terms.begin(), terms.end(), [](const FactorProduct& x, const FactorProduct& y) {
    if (auto c = x.mono <=> y.mono; c != 0) return c < 0;
    if (int c = cmp_factor_lists(x.den, y.den); c != 0) return c < 0;
    return cmp_factor_lists(x.numf, y.numf) < 0;
  });
  ProductSum merged;
  for (auto& t : terms) {
    if (t.is_zero()) continue;
    if (!merged.empty() && merged.back().mono == t.mono && merged.back().den == t.den &&
        merged.back().numf == t.numf) {
      merged.back().coef += t.coef;
      if (merged.back().coef == 0) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms = std::move(merged);
}

// A denominator or numerator factor (1 - c*m)^mult rewritten at the point
// var = p.c * p.m via var -> (p.c * p.m)(1 + t): the factor becomes
// (1 - cstar * mstar * (1+t)^e)^mult with e the exponent of var in m.
struct TransformedFactor {
  Rat cstar;
  Monomial mstar;
  int e = 0;
  int mult = 1;
  bool vanishing = false;
};

TransformedFactor transform_at(const DenomFactor& d, const PoleLocation& p) {
  TransformedFactor out;
  out.e = d.m.exponent_of(p.var);
  out.mult = d.mult;
  if (out.e == 0) {
    out.cstar = d.c;
    out.mstar = d.m;
    return out;
  }
  if (out.e != 1 && out.e != -1)
    throw DomainError("factor " + d.str() + " is not linear in " + p.var.str());
  out.cstar = d.c * rat_pow(p.c, out.e);
  out.mstar = d.m.without(p.var) * p.m.pow(out.e);
  out.vanishing = out.cstar == 1 && out.mstar.is_one();
  return out;
}

using FRSeries = std::vector<FactoredRational>;

FRSeries mul_trunc(const FRSeries& a, const FRSeries& b) {
  const int size = static_cast<int>(a.size());
  FRSeries out(size);
  for (int i = 0; i < size; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < size; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Multiplies the truncated series by (1+t)^n, n of either sign.
void mul_binomial_power(FRSeries& s, int n) {
  if (n == 0) return;
  FRSeries g(s.size());
  for (std::size_t j = 0; j < g.size(); ++j)
    g[j] = FactoredRational(LaurentPoly(rat_binomial(n, static_cast<unsigned long>(j))));
  s = mul_trunc(s, g);
}

// Truncated series of a nonvanishing transformed factor raised to `sign*mult`
// (sign +1 for numerator placement, -1 for denominator placement), without
// the (1+t)^{:pm mult} part that e == -1 factors carry (applied separately).
FRSeries core_series(const TransformedFactor& tf, bool in_numerator, int size) {
  FRSeries g(size);
  const int k = tf.mult;
  const LaurentPoly at_zero = LaurentPoly::one_minus(tf.cstar, tf.mstar);
  if (in_numerator) {
    // ((1 - c*m) - c*m*t)^k  when e == +1, ((1 - c*m) + t)^k when e == -1.
    for (int j = 0; j <= k && j < size; ++j) {
      Rat cj = rat_binomial(k, static_cast<unsigned long>(j));
      LaurentPoly body = at_zero.pow(static_cast<unsigned>(k - j));
      if (tf.e == 1)
        body = body.mul_monomial(cj * rat_pow(-tf.cstar, j), tf.mstar.pow(j));
      else
        body = body * cj;
      g[static_cast<std::size_t>(j)] += FactoredRational(body);
    }
    return g;
  }
  // Reciprocal forms, coefficients 1/(1 - c*m)^{k+j} shaped.
  for (int j = 0; j < size; ++j) {
    LaurentPoly num;
    if (tf.e == 1) {
      num = LaurentPoly::monomial(
          rat_binomial(k - 1 + j, static_cast<unsigned long>(j)) * rat_pow(tf.cstar, j),
          tf.mstar.pow(j));
    } else {
      num = LaurentPoly(rat_binomial(-k, static_cast<unsigned long>(j)));
    }
    g[static_cast<std::size_t>(j)] +=
        FactoredRational::fraction(num, {DenomFactor{tf.cstar, tf.mstar, k + j}});
  }
  return g;
}

std::vector<Variable> concat(const std::vector<Variable>& a, const std::vector<Variable>& b) {
  std::vector<Variable> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Monomial mono(Variable v, int e = 1) { return Monomial::variable(v, e); }

}  // namespace

std::string PoleLocation::str() const {
  std::string value;
  if (m.is_one())
    value = rat_to_string(c);
  else if (c == 1)
    value = m.str();
  else
    value = rat_to_string(c) + "*" + m.str();
  std::string s = var.str() + " = " + value;
  if (order != 1) s += " (order " + std::to_string(order) + ")";
  return s;
}

std::vector<PoleLocation> enumerate_poles(const FactorProduct& f, Variable var) {
  std::map<std::pair<Rat, Monomial>, int> located;
  for (const auto& d : f.den) {
    int e = d.m.exponent_of(var);
    if (e == 0) continue;
    if (e != 1 && e != -1)
      throw DomainError("denominator factor " + d.str() + " is not linear in " + var.str());
    Monomial mu = d.m.without(var);
    if (e == 1)
      located[{1 / d.c, mu.inverse()}] += d.mult;
    else
      located[{d.c, mu}] += d.mult;
  }
  std::vector<PoleLocation> out;
  for (const auto& [loc, mult] : located) {
    PoleLocation p{var, loc.first, loc.second, mult};
    for (const auto& nf : f.numf) {
      TransformedFactor tf = transform_at(nf, p);
      if (tf.vanishing) p.order -= tf.mult;
    }
    if (p.order >= 1) out.push_back(std::move(p));
  }
  return out;
}

std::vector<PoleLocation> enumerate_poles(const FactoredRational& f, Variable var) {
  std::map<std::pair<Rat, Monomial>, int> located;
  for (const auto& d : f.denominator()) {
    int e = d.m.exponent_of(var);
    if (e == 0) continue;
    if (e != 1 && e != -1)
      throw DomainError("denominator factor " + d.str() + " is not linear in " + var.str());
    Monomial mu = d.m.without(var);
    if (e == 1)
      located[{1 / d.c, mu.inverse()}] += d.mult;
    else
      located[{d.c, mu}] += d.mult;
  }
  std::vector<PoleLocation> out;
  for (const auto& [loc, mult] : located) {
    const auto& [c, m] = loc;
    // Vanishing order of the expanded numerator at var = c*m, by repeated
    // exact synthetic division by (var - c*m).
    int vanish = 0;
    {
      const LaurentPoly& num = f.numerator();
      int lo = num.min_degree_in(var), hi = num.max_degree_in(var);
      std::vector<LaurentPoly> coeffs;
      for (int k = lo; k <= hi; ++k) coeffs.push_back(num.coefficient_in(var, k));
      auto value_at = [&]() {
        LaurentPoly s;
        for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
          int k = lo + static_cast<int>(idx);
          s += coeffs[idx].mul_monomial(rat_pow(c, k), m.pow(k));
        }
        return s;
      };
      while (vanish < mult && coeffs.size() > 1 && value_at().is_zero()) {
        std::vector<LaurentPoly> q(coeffs.size() - 1);
        LaurentPoly carry = coeffs.back();
        for (int idx = static_cast<int>(coeffs.size()) - 2; idx >= 0; --idx) {
          q[static_cast<std::size_t>(idx)] = carry;
          carry = coeffs[static_cast<std::size_t>(idx)] + carry.mul_monomial(c, m);
        }
        coeffs = std::move(q);
        ++vanish;
      }
    }
    int order = mult - vanish;
    if (order >= 1) out.push_back(PoleLocation{var, c, m, order});
  }
  return out;
}

ProductSum residue_at(const FactorProduct& f, const PoleLocation& p) {
  std::vector<TransformedFactor> nums, dens;
  nums.reserve(f.numf.size());
  dens.reserve(f.den.size());
  int pole_order = 0;
  for (const auto& d : f.numf) {
    nums.push_back(transform_at(d, p));
    if (nums.back().vanishing) pole_order -= nums.back().mult;
  }
  for (const auto& d : f.den) {
    dens.push_back(transform_at(d, p));
    if (dens.back().vanishing) pole_order += dens.back().mult;
  }
  if (pole_order <= 0) return {};

  const int e_mono = f.mono.exponent_of(p.var);
  Rat base_c = f.coef * rat_pow(p.c, e_mono + 1);
  Monomial base_m = f.mono.without(p.var) * p.m.pow(e_mono + 1);
  // Vanishing factors with e == +1 turn into powers of (-t).
  for (const auto& tf : nums)
    if (tf.vanishing && tf.e == 1 && tf.mult % 2 != 0) base_c = -base_c;
  for (const auto& tf : dens)
    if (tf.vanishing && tf.e == 1 && tf.mult % 2 != 0) base_c = -base_c;

  if (pole_order == 1) {
    // Simple pole: every unit factor is evaluated at t = 0.
    FactorProduct r;
    r.coef = base_c;
    r.mono = base_m;
    for (const auto& tf : nums) {
      if (tf.vanishing) continue;
      if (tf.e == 0)
        factor_lists::push(r.numf, tf.cstar, tf.mstar, tf.mult);
      else
        r.mul_one_minus(tf.cstar, tf.mstar, tf.mult);
    }
    for (const auto& tf : dens) {
      if (tf.vanishing) continue;
      if (tf.e == 0)
        factor_lists::push(r.den, tf.cstar, tf.mstar, tf.mult);
      else
        r.div_one_minus(tf.cstar, tf.mstar, tf.mult);
    }
    r.cancel();
    if (r.is_zero()) return {};
    return {std::move(r)};
  }

  // Higher-order pole: assemble the unit-series product to order t^{D} and
  // read off the coefficient of t^{pole_order - 1}.
  const int D = pole_order - 1;
  const int size = D + 1;
  FRSeries s(static_cast<std::size_t>(size));
  s[0] = FactoredRational(LaurentPoly::monomial(base_c, base_m));
  mul_binomial_power(s, e_mono);

  std::vector<const TransformedFactor*> spectators_num, spectators_den;
  for (const auto& tf : nums) {
    if (tf.vanishing) {
      if (tf.e == -1) mul_binomial_power(s, -tf.mult);
      continue;
    }
    if (tf.e == 0) {
      spectators_num.push_back(&tf);
      continue;
    }
    s = mul_trunc(s, core_series(tf, true, size));
    if (tf.e == -1) mul_binomial_power(s, -tf.mult);
  }
  for (const auto& tf : dens) {
    if (tf.vanishing) {
      if (tf.e == -1) mul_binomial_power(s, tf.mult);
      continue;
    }
    if (tf.e == 0) {
      spectators_den.push_back(&tf);
      continue;
    }
    s = mul_trunc(s, core_series(tf, false, size));
    if (tf.e == -1) mul_binomial_power(s, tf.mult);
  }

  ProductSum out = product_sum_from(s[static_cast<std::size_t>(D)]);
  for (auto& t : out) {
    for (const auto* tf : spectators_num) factor_lists::push(t.numf, tf->cstar, tf->mstar, tf->mult);
    for (const auto* tf : spectators_den) factor_lists::push(t.den, tf->cstar, tf->mstar, tf->mult);
    t.cancel();
  }
  coalesce(out);
  return out;
}

FactoredRational residue_at(const FactoredRational& f, const PoleLocation& p) {
  ProductSum out;
  for (const auto& term : product_sum_from(f)) {
    ProductSum r = residue_at(term, p);
    out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return combine(out);
}

ProductSum ir_once(const ProductSum& f, Variable var) {
  ProductSum out;
  for (const auto& term : f) {
    if (term.is_zero()) continue;
    for (const auto& p : enumerate_poles(term, var)) {
      for (auto& t : residue_at(term, p)) {
        t.coef = -t.coef;
        if (t.contains(var))
          throw DomainError("iterated residue output still involves " + var.str());
        out.push_back(std::move(t));
      }
    }
  }
  coalesce(out);
  return out;
}

FactoredRational ir_zero_infty(const FactoredRational& f, Variable var) {
  return combine(ir_once(product_sum_from(f), var));
}

ProductSum ir_alphabet_products(ProductSum f, const std::vector<Variable>& z) {
  for (Variable v : z) f = ir_once(f, v);
  return f;
}

FactoredRational ir_alphabet(const FactoredRational& f, const std::vector<Variable>& z) {
  return combine(ir_alphabet_products(product_sum_from(f), z));
}

FactoredRational localization_pushforward(const FactoredRational& f,
                                          const std::vector<Variable>& sigma,
                                          const std::vector<Variable>& omega,
                                          const std::vector<Variable>& roots) {
  const int k = static_cast<int>(sigma.size());
  const int n = static_cast<int>(roots.size());
  if (k + static_cast<int>(omega.size()) != n)
    throw DomainError("slot counts do not match the root count");
  for (Variable r : roots)
    for (Variable s : concat(sigma, omega))
      if (r == s) throw DomainError("root variables must be distinct from slot variables");

  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  FactoredRational total;
  while (true) {
    std::vector<bool> in_pick(static_cast<std::size_t>(n), false);
    for (int i : pick) in_pick[static_cast<std::size_t>(i)] = true;

    std::map<Variable, std::pair<Rat, Monomial>> sub;
    for (int i = 0; i < k; ++i)
      sub[sigma[static_cast<std::size_t>(i)]] = {Rat(1),
                                                 mono(roots[static_cast<std::size_t>(pick[i])])};
    int slot = 0;
    for (int j = 0; j < n; ++j)
      if (!in_pick[static_cast<std::size_t>(j)])
        sub[omega[static_cast<std::size_t>(slot++)]] = {Rat(1),
                                                        mono(roots[static_cast<std::size_t>(j)])};

    FactoredRational term = f.substitute_monomials(sub);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (in_pick[static_cast<std::size_t>(i)] && !in_pick[static_cast<std::size_t>(j)])
          term *= FactoredRational::geometric(
              1, mono(roots[static_cast<std::size_t>(i)]) * mono(roots[static_cast<std::size_t>(j)], -1));
    total += term;

    // next k-subset in lexicographic order
    int t = k - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == n - k + t) --t;
    if (t < 0) break;
    ++pick[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u)
      pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
  }
  return total;
}

FactoredRational ir_pushforward_full(const FactoredRational& f,
                                     const std::vector<Variable>& sigma,
                                     const std::vector<Variable>& omega,
                                     const std::vector<Variable>& roots) {
  const std::vector<Variable> z = concat(sigma, omega);
  const std::size_t n = roots.size();
  if (z.size() != n) throw DomainError("slot counts do not match the root count");
  ProductSum ps = product_sum_from(f);
  for (auto& term : ps) {
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = i + 1; j < z.size(); ++j)
        term.mul_one_minus(1, mono(z[j]) * mono(z[i], -1));
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        term.div_one_minus(1, mono(z[i]) * mono(roots[j], -1));
    for (Variable v : z) term.mono = term.mono * mono(v, -1);
  }
  return combine(ir_alphabet_products(std::move(ps), z));
}

FactoredRational ir_pushforward_S(const FactoredRational& f,
                                  const std::vector<Variable>& sigma,
                                  const std::vector<Variable>& roots) {
  const std::size_t n = roots.size();
  if (sigma.size() > n) throw DomainError("more slots than roots");
  ProductSum ps = product_sum_from(f);
  for (auto& term : ps) {
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = i + 1; j < sigma.size(); ++j)
        term.mul_one_minus(1, mono(sigma[j]) * mono(sigma[i], -1));
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = 0; j < n; ++j)
        term.div_one_minus(1, mono(sigma[i]) * mono(roots[j], -1));
    for (Variable v : sigma) term.mono = term.mono * mono(v, -1);
  }
  return combine(ir_alphabet_products(std::move(ps), sigma));
}

FactoredRational ir_pushforward_Q(const FactoredRational& f,
                                  const std::vector<Variable>& omega,
                                  const std::vector<Variable>& roots) {
  const std::size_t q = omega.size();
  const std::size_t n = roots.size();
  if (q > n) throw DomainError("more slots than roots");

  // Fresh residue variables for the inverse substitution.
  std::vector<Variable> z;
  for (int step = 0; z.empty(); ++step) {
    std::vector<Variable> candidate;
    bool ok = true;
    for (std::size_t i = 0; i < q; ++i) {
      Variable v = Variable::residue(step, static_cast<int>(i) + 1);
      if (f.contains(v)) ok = false;
      for (Variable w : concat(omega, roots))
        if (v == w) ok = false;
      candidate.push_back(v);
    }
    if (ok) z = std::move(candidate);
  }

  std::map<Variable, std::pair<Rat, Monomial>> sub;
  for (std::size_t i = 0; i < q; ++i) sub[omega[i]] = {Rat(1), mono(z[i], -1)};
  ProductSum ps = product_sum_from(f.substitute_monomials(sub));
  for (auto& term : ps) {
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = i + 1; j < q; ++j)
        term.mul_one_minus(1, mono(z[j]) * mono(z[i], -1));
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < n; ++j)
        term.div_one_minus(1, mono(roots[j]) * mono(z[i]));
    for (Variable v : z) term.mono = term.mono * mono(v, -1);
  }
  return combine(ir_alphabet_products(std::move(ps), z));
}

}  // namespace quiverk
