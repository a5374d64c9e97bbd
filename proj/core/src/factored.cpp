#include "quiverk/factored.hpp"

#include <algorithm>

#include "quiverk/errors.hpp"
#include "quiverk/product_form.hpp"

namespace quiverk {

namespace {

bool greater_than_one(const Monomial& m) { return m > Monomial(); }

}  // namespace

std::string DenomFactor::str() const {
  std::string s = "(1 ";
  Rat a = c;
  if (a > 0) {
    s += "- ";
  } else {
    s += "+ ";
    a = -a;
  }
  if (a != 1) s += rat_to_string(a) + "*";
  s += m.str() + ")";
  if (mult != 1) s += "^" + std::to_string(mult);
  return s;
}

namespace factor_lists {

void push(std::vector<DenomFactor>& fs, const Rat& c, const Monomial& m, int mult) {
  if (mult == 0) return;
  auto key = std::make_pair(m, c);
  auto it = std::lower_bound(fs.begin(), fs.end(), key, [](const DenomFactor& f, const auto& k) {
    if (f.m != k.first) return f.m < k.first;
    return f.c < k.second;
  });
  if (it != fs.end() && it->m == m && it->c == c) {
    it->mult += mult;
    if (it->mult == 0) fs.erase(it);
    return;
  }
  fs.insert(it, DenomFactor{c, m, mult});
}

void push_canonical(std::vector<DenomFactor>& fs, const Rat& c, const Monomial& m, int mult,
                    Rat& unit_c, Monomial& unit_m) {
  if (mult == 0 || c == 0) return;
  if (mult < 0) throw DomainError("internal: negative denominator multiplicity");
  if (m.is_one()) {
    if (c == 1) throw DomainError("denominator factor vanishes identically");
    unit_c /= rat_pow(Rat(1) - c, mult);
    return;
  }
  if (greater_than_one(m)) {
    push(fs, c, m, mult);
    return;
  }
  // 1/(1 - c*m)^k = (-1/c)^k * m^{-k} / (1 - (1/c)*m^{-1})^k
  unit_c *= rat_pow(-1 / c, mult);
  unit_m = unit_m * m.pow(-mult);
  push(fs, 1 / c, m.inverse(), mult);
}

std::vector<DenomFactor> merge(const std::vector<DenomFactor>& a,
                               const std::vector<DenomFactor>& b) {
  std::vector<DenomFactor> out = a;
  for (const auto& f : b) push(out, f.c, f.m, f.mult);
  return out;
}

std::vector<DenomFactor> lcm(const std::vector<DenomFactor>& a,
                             const std::vector<DenomFactor>& b) {
  std::vector<DenomFactor> out = a;
  for (const auto& f : b) {
    bool found = false;
    for (auto& g : out)
      if (g.m == f.m && g.c == f.c) {
        g.mult = std::max(g.mult, f.mult);
        found = true;
        break;
      }
    if (!found) push(out, f.c, f.m, f.mult);
  }
  return out;
}

std::vector<DenomFactor> diff(const std::vector<DenomFactor>& whole,
                              const std::vector<DenomFactor>& part) {
  std::vector<DenomFactor> out;
  auto remaining = part;
  for (const auto& f : whole) {
    int used = 0;
    for (auto& g : remaining)
      if (g.m == f.m && g.c == f.c) {
        used = g.mult;
        g.mult = 0;
        break;
      }
    if (used > f.mult) throw DomainError("internal: factor list difference underflow");
    if (f.mult - used > 0) out.push_back(DenomFactor{f.c, f.m, f.mult - used});
  }
  for (const auto& g : remaining)
    if (g.mult != 0) throw DomainError("internal: factor list difference underflow");
  return out;
}

LaurentPoly expand(const std::vector<DenomFactor>& fs) {
  LaurentPoly p(1);
  for (const auto& f : fs) p *= f.poly().pow(static_cast<unsigned>(f.mult));
  return p;
}

}  // namespace factor_lists

FactoredRational FactoredRational::fraction(LaurentPoly num,
                                            const std::vector<DenomFactor>& den) {
  FactoredRational r;
  if (num.is_zero()) return r;
  Rat unit_c = 1;
  Monomial unit_m;
  for (const auto& f : den) factor_lists::push_canonical(r.den_, f.c, f.m, f.mult, unit_c, unit_m);
  r.num_ = num.mul_monomial(unit_c, unit_m);
  return r;
}

FactoredRational FactoredRational::geometric(const Rat& c, const Monomial& m, int mult) {
  return fraction(LaurentPoly(1), {DenomFactor{c, m, mult}});
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational r = *this;
  r.num_ = -r.num_;
  return r;
}

FactoredRational FactoredRational::operator+(const FactoredRational& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  auto common = factor_lists::lcm(den_, rhs.den_);
  LaurentPoly num = num_ * factor_lists::expand(factor_lists::diff(common, den_)) +
                    rhs.num_ * factor_lists::expand(factor_lists::diff(common, rhs.den_));
  FactoredRational r;
  if (num.is_zero()) return r;
  r.num_ = std::move(num);
  r.den_ = std::move(common);
  return r;
}

FactoredRational FactoredRational::operator-(const FactoredRational& rhs) const {
  return *this + (-rhs);
}

FactoredRational FactoredRational::operator*(const FactoredRational& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  FactoredRational r;
  r.num_ = num_ * rhs.num_;
  r.den_ = factor_lists::merge(den_, rhs.den_);
  return r;
}

FactoredRational FactoredRational::operator/(const FactoredRational& rhs) const {
  return *this * rhs.reciprocal();
}

FactoredRational FactoredRational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  LaurentPoly n = factor_lists::expand(den_);
  const auto& ts = num_.terms();
  FactoredRational r;
  if (ts.size() == 1) {
    r.num_ = n.mul_monomial(1 / ts[0].coef, ts[0].mono.inverse());
  } else if (ts.size() == 2) {
    // c1*m1 + c2*m2 (descending) = c2*m2 * (1 - (-c1/c2) * (m1/m2))
    Rat c = -ts[0].coef / ts[1].coef;
    Monomial m = ts[0].mono / ts[1].mono;
    r.num_ = n.mul_monomial(1 / ts[1].coef, ts[1].mono.inverse());
    factor_lists::push(r.den_, c, m, 1);
  } else {
    throw DomainError("cannot invert a numerator with " + std::to_string(ts.size()) +
                      " terms: " + num_.str());
  }
  return r;
}

FactoredRational FactoredRational::pow(int k) const {
  if (k < 0) return reciprocal().pow(-k);
  FactoredRational r(Rat(1));
  FactoredRational base = *this;
  unsigned e = static_cast<unsigned>(k);
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

FactoredRational FactoredRational::reduced() const {
  FactoredRational r = *this;
  if (r.num_.is_zero()) {
    r.den_.clear();
    return r;
  }
  std::vector<DenomFactor> kept;
  for (auto f : r.den_) {
    LaurentPoly p = f.poly();
    while (f.mult > 0) {
      auto q = r.num_.exact_div(p);
      if (!q) break;
      r.num_ = std::move(*q);
      --f.mult;
    }
    if (f.mult > 0) kept.push_back(f);
  }
  r.den_ = std::move(kept);
  return r;
}

LaurentPoly FactoredRational::to_laurent() const {
  FactoredRational r = reduced();
  if (!r.den_.empty())
    throw DomainError("rational function is not a Laurent polynomial: " + r.str());
  return r.num_;
}

FactoredRational FactoredRational::substitute(
    const std::map<Variable, FactoredRational>& values) const {
  auto untouched = [&](const Monomial& m) {
    Monomial rest;
    for (const auto& [v, e] : m.factors())
      if (!values.count(v)) rest = rest * Monomial::variable(v, e);
    return rest;
  };
  FactoredRational result;
  for (const auto& t : num_.terms()) {
    FactoredRational term(LaurentPoly::monomial(t.coef, untouched(t.mono)));
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it != values.end()) term *= it->second.pow(e);
    }
    result += term;
  }
  for (const auto& f : den_) {
    bool touched = false;
    for (const auto& [v, e] : f.m.factors()) touched = touched || values.count(v) > 0;
    if (!touched) {
      result *= geometric(f.c, f.m, f.mult);
      continue;
    }
    FactoredRational image(LaurentPoly::monomial(f.c, untouched(f.m)));
    for (const auto& [v, e] : f.m.factors()) {
      auto it = values.find(v);
      if (it != values.end()) image *= it->second.pow(e);
    }
    FactoredRational q = FactoredRational(Rat(1)) - image;
    if (q.is_zero())
      throw DomainError("denominator factor vanishes under substitution: " + f.str());
    for (int i = 0; i < f.mult; ++i) result /= q;
  }
  return result;
}

FactoredRational FactoredRational::substitute_monomials(
    const std::map<Variable, std::pair<Rat, Monomial>>& values) const {
  for (const auto& [v, cm] : values)
    for (const auto& [w, cw] : values)
      if (cm.second.contains(w))
        throw DomainError("substitution image of " + v.str() + " contains substituted variable " +
                          w.str());
  LaurentPoly n = num_;
  for (const auto& [v, cm] : values) n = n.substitute_monomial(v, cm.first, cm.second);
  std::vector<DenomFactor> den;
  Rat unit_c = 1;
  Monomial unit_m;
  for (const auto& f : den_) {
    Rat c = f.c;
    Monomial m;
    bool dropped = false;
    for (const auto& [v, e] : f.m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        m = m * Monomial::variable(v, e);
        continue;
      }
      const auto& [cv, mv] = it->second;
      if (cv == 0) {
        if (e < 0) throw DomainError("substituting zero into negative power of " + v.str());
        dropped = true;  // factor becomes 1 - 0
        break;
      }
      c *= rat_pow(cv, e);
      m = m * mv.pow(e);
    }
    if (dropped) continue;
    factor_lists::push_canonical(den, c, m, f.mult, unit_c, unit_m);
  }
  FactoredRational r;
  r.num_ = n.mul_monomial(unit_c, unit_m);
  if (r.num_.is_zero()) return {};
  r.den_ = std::move(den);
  return r;
}

FactoredRational FactoredRational::rename(Variable v, Variable w) const {
  if (v == w) return *this;
  if (contains(w)) throw DomainError("rename collision: " + w.str() + " already present");
  return substitute_monomials({{v, {Rat(1), Monomial::variable(w)}}});
}

bool FactoredRational::contains(Variable v) const {
  if (num_.contains(v)) return true;
  for (const auto& f : den_)
    if (f.m.contains(v)) return true;
  return false;
}

std::string FactoredRational::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ") / (";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i > 0) s += " ";
    s += den_[i].str();
  }
  return s + ")";
}

// -------------------------------------------------------------------------
// FactorProduct

void FactorProduct::mul_scalar(const Rat& c) {
  coef *= c;
  if (coef == 0) *this = FactorProduct{0, Monomial(), {}, {}};
}

void FactorProduct::mul_monomial(const Rat& c, const Monomial& m) {
  mul_scalar(c);
  if (!is_zero()) mono = mono * m;
}

void FactorProduct::mul_one_minus(const Rat& c, const Monomial& m, int exp) {
  if (is_zero() || exp == 0 || c == 0) return;
  if (exp < 0) {
    div_one_minus(c, m, -exp);
    return;
  }
  if (m.is_one()) {
    // scalar factor (1 - c)^exp; it may vanish, zeroing the whole product
    mul_scalar(rat_pow(Rat(1) - c, exp));
    return;
  }
  if (m > Monomial()) {
    factor_lists::push(numf, c, m, exp);
    return;
  }
  // (1 - c*m)^k = (-c*m)^k * (1 - (1/c)*m^{-1})^k
  mul_scalar(rat_pow(-c, exp));
  mono = mono * m.pow(exp);
  factor_lists::push(numf, 1 / c, m.inverse(), exp);
}

void FactorProduct::div_one_minus(const Rat& c, const Monomial& m, int exp) {
  if (is_zero() || exp == 0 || c == 0) return;
  if (exp < 0) {
    mul_one_minus(c, m, -exp);
    return;
  }
  Rat unit_c = 1;
  Monomial unit_m;
  factor_lists::push_canonical(den, c, m, exp, unit_c, unit_m);
  mul_scalar(unit_c);
  mono = mono * unit_m;
}

void FactorProduct::mul_poly_factor(const LaurentPoly& p, int exp) {
  if (is_zero() || exp == 0) return;
  const auto& ts = p.terms();
  if (ts.empty()) {
    if (exp < 0) throw DomainError("division by zero polynomial factor");
    *this = FactorProduct{0, Monomial(), {}, {}};
    return;
  }
  if (ts.size() == 1) {
    mul_scalar(rat_pow(ts[0].coef, exp));
    if (!is_zero()) mono = mono * ts[0].mono.pow(exp);
    return;
  }
  if (ts.size() == 2) {
    // c1*m1 + c2*m2 = c2*m2 * (1 - (-c1/c2)*(m1/m2)) with m1/m2 > 1
    mul_scalar(rat_pow(ts[1].coef, exp));
    if (is_zero()) return;
    mono = mono * ts[1].mono.pow(exp);
    Rat c = -ts[0].coef / ts[1].coef;
    Monomial m = ts[0].mono / ts[1].mono;
    if (exp > 0)
      factor_lists::push(numf, c, m, exp);
    else
      div_one_minus(c, m, -exp);
    return;
  }
  throw DomainError("cannot keep a factor with " + std::to_string(ts.size()) +
                    " terms in product form: " + p.str());
}

FactorProduct FactorProduct::substitute_monomials(
    const std::map<Variable, std::pair<Rat, Monomial>>& values) const {
  for (const auto& [v, cm] : values)
    for (const auto& [w, cw] : values)
      if (cm.second.contains(w))
        throw DomainError("substitution value for " + v.str() +
                          " contains substituted variable " + w.str());
  FactorProduct out;
  out.coef = coef;
  for (const auto& [v, e] : mono.factors()) {
    auto it = values.find(v);
    if (it == values.end()) {
      out.mono = out.mono * Monomial::variable(v, e);
      continue;
    }
    const auto& [cv, mv] = it->second;
    if (cv == 0) {
      if (e < 0) throw DomainError("zero substituted into a negative power of " + v.str());
      return FactorProduct{0, Monomial(), {}, {}};
    }
    out.coef *= rat_pow(cv, e);
    out.mono = out.mono * mv.pow(e);
  }
  if (out.coef == 0) return FactorProduct{0, Monomial(), {}, {}};

  auto transformed = [&](const DenomFactor& f) -> std::pair<Rat, Monomial> {
    Rat c = f.c;
    Monomial m;
    for (const auto& [v, e] : f.m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        m = m * Monomial::variable(v, e);
        continue;
      }
      const auto& [cv, mv] = it->second;
      if (cv == 0) {
        if (e < 0) throw DomainError("zero substituted into a negative power of " + v.str());
        return {Rat(0), Monomial()};
      }
      c *= rat_pow(cv, e);
      m = m * mv.pow(e);
    }
    return {c, m};
  };
  for (const auto& f : numf) {
    auto [c, m] = transformed(f);
    out.mul_one_minus(c, m, f.mult);
    if (out.is_zero()) return out;
  }
  for (const auto& f : den) {
    auto [c, m] = transformed(f);
    out.div_one_minus(c, m, f.mult);
  }
  return out;
}

void FactorProduct::cancel() {
  if (is_zero()) return;
  for (auto& f : numf) {
    for (auto& g : den) {
      if (f.m == g.m && f.c == g.c) {
        int k = std::min(f.mult, g.mult);
        f.mult -= k;
        g.mult -= k;
      }
    }
  }
  std::erase_if(numf, [](const DenomFactor& f) { return f.mult == 0; });
  std::erase_if(den, [](const DenomFactor& f) { return f.mult == 0; });
}

bool FactorProduct::contains(Variable v) const {
  if (mono.contains(v)) return true;
  for (const auto& f : numf)
    if (f.m.contains(v)) return true;
  for (const auto& f : den)
    if (f.m.contains(v)) return true;
  return false;
}

LaurentPoly FactorProduct::numerator_expanded() const {
  LaurentPoly p = LaurentPoly::monomial(coef, mono);
  for (const auto& f : numf) p *= f.poly().pow(static_cast<unsigned>(f.mult));
  return p;
}

FactoredRational FactorProduct::to_factored() const {
  return FactoredRational::fraction(numerator_expanded(), den);
}

std::string FactorProduct::str() const {
  std::string s = rat_to_string(coef);
  if (!mono.is_one()) s += "*" + mono.str();
  for (const auto& f : numf) s += "*" + f.str();
  if (!den.empty()) {
    s += " / (";
    for (std::size_t i = 0; i < den.size(); ++i) {
      if (i > 0) s += " ";
      s += den[i].str();
    }
    s += ")";
  }
  return s;
}

ProductSum product_sum_from(const FactoredRational& f) {
  ProductSum terms;
  for (const auto& t : f.numerator().terms())
    terms.push_back(FactorProduct{t.coef, t.mono, {}, f.denominator()});
  return terms;
}

FactoredRational combine(const ProductSum& terms) {
  std::vector<DenomFactor> common;
  for (const auto& t : terms)
    if (!t.is_zero()) common = factor_lists::lcm(common, t.den);
  // Residue eliminations emit many terms over few distinct denominators
  // (den lists are kept canonically sorted), so the numerators are summed
  // per denominator first and the cofactor expand(common - den) multiplies
  // one collected polynomial per group instead of one per term.
  const auto den_less = [](const std::vector<DenomFactor>& a,
                           const std::vector<DenomFactor>& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](const DenomFactor& f, const DenomFactor& g) {
          if (f.m != g.m) return f.m < g.m;
          if (f.c != g.c) return f.c < g.c;
          return f.mult < g.mult;
        });
  };
  std::map<std::vector<DenomFactor>, std::vector<LaurentPoly::Term>, decltype(den_less)> groups(
      den_less);
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    const LaurentPoly expanded = t.numerator_expanded();
    auto& bucket = groups[t.den];
    bucket.insert(bucket.end(), expanded.terms().begin(), expanded.terms().end());
  }
  LaurentPoly num;
  for (auto& [den, bucket] : groups)
    num += LaurentPoly::from_terms(std::move(bucket)) *
           factor_lists::expand(factor_lists::diff(common, den));
  return FactoredRational::fraction(std::move(num), common).reduced();
}

}  // namespace quiverk
