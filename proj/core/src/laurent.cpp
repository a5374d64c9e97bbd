#include "quiverk/laurent.hpp"

#include <algorithm>

#include "quiverk/errors.hpp"

namespace quiverk {

namespace {

// Shared accumulation helper: map in ascending monomial order, emitted in
// descending order.
LaurentPoly from_map(std::map<Monomial, Rat>&& acc) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) terms.push_back({it->first, it->second});
  LaurentPoly p = LaurentPoly::from_terms(std::move(terms));
  return p;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rat& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

LaurentPoly LaurentPoly::variable(Variable v, int exponent) {
  return monomial(1, Monomial::variable(v, exponent));
}

LaurentPoly LaurentPoly::monomial(const Rat& c, const Monomial& m) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return b.mono < a.mono; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coef += t.coef;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
  return p;
}

LaurentPoly LaurentPoly::one_minus(const Rat& c, const Monomial& m) {
  return LaurentPoly(1) - monomial(c, m);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

Rat LaurentPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coef;
  return 0;
}

const LaurentPoly::Term& LaurentPoly::leading() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size() || (i < terms_.size() && rhs.terms_[j].mono < terms_[i].mono)) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || terms_[i].mono < rhs.terms_[j].mono) {
      merged.push_back(rhs.terms_[j++]);
    } else {
      Rat c = terms_[i].coef + rhs.terms_[j].coef;
      if (c != 0) merged.push_back({terms_[i].mono, c});
      ++i, ++j;
    }
  }
  LaurentPoly p;
  p.terms_ = std::move(merged);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const { return *this + (-rhs); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  if (terms_.size() == 1) return rhs.mul_monomial(terms_.front().coef, terms_.front().mono);
  if (rhs.terms_.size() == 1) return mul_monomial(rhs.terms_.front().coef, rhs.terms_.front().mono);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) prods.push_back({a.mono * b.mono, a.coef * b.coef});
  return from_terms(std::move(prods));
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  if (c == 0) return {};
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coef *= c;
  return p;
}

LaurentPoly LaurentPoly::mul_monomial(const Rat& c, const Monomial& m) const {
  if (c == 0) return {};
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.mono * m, t.coef * c});
  // Multiplying by a fixed monomial preserves the descending order.
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& rhs) const {
  if (rhs.is_zero()) throw DomainError("division by zero polynomial");
  if (is_zero()) return LaurentPoly();
  if (rhs.terms_.size() == 1) {
    const Term& d = rhs.terms_.front();
    return mul_monomial(Rat(1) / d.coef, d.mono.inverse());
  }
  if (rhs.terms_.size() == 2) {
    // Normalize the divisor to 1 - c*m. Monomials congruent modulo the
    // exponent vector of m form geometric strings x^rep * m^k on which
    // division is the first-order recurrence q_k = p_k + c*q_{k-1}; the
    // quotient has finite support exactly when every string's final carry
    // cancels its top coefficient.
    const Term& lead = rhs.terms_.front();
    const Rat c = -(rhs.terms_[1].coef / lead.coef);
    const Monomial m = rhs.terms_[1].mono / lead.mono;
    const LaurentPoly scaled = mul_monomial(Rat(1) / lead.coef, lead.mono.inverse());

    const Variable pivot = m.factors().front().first;
    const int g = m.factors().front().second;
    const auto floor_div = [](int e, int d) {
      int q = e / d;
      if ((e % d) != 0 && ((e < 0) != (d < 0))) --q;
      return q;
    };
    std::map<Monomial, std::vector<std::pair<int, Rat>>> classes;
    for (const auto& t : scaled.terms_) {
      const int k = floor_div(t.mono.exponent_of(pivot), g);
      classes[t.mono * m.pow(-k)].emplace_back(k, t.coef);
    }
    std::vector<Term> out;
    for (auto& [rep, string] : classes) {
      std::sort(string.begin(), string.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      const int kmax = string.back().first;
      Rat carry = 0;
      std::size_t idx = 0;
      for (int k = string.front().first; k < kmax; ++k) {
        Rat p = 0;
        if (string[idx].first == k) p = string[idx++].second;
        carry = p + c * carry;
        if (carry != 0) out.push_back({rep * m.pow(k), carry});
      }
      if (-(c * carry) != string.back().second) return std::nullopt;
    }
    return from_terms(std::move(out));
  }
  // Shift both operands into ordinary polynomials. Newton polytopes multiply
  // under products, so the quotient (if any) of the shifted operands has only
  // nonnegative exponents and single-divisor long division decides exactness.
  std::map<Variable, int> mins_n, mins_d;
  auto collect_mins = [](const LaurentPoly& p, std::map<Variable, int>& mins) {
    for (const auto& t : p.terms_)
      for (const auto& [v, e] : t.mono.factors()) {
        auto [it, inserted] = mins.try_emplace(v, e);
        if (!inserted) it->second = std::min(it->second, e);
      }
  };
  collect_mins(*this, mins_n);
  collect_mins(rhs, mins_d);
  std::vector<std::pair<Variable, int>> shift_n, shift_d;
  for (const auto& [v, e] : mins_n) shift_n.emplace_back(v, -std::min(e, 0));
  for (const auto& [v, e] : mins_d) shift_d.emplace_back(v, -std::min(e, 0));
  Monomial mn = Monomial::from_factors(shift_n);
  Monomial md = Monomial::from_factors(shift_d);
  LaurentPoly n = mul_monomial(1, mn);
  LaurentPoly d = rhs.mul_monomial(1, md);

  LaurentPoly quotient;
  LaurentPoly remainder = n;
  const Term& dl = d.leading();
  while (!remainder.is_zero()) {
    const Term& rl = remainder.leading();
    if (!rl.mono.divisible_by(dl.mono)) return std::nullopt;
    LaurentPoly q = monomial(rl.coef / dl.coef, rl.mono / dl.mono);
    quotient += q;
    remainder -= q * d;
  }
  // Undo the shifts: this/rhs = quotient * md / mn.
  return quotient.mul_monomial(1, md / mn);
}

LaurentPoly LaurentPoly::substitute_monomial(Variable v, const Rat& c, const Monomial& m) const {
  if (m.contains(v))
    throw DomainError("substitution value for " + v.str() + " contains the variable itself");
  std::map<Monomial, Rat> acc;
  for (const auto& t : terms_) {
    int e = t.mono.exponent_of(v);
    if (e == 0) {
      acc[t.mono] += t.coef;
      continue;
    }
    if (c == 0) {
      if (e < 0)
        throw DomainError("substituting zero into negative power of " + v.str());
      continue;
    }
    Rat ce = 1;
    for (int k = 0; k < std::abs(e); ++k) ce *= c;
    if (e < 0) ce = 1 / ce;
    acc[t.mono.without(v) * m.pow(e)] += t.coef * ce;
  }
  return from_map(std::move(acc));
}

LaurentPoly LaurentPoly::rename(Variable v, Variable w) const {
  if (v == w) return *this;
  std::map<Monomial, Rat> acc;
  for (const auto& t : terms_) acc[t.mono.rename(v, w)] += t.coef;
  return from_map(std::move(acc));
}

std::set<Variable> LaurentPoly::variables() const {
  std::set<Variable> vars;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.mono.factors()) vars.insert(v);
  return vars;
}

bool LaurentPoly::contains(Variable v) const {
  for (const auto& t : terms_)
    if (t.mono.contains(v)) return true;
  return false;
}

int LaurentPoly::max_degree_in(Variable v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent_of(v));
  return d;
}

int LaurentPoly::min_degree_in(Variable v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent_of(v));
  return d;
}

LaurentPoly LaurentPoly::coefficient_in(Variable v, int k) const {
  std::vector<Term> terms;
  for (const auto& t : terms_)
    if (t.mono.exponent_of(v) == k) terms.push_back({t.mono.without(v), t.coef});
  return from_terms(std::move(terms));
}

int LaurentPoly::max_total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int td = t.mono.total_degree();
    d = first ? td : std::max(d, td);
    first = false;
  }
  return d;
}

int LaurentPoly::min_total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int td = t.mono.total_degree();
    d = first ? td : std::min(d, td);
    first = false;
  }
  return d;
}

LaurentPoly LaurentPoly::total_degree_part(int d) const {
  std::vector<Term> terms;
  for (const auto& t : terms_)
    if (t.mono.total_degree() == d) terms.push_back(t);
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_symmetric_in(const std::vector<Variable>& alphabet) const {
  for (std::size_t i = 0; i + 1 < alphabet.size(); ++i) {
    Variable a = alphabet[i], b = alphabet[i + 1];
    std::map<Monomial, Rat> acc;
    for (const auto& t : terms_) {
      int ea = t.mono.exponent_of(a), eb = t.mono.exponent_of(b);
      Monomial m = t.mono.without(a).without(b) * Monomial::variable(a, eb) *
                   Monomial::variable(b, ea);
      acc[m] += t.coef;
    }
    if (!(from_map(std::move(acc)) == *this)) return false;
  }
  return true;
}

Rat LaurentPoly::evaluate(const std::map<Variable, Rat>& point) const {
  Rat total = 0;
  for (const auto& t : terms_) {
    Rat value = t.coef;
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw DomainError("evaluate: unbound variable " + v.str());
      if (it->second == 0 && e < 0)
        throw DomainError("evaluate: zero raised to negative power for " + v.str());
      Rat p = 1;
      for (int k = 0; k < std::abs(e); ++k) p *= it->second;
      value *= e >= 0 ? p : Rat(1) / p;
    }
    total += value;
  }
  return total;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const Term& t = terms_[i];
    Rat c = t.coef;
    if (i == 0) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (t.mono.is_one()) {
      s += rat_to_string(c);
    } else {
      if (c != 1) s += rat_to_string(c) + "*";
      s += t.mono.str();
    }
  }
  return s;
}

}  // namespace quiverk
