#include "quiverk/monomial.hpp"

#include <algorithm>

#include "quiverk/errors.hpp"

namespace quiverk {

Monomial Monomial::variable(Variable v, int exponent) {
  Monomial m;
  if (exponent != 0) m.factors_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<Variable, int>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  std::erase_if(m.factors_, [](const auto& f) { return f.second == 0; });
  return m;
}

int Monomial::exponent_of(Variable v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < rhs.factors_.size()) {
    bool take_left = j == rhs.factors_.size() ||
                     (i < factors_.size() && factors_[i].first < rhs.factors_[j].first);
    bool take_right = i == factors_.size() ||
                      (j < rhs.factors_.size() && rhs.factors_[j].first < factors_[i].first);
    if (take_left) {
      out.factors_.push_back(factors_[i++]);
    } else if (take_right) {
      out.factors_.push_back(rhs.factors_[j++]);
    } else {
      int e = factors_[i].second + rhs.factors_[j].second;
      if (e != 0) out.factors_.emplace_back(factors_[i].first, e);
      ++i, ++j;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& [v, e] : out.factors_) e = -e;
  return out;
}

Monomial Monomial::pow(int k) const {
  if (k == 0) return Monomial();
  Monomial out = *this;
  for (auto& [v, e] : out.factors_) e *= k;
  return out;
}

bool Monomial::divisible_by(const Monomial& rhs) const {
  for (const auto& [v, e] : rhs.factors_)
    if (exponent_of(v) < e) return false;
  return true;
}

Monomial Monomial::without(Variable v) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  for (const auto& f : factors_)
    if (!(f.first == v)) out.factors_.push_back(f);
  return out;
}

Monomial Monomial::rename(Variable v, Variable w) const {
  if (v == w) return *this;
  int e = exponent_of(v);
  if (e == 0) return *this;
  if (contains(w))
    throw DomainError("rename collision: " + w.str() + " already present in " + str());
  return without(v) * Monomial::variable(w, e);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() || j < b.factors_.size()) {
    // Missing variables count as exponent zero.
    if (j == b.factors_.size() ||
        (i < a.factors_.size() && a.factors_[i].first < b.factors_[j].first)) {
      if (auto c = a.factors_[i].second <=> 0; c != 0) return c;
      ++i;
    } else if (i == a.factors_.size() || b.factors_[j].first < a.factors_[i].first) {
      if (auto c = 0 <=> b.factors_[j].second; c != 0) return c;
      ++j;
    } else {
      if (auto c = a.factors_[i].second <=> b.factors_[j].second; c != 0) return c;
      ++i, ++j;
    }
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace quiverk
