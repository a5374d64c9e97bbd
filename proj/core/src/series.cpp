#include "quiverk/series.hpp"

#include <algorithm>

#include "quiverk/errors.hpp"

namespace quiverk {

ExpansionDomain::ExpansionDomain(std::vector<Variable> smallest_first)
    : order_(std::move(smallest_first)) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    auto [it, inserted] = positions_.emplace(order_[i], static_cast<int>(i));
    if (!inserted) throw DomainError("duplicate variable in expansion domain: " + order_[i].str());
  }
}

ExpansionDomain::Direction ExpansionDomain::classify(const Monomial& m) const {
  int best_pos = -1;
  int best_exp = 0;
  for (const auto& [v, e] : m.factors()) {
    auto it = positions_.find(v);
    if (it == positions_.end()) continue;
    if (best_pos < 0 || it->second < best_pos) {
      best_pos = it->second;
      best_exp = e;
    }
  }
  if (best_pos < 0) return Direction::NoDomainVariable;
  return best_exp > 0 ? Direction::Small : Direction::Large;
}

int ExpansionDomain::truncation_degree(const Monomial& m) const {
  int d = 0;
  for (const auto& [v, e] : m.factors())
    if (e > 0 && positions_.count(v)) d += e;
  return d;
}

namespace {

// Drops terms whose exponent of v exceeds cap.
LaurentPoly cap_degree(const LaurentPoly& p, Variable v, int cap) {
  std::vector<LaurentPoly::Term> kept;
  kept.reserve(p.terms().size());
  for (const auto& t : p.terms())
    if (t.mono.exponent_of(v) <= cap) kept.push_back(t);
  return LaurentPoly::from_terms(std::move(kept));
}

// Expands num / prod(den) keeping, per level, only exponents of order[idx]
// up to `bound`. Factors are consumed at the level of their earliest domain
// variable; smallness guarantees that variable appears with positive
// exponent, so each factor has an honest geometric series there.
LaurentPoly expand_rec(LaurentPoly num, const std::vector<DenomFactor>& den,
                       const std::vector<Variable>& order, std::size_t idx, int bound) {
  if (num.is_zero()) return {};
  if (idx == order.size()) {
    if (!den.empty())
      throw DomainError("internal: unconsumed denominator factor " + den.front().str());
    return num;
  }
  Variable v = order[idx];
  std::vector<DenomFactor> here, later;
  for (const auto& f : den) (f.m.contains(v) ? here : later).push_back(f);

  LaurentPoly acc = cap_degree(num, v, bound);
  for (const auto& f : here) {
    if (acc.is_zero()) return {};
    int e1 = f.m.exponent_of(v);
    if (e1 <= 0)
      throw DomainError("internal: factor " + f.str() + " not small at " + v.str());
    int amin = acc.min_degree_in(v);
    if (bound < amin) return {};
    int tmax = (bound - amin) / e1;
    std::vector<LaurentPoly::Term> series_terms;
    Rat cp = 1;
    Monomial mp;
    for (int t = 0; t <= tmax; ++t) {
      series_terms.push_back(
          {mp, rat_binomial(f.mult - 1 + t, static_cast<unsigned long>(t)) * cp});
      cp *= f.c;
      mp = mp * f.m;
    }
    acc = cap_degree(acc * LaurentPoly::from_terms(std::move(series_terms)), v, bound);
  }
  return expand_rec(std::move(acc), later, order, idx + 1, bound);
}

// Brings every denominator factor to the small orientation of the domain,
// flipping large ones through the exact identity
//   1/(1 - c*m)^k = (-1/c)^k m^{-k} / (1 - (1/c) m^{-1})^k;
// the unit correction accumulates in (uc, um).
std::vector<DenomFactor> orient_small(const std::vector<DenomFactor>& den,
                                      const ExpansionDomain& domain, Rat& uc, Monomial& um) {
  std::vector<DenomFactor> out;
  out.reserve(den.size());
  for (const auto& f : den) {
    switch (domain.classify(f.m)) {
      case ExpansionDomain::Direction::Small:
        out.push_back(f);
        break;
      case ExpansionDomain::Direction::NoDomainVariable:
        throw DomainError("denominator factor " + f.str() +
                          " has no expansion-domain variable");
      case ExpansionDomain::Direction::Large: {
        const Monomial minv = f.m.inverse();
        for (int t = 0; t < f.mult; ++t) {
          uc *= Rat(-1) / f.c;
          um = um * minv;
        }
        out.push_back({Rat(1) / f.c, minv, f.mult});
        break;
      }
    }
  }
  return out;
}

LaurentPoly filter_bound(const LaurentPoly& p, const ExpansionDomain& domain, int bound) {
  std::vector<LaurentPoly::Term> kept;
  for (const auto& t : p.terms())
    if (domain.truncation_degree(t.mono) <= bound) kept.push_back(t);
  return LaurentPoly::from_terms(std::move(kept));
}

}  // namespace

LaurentPoly series_expand(const FactoredRational& f, const ExpansionDomain& domain,
                          int degree_bound) {
  if (degree_bound < 0) throw DomainError("negative series bound");
  Rat uc = 1;
  Monomial um;
  const auto den = orient_small(f.denominator(), domain, uc, um);
  const LaurentPoly full =
      expand_rec(f.numerator().mul_monomial(uc, um), den, domain.order(), 0, degree_bound);
  return filter_bound(full, domain, degree_bound);
}

LaurentPoly series_expand(const ProductSum& f, const ExpansionDomain& domain, int degree_bound) {
  if (degree_bound < 0) throw DomainError("negative series bound");
  LaurentPoly total;
  for (const auto& term : f) {
    if (term.is_zero()) continue;
    Rat uc = 1;
    Monomial um;
    const auto den = orient_small(term.den, domain, uc, um);
    total += expand_rec(term.numerator_expanded().mul_monomial(uc, um), den, domain.order(), 0,
                        degree_bound);
  }
  return filter_bound(total, domain, degree_bound);
}

}  // namespace quiverk
