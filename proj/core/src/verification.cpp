#include "quiverk/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "quiverk/cohomology.hpp"
#include "quiverk/factored.hpp"
#include "quiverk/groth.hpp"
#include "quiverk/kclass.hpp"
#include "quiverk/product_form.hpp"
#include "quiverk/quiver.hpp"
#include "quiverk/reineke.hpp"
#include "quiverk/residues.hpp"

namespace quiverk {
namespace {

using Clock = std::chrono::steady_clock;

Monomial mono(Variable v, int e = 1) { return Monomial::variable(v, e); }

// Signed monomial from explicit (variable, exponent) factors.
LaurentPoly term(long c, std::vector<std::pair<Variable, int>> factors) {
  return LaurentPoly::monomial(Rat(c), Monomial::from_factors(std::move(factors)));
}

std::string poly_mismatch(const std::string& what, const LaurentPoly& got,
                          const LaurentPoly& want) {
  if (got == want) return {};
  return what + ": got " + got.str() + " ; want " + want.str();
}

std::string table_mismatch(const std::string& what, const QuiverCoefficientTable& got,
                           const QuiverCoefficientTable& want) {
  if (got == want) return {};
  return what + ": got " + table_str(got) + " ; want " + table_str(want);
}

std::string rp_str(const ResolutionPair& rp) {
  std::ostringstream os;
  os << "i=(";
  for (std::size_t k = 0; k < rp.vertex.size(); ++k)
    os << (k ? "," : "") << rp.vertex[k] + 1;
  os << ") r=(";
  for (std::size_t k = 0; k < rp.rank.size(); ++k) os << (k ? "," : "") << rp.rank[k];
  os << ")";
  return os.str();
}

// ---- fixtures ----

Quiver a2_quiver() { return Quiver(2, {{0, 1}}); }

// Inbound A3: arrows 1 -> 2 <- 3.
Quiver a3_quiver() { return Quiver(3, {{0, 1}, {2, 1}}); }

OrbitVector a3_orbit() {
  return OrbitVector::from_entries({
      {{1, 1, 0}, 1},
      {{1, 1, 1}, 1},
      {{0, 1, 0}, 1},
      {{0, 0, 1}, 1},
  });
}

OrbitVector a2_orbit_111() {
  return OrbitVector::from_entries({{{1, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}});
}

// The twelve-term inbound-A3 orbit class in the Grothendieck roots
// a = e1_*, b = e2_*, g = e3_*.
LaurentPoly a3_expected_kclass() {
  const Variable a1 = Variable::groth_root(1, 1), a2 = Variable::groth_root(1, 2);
  const Variable b1 = Variable::groth_root(2, 1), b2 = Variable::groth_root(2, 2),
                 b3 = Variable::groth_root(2, 3);
  const Variable g1 = Variable::groth_root(3, 1), g2 = Variable::groth_root(3, 2);
  LaurentPoly p(1);
  p = p + term(-1, {{a1, 1}, {a2, 1}, {g1, 2}, {g2, 2}, {b1, -2}, {b2, -2}, {b3, -2}});
  p = p + term(1, {{a1, 1}, {a2, 1}, {g1, 1}, {g2, 1}, {b1, -1}, {b2, -1}, {b3, -2}});
  p = p + term(1, {{a1, 1}, {a2, 1}, {g1, 1}, {g2, 1}, {b1, -1}, {b2, -2}, {b3, -1}});
  p = p + term(1, {{a1, 1}, {a2, 1}, {g1, 1}, {g2, 1}, {b1, -2}, {b2, -1}, {b3, -1}});
  p = p + term(-1, {{g1, 1}, {g2, 1}, {b1, -1}, {b2, -1}});
  p = p + term(-1, {{g1, 1}, {g2, 1}, {b1, -1}, {b3, -1}});
  p = p + term(-1, {{g1, 1}, {g2, 1}, {b2, -1}, {b3, -1}});
  p = p + term(-1, {{a1, 1}, {a2, 1}, {g1, 1}, {b1, -1}, {b2, -1}, {b3, -1}});
  p = p + term(-1, {{a1, 1}, {a2, 1}, {g2, 1}, {b1, -1}, {b2, -1}, {b3, -1}});
  p = p + term(1, {{g1, 2}, {g2, 1}, {b1, -1}, {b2, -1}, {b3, -1}});
  p = p + term(1, {{g1, 1}, {g2, 2}, {b1, -1}, {b2, -1}, {b3, -1}});
  return p;
}

QuiverCoefficientTable a3_expected_table() {
  QuiverCoefficientTable t;
  t.entries[PartitionTuple{{}, {2, 1}, {}}] = 1;
  t.entries[PartitionTuple{{1}, {2}, {}}] = 1;
  t.entries[PartitionTuple{{1}, {2, 1}, {}}] = -1;
  t.codimension = 3;
  return t;
}

// Tables computed by the earlier checks, reused by the property suites.
struct SuiteState {
  std::optional<KClass> a3_kclass;
  std::optional<QuiverCoefficientTable> a2_table;
  std::optional<QuiverCoefficientTable> a3_table;
  std::vector<std::pair<QuiverCoefficientTable, int>> rectangle_tables;
};

// ---- criterion 1: one-variable residue ----

std::string check_single_residue() {
  const Variable a = Variable::letter('a'), b = Variable::letter('b');
  const FactoredRational f = FactoredRational::fraction(
      LaurentPoly::monomial(1, mono(a, -1)), {{Rat(1), mono(a) * mono(b, -1), 1}});
  const LaurentPoly r = ir_zero_infty(f, a).reduced().to_laurent();
  return poly_mismatch("residues at zero and infinity", r, LaurentPoly(1));
}

// ---- criterion 2: two-variable residue vs. localization ----

std::string check_pushforward_two_routes() {
  const Variable al1 = Variable::letter('a', 1), al2 = Variable::letter('a', 2);
  const Variable be1 = Variable::letter('b', 1), be2 = Variable::letter('b', 2);
  const LaurentPoly expected =
      LaurentPoly(1) + term(-1, {{be1, 1}, {be2, 1}, {al1, -1}, {al2, -1}});

  const Variable z1 = Variable::residue(1, 1), z2 = Variable::residue(1, 2);
  FactorProduct fp;
  fp.mul_one_minus(1, mono(be1) * mono(z2, -1));
  fp.mul_one_minus(1, mono(be2) * mono(z2, -1));
  fp.mul_one_minus(1, mono(z2) * mono(z1, -1));
  fp.div_one_minus(1, mono(z1) * mono(al1, -1));
  fp.div_one_minus(1, mono(z2) * mono(al1, -1));
  fp.div_one_minus(1, mono(z1) * mono(al2, -1));
  fp.div_one_minus(1, mono(z2) * mono(al2, -1));
  fp.mul_monomial(1, mono(z1, -1) * mono(z2, -1));
  const LaurentPoly via_ir =
      combine(ir_alphabet_products({fp}, {z1, z2})).reduced().to_laurent();
  if (auto d = poly_mismatch("iterated-residue route", via_ir, expected); !d.empty()) return d;

  const Variable s = Variable::letter('s'), w = Variable::letter('w');
  FactorProduct fw;
  fw.mul_one_minus(1, mono(be1) * mono(w, -1));
  fw.mul_one_minus(1, mono(be2) * mono(w, -1));
  const LaurentPoly via_loc =
      localization_pushforward(combine({fw}), {s}, {w}, {al1, al2}).reduced().to_laurent();
  return poly_mismatch("localization route", via_loc, expected);
}

// ---- criterion 3: inbound-A3 resolution pair ----

std::string check_a3_resolution_pair() {
  const ResolutionPair rp = resolution_pair(a3_quiver(), a3_orbit());
  const ResolutionPair want{{1, 0, 2, 1, 2}, {1, 2, 1, 2, 1}};
  if (rp == want) return {};
  return "resolution pair: got " + rp_str(rp) + " ; want " + rp_str(want);
}

// ---- criterion 4: inbound-A3 orbit class, both evaluation orders ----

std::string check_a3_kclass(SuiteState& st) {
  const Quiver q = a3_quiver();
  const OrbitVector m = a3_orbit();
  const LaurentPoly want = a3_expected_kclass();
  const KClass kc = kclass(q, m);
  if (auto d = poly_mismatch("orbit class", kc, want); !d.empty()) return d;
  if (auto d = poly_mismatch("stepwise route", stepwise_pushforward(q, m), want); !d.empty())
    return d;
  st.a3_kclass = kc;
  return {};
}

// ---- criterion 5: inbound-A3 coefficient table, both extraction routes ----

std::string check_a3_coefficients(SuiteState& st) {
  const Quiver q = a3_quiver();
  const OrbitVector m = a3_orbit();
  const DimVector v{2, 3, 2};
  const QuiverCoefficientTable want = a3_expected_table();
  const QuiverCoefficientTable t = quiver_coefficients(q, m, v);
  if (auto d = table_mismatch("kernel route", t, want); !d.empty()) return d;
  const KClass kc = st.a3_kclass ? *st.a3_kclass : kclass(q, m);
  const QuiverCoefficientTable o = expansion_oracle(kc, q, v);
  if (auto d = table_mismatch("expansion route", o, want); !d.empty()) return d;
  st.a3_table = t;
  return {};
}

// ---- criterion 6: inbound-A3 cohomology class, three presentations ----

std::string check_a3_cohomology(SuiteState& st) {
  const KClass kc = st.a3_kclass ? *st.a3_kclass : kclass(a3_quiver(), a3_orbit());
  const auto [lead, deg] = chern_character_leading(kc);
  if (deg != 3) return "leading degree: got " + std::to_string(deg) + " ; want 3";

  const LaurentPoly A1 = LaurentPoly::variable(Variable::chern(1, 1));
  const LaurentPoly B1 = LaurentPoly::variable(Variable::chern(2, 1));
  const LaurentPoly B2 = LaurentPoly::variable(Variable::chern(2, 2));
  const LaurentPoly B3 = LaurentPoly::variable(Variable::chern(2, 3));
  const LaurentPoly C1 = LaurentPoly::variable(Variable::chern(3, 1));
  const LaurentPoly C2 = LaurentPoly::variable(Variable::chern(3, 2));
  const LaurentPoly want_chern =
      (B1 - A1) * (B2 + C1 * C1) - C1 * (B1 * B1 + C2) + A1 * (B1 * C1 + C2) - B3;
  if (auto d = poly_mismatch("Chern-class form", to_chern_classes(lead), want_chern);
      !d.empty())
    return d;

  // Dual-difference relative-Chern assembly of the same class.
  const std::vector<Variable> e1 = bundle_roots(0, 2);
  const std::vector<Variable> e2 = bundle_roots(1, 3);
  const std::vector<Variable> e3 = bundle_roots(2, 2);
  std::vector<Variable> m2 = e1;
  m2.insert(m2.end(), e3.begin(), e3.end());
  const RelativeChernSeries rel =
      relative_chern(elementary_symmetric(m2), elementary_symmetric(e2), 3);
  const RelativeChernSeries relE1 =
      relative_chern({LaurentPoly(1)}, elementary_symmetric(e1), 1);
  const LaurentPoly rr = rel.c[2] * rel.c[1] + rel.c[2] * relE1.c[1] - rel.c[3];
  if (auto d = poly_mismatch("relative-Chern assembly", rr, lead); !d.empty()) return d;

  // Leading term as a Schur-determinant combination.
  const auto h2 = h_classes(e2, m2, 3);
  const auto h1 = h_classes(e1, {}, 1);
  const LaurentPoly schur = schur_det({2, 1}, h2) + schur_det({2}, h2) * schur_det({1}, h1);
  return poly_mismatch("Schur leading term", schur, lead);
}

// ---- criterion 7: A2 coefficient table ----

std::string check_a2_coefficients(SuiteState& st) {
  QuiverCoefficientTable want;
  want.entries[PartitionTuple{{}, {1}}] = 1;
  want.codimension = 1;
  const QuiverCoefficientTable t = quiver_coefficients(a2_quiver(), a2_orbit_111(), {2, 2});
  if (auto d = table_mismatch("table", t, want); !d.empty()) return d;
  st.a2_table = t;
  return {};
}

// ---- criterion 8: A2 rectangle sweep ----

std::string check_rectangle_sweep(SuiteState& st) {
  const Quiver q = a2_quiver();
  std::ostringstream bad;
  for (int m11 = 0; m11 <= 2; ++m11)
    for (int m12 = 0; m12 <= 2; ++m12)
      for (int m22 = 0; m22 <= 2; ++m22) {
        std::vector<std::pair<DimVector, int>> entries;
        if (m11 > 0) entries.push_back({{1, 0}, m11});
        if (m12 > 0) entries.push_back({{1, 1}, m12});
        if (m22 > 0) entries.push_back({{0, 1}, m22});
        const OrbitVector m = OrbitVector::from_entries(entries);
        const DimVector v{m11 + m12, m12 + m22};

        Partition rect;
        if (m11 > 0 && m22 > 0) rect.assign(m22, m11);
        QuiverCoefficientTable want;
        want.entries[PartitionTuple{{}, rect}] = 1;
        want.codimension = m11 * m22;

        try {
          QuiverCoefficientTable t = quiver_coefficients(q, m, v);
          if (t == want)
            st.rectangle_tables.emplace_back(std::move(t), m11 * m22);
          else
            bad << " m=(" << m11 << "," << m12 << "," << m22 << "): got " << table_str(t)
                << " want " << table_str(want) << ";";
        } catch (const std::exception& e) {
          bad << " m=(" << m11 << "," << m12 << "," << m22 << "): " << e.what() << ";";
        }
      }
  return bad.str();
}

// ---- criterion 9: property suites ----

// Sum of the distinct permutations of the exponent list over the variables.
LaurentPoly symmetrized_monomial(const std::vector<Variable>& vars, std::vector<int> exps) {
  std::sort(exps.begin(), exps.end());
  LaurentPoly sum(0);
  do {
    std::vector<std::pair<Variable, int>> fs;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (exps[i] != 0) fs.emplace_back(vars[i], exps[i]);
    sum = sum + LaurentPoly::monomial(1, Monomial::from_factors(std::move(fs)));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return sum;
}

std::string property_pushforward_equivalence() {
  std::mt19937 rng(20260814u);
  std::uniform_int_distribution<int> expdist(-2, 2);
  std::uniform_int_distribution<int> ndist(2, 4);
  for (int iter = 0; iter < 50; ++iter) {
    const int n = ndist(rng);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    const int qn = n - k;
    std::vector<Variable> roots, sig, om;
    for (int i = 1; i <= n; ++i) roots.push_back(Variable::letter('a', i));
    for (int i = 1; i <= k; ++i) sig.push_back(Variable::letter('s', i));
    for (int i = 1; i <= qn; ++i) om.push_back(Variable::letter('w', i));
    std::vector<int> se(k), we(qn);
    for (int& e : se) e = expdist(rng);
    for (int& e : we) e = expdist(rng);
    const LaurentPoly fs = symmetrized_monomial(sig, se);
    const LaurentPoly fo = symmetrized_monomial(om, we);

    const auto both = [&](const LaurentPoly& num,
                          const std::function<FactoredRational(const FactoredRational&)>& ir_route,
                          const char* label) -> std::string {
      const FactoredRational f = FactoredRational::fraction(num, {});
      const LaurentPoly via_loc =
          localization_pushforward(f, sig, om, roots).reduced().to_laurent();
      const LaurentPoly via_ir = ir_route(f).reduced().to_laurent();
      if (via_loc == via_ir) return {};
      std::ostringstream os;
      os << label << " disagree at iteration " << iter << " (n=" << n << ", k=" << k << ")";
      return os.str();
    };

    std::string d = both(
        fs * fo,
        [&](const FactoredRational& f) { return ir_pushforward_full(f, sig, om, roots); },
        "full-alphabet residues and localization");
    if (d.empty())
      d = both(
          fs, [&](const FactoredRational& f) { return ir_pushforward_S(f, sig, roots); },
          "sub-alphabet residues and localization");
    if (d.empty())
      d = both(
          fo, [&](const FactoredRational& f) { return ir_pushforward_Q(f, om, roots); },
          "quotient-alphabet residues and localization");
    if (!d.empty()) return d;
  }
  return {};
}

std::string property_pushforward_of_one() {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<Variable> roots, sig, om;
      for (int i = 1; i <= n; ++i) roots.push_back(Variable::letter('a', i));
      for (int i = 1; i <= k; ++i) sig.push_back(Variable::letter('s', i));
      for (int i = 1; i <= n - k; ++i) om.push_back(Variable::letter('w', i));
      const FactoredRational one(1);
      const LaurentPoly via_loc =
          localization_pushforward(one, sig, om, roots).reduced().to_laurent();
      const LaurentPoly via_ir =
          ir_pushforward_full(one, sig, om, roots).reduced().to_laurent();
      if (!(via_loc == LaurentPoly(1)) || !(via_ir == LaurentPoly(1))) {
        std::ostringstream os;
        os << "push-forward of 1 differs from 1 at n=" << n << ", k=" << k;
        return os.str();
      }
    }
  return {};
}

std::string property_g_identities() {
  const std::vector<std::pair<IntegerSequence, IntegerSequence>> cases = {
      {{1, 0}, {1}},        {{2, 0}, {2}},    {{2, -1}, {2}},
      {{1, 0, -1}, {1}},    {{1, 2}, {2, 2}}, {{0, 1}, {1, 1}},
      {{2, 3}, {3, 3}},     {{1, 2, 3}, {3, 3, 3}},
  };
  for (int n = 1; n <= 3; ++n)
    for (int p = 1; p <= 3; ++p) {
      if (!(g_poly(IntegerSequence{}, n, p) == LaurentPoly(1)))
        return "empty index is not the unit class";
      for (const auto& [lhs, rhs] : cases)
        if (!(g_poly(lhs, n, p) == g_poly(rhs, n, p))) {
          std::ostringstream os;
          os << "identity fails at n=" << n << ", p=" << p << " for (";
          for (int x : lhs) os << x << " ";
          os << ") vs (";
          for (int x : rhs) os << x << " ";
          os << ")";
          return os.str();
        }
    }
  return {};
}

std::string property_schur_leading() {
  const std::vector<Variable> e = bundle_roots(0, 3);
  const std::vector<Variable> b = bundle_roots(1, 3);
  const auto hh = h_classes(e, b, 4);
  const std::vector<Partition> lams = {{},     {1},       {2},  {1, 1}, {3},    {2, 1},
                                       {1, 1, 1}, {4},    {3, 1}, {2, 2}, {2, 1, 1}};
  for (const Partition& lam : lams) {
    const auto [lead, deg] = chern_character_leading(g_poly_in(lam, e, b));
    if (deg != sequence_weight(lam) || !(lead == schur_det(lam, hh))) {
      return "leading term differs from the Schur determinant at " + partition_str(lam);
    }
  }
  return {};
}

std::string property_resolution_independence(const SuiteState& st) {
  // A2, m = (1,1,1): three valid directed partitions of the support.
  {
    const Quiver q = a2_quiver();
    const OrbitVector m = a2_orbit_111();
    const DimVector v{2, 2};
    const DimVector phi11{1, 0}, phi12{1, 1}, phi22{0, 1};
    const std::vector<DimVector> support{phi11, phi12, phi22};
    const Variable a1 = Variable::groth_root(1, 1), a2v = Variable::groth_root(1, 2);
    const Variable b1 = Variable::groth_root(2, 1), b2 = Variable::groth_root(2, 2);
    const LaurentPoly want =
        LaurentPoly(1) + term(-1, {{a1, 1}, {a2v, 1}, {b1, -1}, {b2, -1}});
    const std::vector<RootPartition> partitions = {
        {{phi22}, {phi12, phi11}},
        {{phi22}, {phi12}, {phi11}},
        {{phi22, phi12}, {phi11}},
    };
    for (const RootPartition& parts : partitions) {
      const PartitionCheck chk = is_directed_partition(q, support, parts);
      if (!chk.ok) return "A2 partition unexpectedly rejected: " + chk.reason;
      const ResolutionPair rp = resolution_pair(q, m, parts);
      if (!(kclass(q, v, rp) == want))
        return "A2 class depends on the resolution pair " + rp_str(rp);
    }
  }

  // Inbound A3: the canonical partition and the split of its middle part.
  {
    const Quiver q = a3_quiver();
    const OrbitVector m = a3_orbit();
    const DimVector v{2, 3, 2};
    const DimVector phi12{1, 1, 0}, phi13{1, 1, 1}, phi22{0, 1, 0}, phi33{0, 0, 1};
    const std::vector<DimVector> support{phi12, phi13, phi22, phi33};
    const LaurentPoly want =
        st.a3_kclass ? *st.a3_kclass : kclass(q, m);
    const std::vector<RootPartition> partitions = {
        {{phi22}, {phi12, phi13}, {phi33}},
        {{phi22}, {phi12}, {phi13}, {phi33}},
    };
    for (const RootPartition& parts : partitions) {
      const PartitionCheck chk = is_directed_partition(q, support, parts);
      if (!chk.ok) return "A3 partition unexpectedly rejected: " + chk.reason;
      const ResolutionPair rp = resolution_pair(q, m, parts);
      if (!(kclass(q, v, rp) == want))
        return "A3 class depends on the resolution pair " + rp_str(rp);
    }
  }
  return {};
}

std::string property_sign_alternation(const SuiteState& st) {
  if (!st.a2_table || !st.a3_table || st.rectangle_tables.empty())
    return "earlier table checks did not run, nothing to sign-check";
  if (!sign_check(*st.a2_table, 1)) return "A2 table violates sign alternation";
  if (!sign_check(*st.a3_table, 3)) return "A3 table violates sign alternation";
  for (const auto& [t, cd] : st.rectangle_tables)
    if (!sign_check(t, cd)) return "rectangle-sweep table violates sign alternation";
  return {};
}

std::string check_properties(const SuiteState& st) {
  std::ostringstream bad;
  const std::vector<std::pair<const char*, std::function<std::string()>>> suites = {
      {"pushforward-equivalence", property_pushforward_equivalence},
      {"pushforward-of-one", property_pushforward_of_one},
      {"g-identities", property_g_identities},
      {"schur-leading", property_schur_leading},
      {"resolution-independence", [&] { return property_resolution_independence(st); }},
      {"sign-alternation", [&] { return property_sign_alternation(st); }},
  };
  for (const auto& [name, fn] : suites) {
    std::string d;
    try {
      d = fn();
    } catch (const std::exception& e) {
      d = std::string("exception: ") + e.what();
    }
    if (!d.empty()) bad << " [" << name << "] " << d << ";";
  }
  return bad.str();
}

struct Checker {
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    std::fprintf(stderr, "[verify] %s ...\n", name.c_str());
    const auto t0 = Clock::now();
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::fprintf(stderr, "[verify] %s %s (%.3f s)%s%s\n", name.c_str(),
                 detail.empty() ? "ok" : "FAILED", secs, detail.empty() ? "" : ": ",
                 detail.c_str());
    results.push_back({name, detail.empty(), secs, std::move(detail)});
  }
};

}  // namespace

std::vector<CheckResult> run_verification() {
  SuiteState st;
  Checker ck;
  ck.run("single-variable-residue", [] { return check_single_residue(); });
  ck.run("pushforward-two-routes", [] { return check_pushforward_two_routes(); });
  ck.run("a3-resolution-pair", [] { return check_a3_resolution_pair(); });
  ck.run("a3-orbit-class", [&] { return check_a3_kclass(st); });
  ck.run("a3-quiver-coefficients", [&] { return check_a3_coefficients(st); });
  ck.run("a3-cohomology-class", [&] { return check_a3_cohomology(st); });
  ck.run("a2-quiver-coefficients", [&] { return check_a2_coefficients(st); });
  ck.run("a2-rectangle-sweep", [&] { return check_rectangle_sweep(st); });
  ck.run("property-suites", [&] { return check_properties(st); });
  return ck.results;
}

std::string verification_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t npass = 0;
  for (const CheckResult& r : results) {
    if (r.pass) {
      os << "PASS " << r.name << " (" << std::fixed << std::setprecision(3) << r.seconds
         << " s)\n";
      ++npass;
    } else {
      os << "FAIL " << r.name << ":" << (r.detail.starts_with(" ") ? "" : " ") << r.detail
         << "\n";
    }
  }
  os << npass << "/" << results.size() << " checks passed\n";
  return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace quiverk
