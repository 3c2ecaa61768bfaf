#pragma once

// Predicates on initial ideals of generic instances: property P, almost
// reverse lexicographic, semi-regularity of x_n, ..., x_1, the ceiling
// Hilbert series, and regular sequences. Each check yields a report whose
// witnesses can be re-tested on their own.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gin/generic.hpp"
#include "gin/groebner.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/series.hpp"
#include "gin/structure.hpp"

namespace gin {

enum class Verdict { holds, violated, out_of_regime };
enum class Regime { known_proven, covered, open };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::out_of_regime: return "out-of-regime-note";
  }
  return "?";
}

inline std::string to_string(Regime r) {
  switch (r) {
    case Regime::known_proven: return "known-proven";
    case Regime::covered: return "covered";
    case Regime::open: return "open";
  }
  return "?";
}

/// A violating monomial, or a degree where two Hilbert functions differ.
/// `index` is s for the semi-regular check and the clause number for the
/// structure-b check, 0 otherwise.
struct Witness {
  std::optional<Monomial> monomial;
  std::optional<std::size_t> degree;
  BigInt computed = 0;
  BigInt expected = 0;
  int index = 0;

  static Witness at_monomial(const Monomial& m) { return {m, std::nullopt, 0, 0, 0}; }
  static Witness at_degree(std::size_t t, BigInt computed, BigInt expected, int index = 0) {
    return {std::nullopt, t, std::move(computed), std::move(expected), index};
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConjectureReport {
  std::string conjecture;
  DegreeType type{1, {1}};
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::uint64_t resample_count = 0;
  Verdict verdict = Verdict::holds;
  Regime regime = Regime::open;
  std::vector<Witness> witnesses;
  std::vector<BigInt> hf_computed;
  std::vector<BigInt> hf_expected;
  std::string note;

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

inline int max_index(const Monomial& m) { return m.max_index(); }

// ---------------------------------------------------------------------------
// Monomial-ideal predicates

/// x^mu with m = max(x^mu) >= 2: every degree-|mu| monomial in x_1..x_{m-1}
/// lies in I. Generators with m = 1 pass vacuously.
inline bool satisfies_property_P(const MonomialIdeal& ideal, const Monomial& mu) {
  if (mu.is_one()) return true;
  const int m = mu.max_index();
  if (m < 2) return true;
  for (const auto& cand : monomials_of_degree(ideal.nvars(), mu.degree(), m - 1)) {
    if (!ideal.contains(cand)) return false;
  }
  return true;
}

/// Every same-degree monomial greater than x^mu lies in I.
inline bool satisfies_almost_revlex(const MonomialIdeal& ideal, const Monomial& mu) {
  for (const auto& cand : monomials_of_degree(ideal.nvars(), mu.degree())) {
    if (degrevlex_cmp(cand, mu) <= 0) break;
    if (!ideal.contains(cand)) return false;
  }
  return true;
}

inline ConjectureReport check_property_P(const MonomialIdeal& ideal) {
  ConjectureReport rep;
  rep.conjecture = "pardue-e";
  for (const auto& g : ideal.generators()) {
    if (!satisfies_property_P(ideal, g)) rep.witnesses.push_back(Witness::at_monomial(g));
  }
  rep.verdict = rep.witnesses.empty() ? Verdict::holds : Verdict::violated;
  return rep;
}

inline ConjectureReport check_almost_revlex(const MonomialIdeal& ideal) {
  ConjectureReport rep;
  rep.conjecture = "moreno";
  for (const auto& g : ideal.generators()) {
    if (!satisfies_almost_revlex(ideal, g)) rep.witnesses.push_back(Witness::at_monomial(g));
  }
  rep.verdict = rep.witnesses.empty() ? Verdict::holds : Verdict::violated;
  return rep;
}

// ---------------------------------------------------------------------------
// Regimes

/// Froberg's series: r <= n, n <= 3, quadrics with n <= 11 and cubics with
/// n <= 8 are known; the sigma condition is covered by the partial result.
inline Regime froberg_regime(const DegreeType& t) {
  const auto& ds = t.degrees();
  const bool all2 = std::all_of(ds.begin(), ds.end(), [](int d) { return d == 2; });
  const bool all3 = std::all_of(ds.begin(), ds.end(), [](int d) { return d == 3; });
  if (t.r() <= t.n() || t.n() <= 3 || (all2 && t.n() <= 11) || (all3 && t.n() <= 8)) {
    return Regime::known_proven;
  }
  if (condition1_check(t).holds) return Regime::covered;
  return Regime::open;
}

/// Property P and semi-regularity of the variables (r = n): n <= 2 known,
/// n = 3 and the sigma condition covered.
inline Regime pardue_regime(const DegreeType& t) {
  if (t.n() <= 2) return Regime::known_proven;
  if (t.n() == 3 || condition1_check(t).holds) return Regime::covered;
  return Regime::open;
}

/// Almost revlex (r = n): known for n <= 4 and when
/// d_i >= d_1 + ... + d_{i-1} - i - 1 for every i.
inline Regime moreno_regime(const DegreeType& t) {
  if (t.n() <= 4) return Regime::known_proven;
  int prefix = 0;
  bool cg = true;
  for (int i = 1; i <= t.r(); ++i) {
    if (i >= 2) cg = cg && t.degree(i) >= prefix - i - 1;
    prefix += t.degree(i);
  }
  return cg ? Regime::known_proven : Regime::open;
}

// ---------------------------------------------------------------------------
// Hilbert-series predicates

/// Hilbert series of A / (x_n, ..., x_{n-s+1}) through `bound`, read off the
/// initial ideal: the degrevlex initial ideal of I + (x_n) is in(I) + (x_n).
inline TruncatedSeries quotient_by_last_variables(const MonomialIdeal& in, int s, std::size_t bound) {
  const int keep = in.nvars() - s;
  if (keep <= 0) {
    TruncatedSeries one(bound);
    one[0] = in.contains(Monomial(in.nvars())) ? 0 : 1;
    return one;
  }
  return hilbert_series(in.project(keep), bound);
}

/// Same series via a fresh basis of I + (x_n, ..., x_{n-s+1}).
inline TruncatedSeries quotient_by_last_variables_direct(const GenericInstance& inst, int s, std::size_t bound) {
  const int n = inst.nvars();
  auto gens = inst.forms;
  for (int v = n; v > n - s; --v) gens.push_back(Polynomial::monomial(Monomial::variable(n, v)));
  const auto gb = groebner(gens, static_cast<int>(bound), inst.field());
  return hilbert_series(initial_ideal(gb), bound);
}

/// x_n, x_{n-1}, ..., x_1 semi-regular on A = R/I: for every s the quotient
/// series equals ceil((1 - z)^s HS_A).
inline ConjectureReport check_semi_regular_variables(const GenericInstance& inst, const InstanceData& data,
                                                     std::size_t bound, bool verify = false) {
  ConjectureReport rep;
  rep.conjecture = "pardue-c";
  rep.type = inst.type;
  rep.prime = inst.prime;
  rep.seed = inst.seed;
  rep.resample_count = inst.resample_count;
  rep.regime = pardue_regime(inst.type);
  if (inst.type.r() != inst.type.n()) {
    rep.verdict = Verdict::out_of_regime;
    rep.note = "semi-regularity of the variables is checked for r == n only";
    return rep;
  }
  if (data.hilbert.bound() < bound) throw UsageError("instance data computed below the requested bound");
  TruncatedSeries hs(bound);
  for (std::size_t t = 0; t <= bound; ++t) hs[t] = data.hilbert[t];
  const auto one_minus_z = TruncatedSeries::one_minus_power(bound, 1);
  TruncatedSeries factor = TruncatedSeries::from_ints(bound, {1});
  for (int s = 1; s <= inst.nvars(); ++s) {
    factor = mul_truncated(factor, one_minus_z);
    const auto expected = ceiling(mul_truncated(factor, hs));
    const auto got = quotient_by_last_variables(data.initial, s, bound);
    if (auto div = first_divergence(got, expected, bound)) {
      rep.witnesses.push_back(Witness::at_degree(div->degree, div->computed, div->expected, s));
    }
    if (verify) {
      const auto direct = quotient_by_last_variables_direct(inst, s, bound);
      if (auto div = first_divergence(direct, got, bound)) {
        rep.witnesses.push_back(Witness::at_degree(div->degree, div->computed, div->expected, s));
        rep.note = "projection route disagrees with a direct basis of I + (x_n..x_{n-s+1})";
      }
    }
  }
  rep.verdict = rep.witnesses.empty() ? Verdict::holds : Verdict::violated;
  return rep;
}

/// f_1..f_r regular on the polynomial ring: HS of R/I equals
/// prod (1 - z^{d_i}) / (1 - z)^n with no ceiling.
inline bool check_regular_sequence(const GenericInstance& inst, std::size_t bound) {
  if (inst.forms.empty()) return true;
  if (inst.type.r() > inst.type.n()) throw UsageError("check_regular_sequence requires r <= n");
  TruncatedSeries ring = TruncatedSeries::from_ints(bound, {1});
  for (int i = 0; i < inst.nvars(); ++i) ring = mul_truncated(ring, TruncatedSeries::geometric(bound));
  const auto expected = times_numerator(ring, inst.type.degrees());
  const auto data = analyze(inst, bound);
  return !first_divergence(data.hilbert, expected, bound);
}

inline std::vector<BigInt> prefix(const TruncatedSeries& s, std::size_t bound) {
  return {s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(bound + 1)};
}

/// Conjectured bound: socle degree + 1 for Artinian types; non-Artinian
/// types need an explicit bound.
inline std::size_t resolve_bound(const DegreeType& t, std::optional<std::size_t> bound) {
  if (bound) return *bound;
  if (auto b = artinian_bound(t)) return *b;
  throw UsageError("type " + t.to_string() + " is not Artinian (r < n); pass an explicit bound");
}

/// Samples a guarded instance and compares its Hilbert function with the
/// ceiling series through `bound`.
inline ConjectureReport check_froberg(const DegreeType& t, std::uint32_t prime, std::uint64_t seed,
                                      std::optional<std::size_t> bound_opt = std::nullopt) {
  const std::size_t bound = resolve_bound(t, bound_opt);
  const auto expected = froberg_series(t, bound);
  auto out = genericity_guard(sample_ideal(t, prime, seed), expected, bound);
  ConjectureReport rep;
  rep.conjecture = "froberg";
  rep.type = t;
  rep.prime = prime;
  rep.seed = seed;
  rep.resample_count = out.instance.resample_count;
  rep.regime = froberg_regime(t);
  rep.hf_computed = prefix(out.data.hilbert, bound);
  rep.hf_expected = prefix(expected, bound);
  if (out.finding) {
    rep.witnesses.push_back(Witness::at_degree(out.finding->degree, out.finding->computed, out.finding->expected, 0));
  }
  rep.verdict = rep.witnesses.empty() ? Verdict::holds : Verdict::violated;
  return rep;
}

// ---------------------------------------------------------------------------
// Instance-level drivers used by the CLI and batch runs

struct CheckOptions {
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::optional<std::size_t> bound;
  bool verify = false;
};

inline void fill_provenance(ConjectureReport& rep, const GenericInstance& inst) {
  rep.type = inst.type;
  rep.prime = inst.prime;
  rep.seed = inst.seed;
  rep.resample_count = inst.resample_count;
}

/// Guarded r = n instance with its data through socle + 1.
inline GuardOutcome sample_complete_intersection(const DegreeType& t, const CheckOptions& opt) {
  const std::size_t bound = resolve_bound(t, opt.bound);
  return sample_guarded(t, opt.prime, opt.seed, bound);
}

inline ConjectureReport out_of_regime(const std::string& name, const DegreeType& t, const CheckOptions& opt,
                                      const std::string& why) {
  ConjectureReport rep;
  rep.conjecture = name;
  rep.type = t;
  rep.prime = opt.prime;
  rep.seed = opt.seed;
  rep.verdict = Verdict::out_of_regime;
  rep.note = why;
  return rep;
}

inline void attach_hilbert(ConjectureReport& rep, const GuardOutcome& g, const DegreeType& t) {
  const std::size_t b = g.data.hilbert.bound();
  rep.hf_computed = prefix(g.data.hilbert, b);
  rep.hf_expected = prefix(froberg_series(t, b), b);
}

inline ConjectureReport run_pardue_e(const DegreeType& t, const CheckOptions& opt) {
  if (t.r() != t.n()) return out_of_regime("pardue-e", t, opt, "property P is stated for r == n");
  auto g = sample_complete_intersection(t, opt);
  auto rep = check_property_P(g.data.initial);
  fill_provenance(rep, g.instance);
  rep.regime = pardue_regime(t);
  attach_hilbert(rep, g, t);
  return rep;
}

inline ConjectureReport run_moreno(const DegreeType& t, const CheckOptions& opt) {
  if (t.r() != t.n()) return out_of_regime("moreno", t, opt, "almost revlex is stated for r == n");
  auto g = sample_complete_intersection(t, opt);
  auto rep = check_almost_revlex(g.data.initial);
  fill_provenance(rep, g.instance);
  rep.regime = moreno_regime(t);
  attach_hilbert(rep, g, t);
  return rep;
}

inline ConjectureReport run_pardue_c(const DegreeType& t, const CheckOptions& opt) {
  if (t.r() != t.n()) return out_of_regime("pardue-c", t, opt, "semi-regularity of the variables is stated for r == n");
  auto g = sample_complete_intersection(t, opt);
  auto rep = check_semi_regular_variables(g.instance, g.data, g.data.hilbert.bound(), opt.verify);
  attach_hilbert(rep, g, t);
  return rep;
}

inline ConjectureReport run_structure_b(const DegreeType& t, const CheckOptions& opt) {
  if (t.r() != t.n()) return out_of_regime("structure-b", t, opt, "the structure of B is stated for r == n");
  auto g = sample_complete_intersection(t, opt);
  ConjectureReport rep;
  rep.conjecture = "structure-b";
  fill_provenance(rep, g.instance);
  rep.regime = Regime::covered;
  attach_hilbert(rep, g, t);
  const auto b = StandardMonomialSet::of(g.data.initial, static_cast<int>(g.data.hilbert.bound()));
  const auto sb = check_structure_B(b, t);
  if (sb.skipped) {
    rep.verdict = Verdict::out_of_regime;
    rep.note = "sigma is undefined for n = 1";
    return rep;
  }
  for (const auto& v : sb.violations) {
    rep.witnesses.push_back(Witness::at_degree(static_cast<std::size_t>(v.grade), 0, 0, v.clause));
  }
  rep.verdict = rep.witnesses.empty() ? Verdict::holds : Verdict::violated;
  return rep;
}

/// Compares the incremental construction with a direct basis of (I, g): the
/// assembled initial ideal and (for d < delta) F. Witnesses are generators in
/// exactly one of the two ideals, or grades where F differs.
inline ConjectureReport run_structure_f(const DegreeType& t, const CheckOptions& opt) {
  if (t.r() != t.n() || t.n() < 2) {
    return out_of_regime("structure-f", t, opt, "the incremental method needs r == n >= 2");
  }
  const auto [base, d] = split_last(t);
  if (d < base.max_degree()) return out_of_regime("structure-f", t, opt, "requires d_1 <= ... <= d_n <= d");
  const auto setup = prepare_incremental(t, opt.prime, opt.seed);
  const auto res = run_incremental(setup);
  ConjectureReport rep;
  rep.conjecture = "structure-f";
  fill_provenance(rep, setup.instance);
  rep.regime = Regime::covered;
  if (!res.findings.empty()) {
    rep.verdict = Verdict::violated;
    for (const auto& f : res.findings) rep.note += (rep.note.empty() ? "" : "; ") + f;
    return rep;
  }
  const int top = setup.delta + d;
  const auto gb = groebner(setup.instance.forms, top, setup.instance.field());
  const auto direct = initial_ideal(gb);
  for (const auto& m : res.assembled.generators()) {
    if (std::find(direct.generators().begin(), direct.generators().end(), m) == direct.generators().end()) {
      rep.witnesses.push_back(Witness::at_monomial(m));
    }
  }
  for (const auto& m : direct.generators()) {
    if (std::find(res.assembled.generators().begin(), res.assembled.generators().end(), m) ==
        res.assembled.generators().end()) {
      rep.witnesses.push_back(Witness::at_monomial(m));
    }
  }
  const auto hs = hilbert_series(direct, static_cast<std::size_t>(top));
  rep.hf_computed = prefix(hs, static_cast<std::size_t>(top));
  rep.hf_expected = prefix(froberg_series(t, static_cast<std::size_t>(top)), static_cast<std::size_t>(top));
  if (res.F) {
    const auto fd = StandardMonomialSet::of(direct, top);
    for (int i = 0; i <= top; ++i) {
      if (res.F->grade(i) != fd.grade(i)) {
        rep.witnesses.push_back(Witness::at_degree(static_cast<std::size_t>(i), res.F->count(i), fd.count(i), 0));
      }
    }
  } else {
    rep.note = "d >= delta: closed form, no F recursion";
  }
  rep.verdict = rep.witnesses.empty() ? Verdict::holds : Verdict::violated;
  return rep;
}

inline ConjectureReport run_froberg(const DegreeType& t, const CheckOptions& opt) {
  return check_froberg(t, opt.prime, opt.seed, opt.bound);
}

inline const std::vector<std::string>& conjecture_names() {
  static const std::vector<std::string> names{"froberg", "pardue-e", "pardue-c", "moreno", "structure-b", "structure-f"};
  return names;
}

inline ConjectureReport run_check(const std::string& name, const DegreeType& t, const CheckOptions& opt) {
  if (name == "froberg") return run_froberg(t, opt);
  if (name == "pardue-e") return run_pardue_e(t, opt);
  if (name == "pardue-c") return run_pardue_c(t, opt);
  if (name == "moreno") return run_moreno(t, opt);
  if (name == "structure-b") return run_structure_b(t, opt);
  if (name == "structure-f") return run_structure_f(t, opt);
  throw UsageError("unknown conjecture '" + name + "'");
}

}  // namespace gin
