#pragma once

// Standard monomial sets of generic complete intersections and the
// incremental construction of in(I, g) from in(I): the matrices M_i, the
// column sets S_i, the assembled generators, and the standard set F.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gin/generic.hpp"
#include "gin/groebner.hpp"
#include "gin/linalg.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/series.hpp"

namespace gin {

/// Graded standard monomials B_0, B_1, ..., each grade degrevlex-decreasing.
/// Grades past the stored top are empty.
struct StandardMonomialSet {
  int nvars = 1;
  std::vector<std::vector<Monomial>> grades;

  static StandardMonomialSet of(const MonomialIdeal& ideal, int top) {
    return {ideal.nvars(), standard_monomial_grades(ideal, top)};
  }

  const std::vector<Monomial>& grade(int i) const {
    static const std::vector<Monomial> empty;
    if (i < 0 || static_cast<std::size_t>(i) >= grades.size()) return empty;
    return grades[static_cast<std::size_t>(i)];
  }
  std::size_t count(int i) const { return grade(i).size(); }
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> c;
    for (const auto& g : grades) c.push_back(g.size());
    return c;
  }
  int top() const { return static_cast<int>(grades.size()) - 1; }
  /// Largest nonempty grade, -1 if none.
  int socle_degree() const {
    for (int i = top(); i >= 0; --i) {
      if (!grades[static_cast<std::size_t>(i)].empty()) return i;
    }
    return -1;
  }
  std::size_t total() const {
    std::size_t s = 0;
    for (const auto& g : grades) s += g.size();
    return s;
  }

  /// Every grade strictly decreasing and every degree-(i-1) divisor of a
  /// member of B_i again a member.
  bool is_valid() const {
    for (std::size_t i = 0; i < grades.size(); ++i) {
      const auto& g = grades[i];
      for (std::size_t k = 1; k < g.size(); ++k) {
        if (degrevlex_cmp(g[k - 1], g[k]) <= 0) return false;
      }
      if (i == 0) continue;
      for (const auto& m : g) {
        for (int v = 1; v <= nvars; ++v) {
          if (m[v] == 0) continue;
          const Monomial div = m / Monomial::variable(nvars, v);
          const auto& prev = grades[i - 1];
          if (std::find(prev.begin(), prev.end(), div) == prev.end()) return false;
        }
      }
    }
    return true;
  }
};

/// x_var^e * each member, keeping order.
inline std::vector<Monomial> times_power(const std::vector<Monomial>& ms, int var, int e) {
  std::vector<Monomial> out;
  out.reserve(ms.size());
  if (ms.empty()) return out;
  const Monomial p = Monomial::variable(ms.front().nvars(), var, e);
  for (const auto& m : ms) out.push_back(m * p);
  return out;
}

inline std::vector<Monomial> embed_all(const std::vector<Monomial>& ms, int nvars) {
  std::vector<Monomial> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.embed(nvars));
  return out;
}

inline bool same_set(std::vector<Monomial> a, std::vector<Monomial> b) {
  sort_decreasing(a);
  sort_decreasing(b);
  return a == b;
}

// ---------------------------------------------------------------------------
// Tilde decomposition and the structure of B(n; d_1..d_n)

struct TildeDecomposition {
  /// tilde0[i] = members of B_i with max index < n; tilde0[0] = {1}.
  std::vector<std::vector<Monomial>> tilde0;
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> c;
    for (const auto& g : tilde0) c.push_back(g.size());
    return c;
  }
};

inline TildeDecomposition tilde_decompose(const StandardMonomialSet& b) {
  TildeDecomposition td;
  for (std::size_t i = 0; i < b.grades.size(); ++i) {
    std::vector<Monomial> keep;
    for (const auto& m : b.grades[i]) {
      if (m.is_one() || m.max_index() < b.nvars) keep.push_back(m);
    }
    td.tilde0.push_back(std::move(keep));
  }
  return td;
}

struct StructureViolation {
  int clause;  // 1, 2, 3
  int grade;
};

struct StructureBReport {
  bool skipped = false;
  int delta = 0;
  int sigma = 0;
  std::vector<StructureViolation> violations;
  bool holds() const { return violations.empty(); }
};

/// The three structure clauses: B_i = tilde0_i u x_n B_{i-1} (1 <= i <= sigma),
/// B_{sigma+i} = x_n^i B_sigma (0 <= i <= delta - 2 sigma),
/// B_{delta-i} = x_n^{delta-2i} B_i (0 <= i <= sigma).
inline StructureBReport check_structure_B(const StandardMonomialSet& b, const DegreeType& t) {
  if (t.r() != t.n()) throw UsageError("check_structure_B requires r == n");
  StructureBReport rep;
  const int n = t.n();
  if (n < 2) {
    rep.skipped = true;
    return rep;
  }
  const auto prof = sigma_profile(t);
  const int delta = prof.top_delta();
  const int sigma = *prof.top_sigma();
  rep.delta = delta;
  rep.sigma = sigma;
  if (b.top() < delta) throw UsageError("check_structure_B: B must be computed through degree delta");
  const auto td = tilde_decompose(b);
  for (int i = 1; i <= sigma; ++i) {
    auto rhs = td.tilde0[static_cast<std::size_t>(i)];
    const auto shifted = times_power(b.grade(i - 1), n, 1);
    rhs.insert(rhs.end(), shifted.begin(), shifted.end());
    if (!same_set(b.grade(i), rhs)) rep.violations.push_back({1, i});
  }
  for (int i = 0; i <= delta - 2 * sigma; ++i) {
    if (!same_set(b.grade(sigma + i), times_power(b.grade(sigma), n, i))) {
      rep.violations.push_back({2, sigma + i});
    }
  }
  for (int i = 0; i <= sigma; ++i) {
    if (!same_set(b.grade(delta - i), times_power(b.grade(i), n, delta - 2 * i))) {
      rep.violations.push_back({3, delta - i});
    }
  }
  return rep;
}

struct MultipleViolation {
  int i;
  int j;
};

/// For i > j >= i*: B_{d+i} = x_n^{i-j} * (the a_{d+i} smallest monomials of B_{d+j}).
/// Checks every such pair with d + j <= delta.
inline std::vector<MultipleViolation> verify_multiples_in_ideal(const StandardMonomialSet& b, int d) {
  const int delta = b.socle_degree();
  if (d >= delta) throw UsageError("verify_multiples_in_ideal requires d < delta");
  const int istar = (delta - d) / 2;
  std::vector<MultipleViolation> bad;
  for (int j = istar; d + j <= delta; ++j) {
    for (int i = j + 1; d + i <= delta + 1; ++i) {
      const auto& big = b.grade(d + j);
      const std::size_t want = b.count(d + i);
      if (want > big.size()) {
        bad.push_back({i, j});
        continue;
      }
      std::vector<Monomial> smallest(big.end() - static_cast<std::ptrdiff_t>(want), big.end());
      if (!same_set(b.grade(d + i), times_power(smallest, b.nvars, i - j))) bad.push_back({i, j});
    }
  }
  return bad;
}

/// E_i = U_{j <= i} z^j B_{i-j} for i <= delta and E_i = z^{i-delta} E_delta
/// above, with z the last of the n+1 variables. Returns the failing grades.
inline std::vector<int> check_E_grades(const StandardMonomialSet& e, const StandardMonomialSet& b) {
  const int delta = b.socle_degree();
  const int z = e.nvars;
  std::vector<int> bad;
  for (int i = 0; i <= e.top(); ++i) {
    std::vector<Monomial> rhs;
    if (i <= delta) {
      for (int j = 0; j <= i; ++j) {
        const auto part = times_power(embed_all(b.grade(i - j), z), z, j);
        rhs.insert(rhs.end(), part.begin(), part.end());
      }
    } else {
      rhs = times_power(e.grade(delta), z, i - delta);
    }
    if (!same_set(e.grade(i), rhs)) bad.push_back(i);
  }
  return bad;
}

/// n forms in n+1 variables: in(I) and in(pi(I)) have the same minimal
/// generators once the latter are embedded in n+1 variables.
inline bool initial_matches_projection(const MonomialIdeal& in_i, const MonomialIdeal& in_j) {
  if (in_i.nvars() != in_j.nvars() + 1) throw UsageError("expected ideals in n+1 and n variables");
  return same_set(in_i.generators(), embed_all(in_j.generators(), in_i.nvars()));
}

// ---------------------------------------------------------------------------
// Incremental method

/// Row x^a in E_i (decreasing) holds the coefficients of NF(x^a g) against
/// E_{i+d} (decreasing).
struct IncrementalMatrix {
  int step = 0;
  std::vector<Monomial> rows;
  std::vector<Monomial> cols;
  DenseMatrix matrix;
};

inline IncrementalMatrix build_matrix(int i, const Polynomial& g, Reducer& reducer, const GroebnerBasis& gb,
                                      const StandardMonomialSet& e) {
  const int d = g.degree();
  if (i + d > gb.degree_cap) {
    throw UsageError("build_matrix: degree " + std::to_string(i + d) + " exceeds the basis cap " +
                     std::to_string(gb.degree_cap));
  }
  if (e.top() < i + d) throw UsageError("build_matrix: standard monomials not computed through degree i + d");
  IncrementalMatrix out;
  out.step = i;
  out.rows = e.grade(i);
  out.cols = e.grade(i + d);
  out.matrix = DenseMatrix(out.rows.size(), out.cols.size());
  const int t = i + d;
  const auto& tab = reducer.table(t);
  std::vector<std::size_t> col_of(tab.monos.size(), static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < out.cols.size(); ++c) col_of[static_cast<std::size_t>(tab.at(out.cols[c]))] = c;
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    auto acc = reducer.zero_vector(t);
    reducer.accumulate(acc, t, g, 1, &out.rows[r]);
    reducer.reduce_dense(acc, t);
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
      if (acc[idx] == 0) continue;
      const std::size_t c = col_of[idx];
      if (c == static_cast<std::size_t>(-1)) {
        throw std::logic_error("build_matrix: normal form has a term outside E");
      }
      out.matrix(r, c) = acc[idx];
    }
  }
  return out;
}

struct IncrementalStep {
  int i = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  /// 0-based columns kept by the greedy scan, in order.
  std::vector<std::size_t> kept_columns;
  /// 1-based positions inside the B_{d+i} block.
  std::vector<std::size_t> S;
  std::vector<Monomial> added;
  /// added[k] is a multiple of a monomial added at an earlier step.
  std::vector<bool> redundant;
  std::optional<std::string> finding;
};

/// S_i: the first a_i greedy columns, which must all fall in the B_{d+i}
/// block (columns 0..a_{d+i}-1). Returns nullopt when they do not.
inline std::optional<std::vector<std::size_t>> extract_S(const std::vector<std::size_t>& kept, std::size_t a_i,
                                                         std::size_t a_d_i) {
  if (kept.size() < a_i) return std::nullopt;
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < a_i; ++k) {
    if (kept[k] >= a_d_i) return std::nullopt;
    s.push_back(kept[k] + 1);
  }
  return s;
}

/// B^S for 1-based positions S.
inline std::vector<Monomial> select_positions(const std::vector<Monomial>& grade, const std::vector<std::size_t>& s) {
  std::vector<Monomial> out;
  for (std::size_t pos : s) out.push_back(grade.at(pos - 1));
  return out;
}

/// Generators of in(I, g) per the structure theorem for d < delta. `in_i` lives
/// in n+1 variables, `b` in n; z is variable n+1. The result is minimalized.
inline MonomialIdeal assemble_initial(const MonomialIdeal& in_i, const StandardMonomialSet& b,
                                      const std::vector<std::vector<std::size_t>>& s, int d) {
  const int n = b.nvars;
  const int z = n + 1;
  if (in_i.nvars() != z) throw UsageError("assemble_initial: in(I) must live in n+1 variables");
  const int delta = b.socle_degree();
  if (d >= delta) throw UsageError("assemble_initial requires d < delta");
  const int istar = (delta - d) / 2;
  if (static_cast<int>(s.size()) != istar) {
    throw UsageError("assemble_initial: expected " + std::to_string(istar) + " column sets");
  }
  auto lift = [&](int grade, int zexp) { return times_power(embed_all(b.grade(grade), z), z, zexp); };
  std::vector<Monomial> gens;
  auto push = [&](const std::vector<Monomial>& ms) { gens.insert(gens.end(), ms.begin(), ms.end()); };

  push(embed_all({b.grade(d).front()}, z));
  for (int i = 1; i <= istar; ++i) {
    push(embed_all(select_positions(b.grade(d + i), s[static_cast<std::size_t>(i - 1)]), z));
  }
  if ((delta - d) % 2 == 0) {
    for (int k = 1; k <= istar; ++k) push(lift(d + istar - k, 2 * k));
  } else {
    push(lift(d + istar + 1, 0));
    for (int k = 1; k <= istar + 1; ++k) push(lift(d + istar + 1 - k, 2 * k - 1));
  }
  for (int j = 1; j <= d; ++j) push(lift(d - j, delta - d + 2 * j));
  return in_i.with(std::move(gens));
}

/// Closed form for d >= delta: (in(I), z^{d-delta+2j} B_{delta-j} for 0 <= j <= delta).
inline MonomialIdeal assemble_initial_closed_form(const MonomialIdeal& in_i, const StandardMonomialSet& b, int d) {
  const int z = b.nvars + 1;
  const int delta = b.socle_degree();
  if (d < delta) throw UsageError("closed form requires d >= delta");
  std::vector<Monomial> gens;
  for (int j = 0; j <= delta; ++j) {
    const auto part = times_power(embed_all(b.grade(delta - j), z), z, d - delta + 2 * j);
    gens.insert(gens.end(), part.begin(), part.end());
  }
  return in_i.with(std::move(gens));
}

/// Standard monomials of (I, g) from the grade recursions, through degree
/// delta + d - 1 (one empty grade follows). Requires d < delta.
inline StandardMonomialSet build_F(const StandardMonomialSet& b, const std::vector<std::vector<std::size_t>>& s,
                                   int d) {
  const int n = b.nvars;
  const int z = n + 1;
  const int delta = b.socle_degree();
  if (d >= delta) throw UsageError("build_F requires d < delta");
  const int istar = (delta - d) / 2;
  const bool even = (delta - d) % 2 == 0;
  StandardMonomialSet f{z, {}};
  auto lifted = [&](int grade) { return embed_all(b.grade(grade), z); };
  auto Fz = [&](int grade, int zexp) { return times_power(f.grade(grade), z, zexp); };
  auto append = [](std::vector<Monomial> a, const std::vector<Monomial>& c) {
    a.insert(a.end(), c.begin(), c.end());
    sort_decreasing(a);
    return a;
  };
  auto complement = [&](int grade, const std::vector<std::size_t>& drop) {
    const auto all = lifted(grade);
    std::vector<Monomial> keep;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (std::find(drop.begin(), drop.end(), k + 1) == drop.end()) keep.push_back(all[k]);
    }
    return keep;
  };

  f.grades.push_back(lifted(0));
  for (int j = 1; j <= d - 1; ++j) f.grades.push_back(append(lifted(j), Fz(j - 1, 1)));
  f.grades.push_back(append(complement(d, {1}), Fz(d - 1, 1)));
  const int last_partial = even ? istar - 1 : istar;
  for (int i = 1; i <= last_partial; ++i) {
    f.grades.push_back(append(complement(d + i, s[static_cast<std::size_t>(i - 1)]), Fz(d + i - 1, 1)));
  }
  const int top = delta + d - 1;
  if (even) {
    for (int k = 0; d + istar + k <= top; ++k) f.grades.push_back(Fz(d + istar - 1 - k, 2 * k + 1));
  } else {
    for (int k = 1; d + istar + k <= top; ++k) f.grades.push_back(Fz(d + istar - k, 2 * k));
  }
  f.grades.emplace_back();
  return f;
}

// ---------------------------------------------------------------------------
// Driving the incremental method on a sampled instance

/// Everything the incremental method needs for a type (n+1; d_1..d_n, d):
/// I = (f_1..f_n) in n+1 variables, its basis and standard set E, the
/// projection J = pi(I) with standard set B, and g reduced modulo I.
struct IncrementalSetup {
  DegreeType base;  // (n; d_1..d_n)
  int d = 0;
  GenericInstance instance;  // type (n+1; d_1..d_n, d)
  int delta = 0;
  GroebnerBasis basis_i{};
  MonomialIdeal in_i{1};
  StandardMonomialSet e{};
  GroebnerBasis basis_j{};
  MonomialIdeal in_j{1};
  StandardMonomialSet b{};
  Polynomial g{1};
};

/// Splits a type (m; d_1..d_m) with r = m into base (m-1; d_1..d_{m-1}) and d = d_m.
inline std::pair<DegreeType, int> split_last(const DegreeType& t) {
  if (t.r() != t.n() || t.n() < 2) throw UsageError("incremental method needs a type with r == n >= 2");
  std::vector<int> head(t.degrees().begin(), t.degrees().end() - 1);
  return {DegreeType(t.n() - 1, head), t.degrees().back()};
}

namespace detail {

inline IncrementalSetup prepare(const GenericInstance& inst) {
  const auto [base, d] = split_last(inst.type);
  const int n = base.n();
  const PrimeField k = inst.field();
  IncrementalSetup s{.base = base, .d = d, .instance = inst};
  s.delta = sigma_profile(base).top_delta();
  const int top = s.delta + d;
  std::vector<Polynomial> fs(inst.forms.begin(), inst.forms.end() - 1);
  s.basis_i = groebner(fs, top, k);
  s.in_i = initial_ideal(s.basis_i);
  s.e = StandardMonomialSet::of(s.in_i, top);
  std::vector<Polynomial> js;
  for (const auto& f : fs) js.push_back(f.project(n));
  s.basis_j = groebner(js, s.delta + 1, k);
  s.in_j = initial_ideal(s.basis_j);
  s.b = StandardMonomialSet::of(s.in_j, s.delta + 1);
  s.g = normal_form(inst.forms.back(), s.basis_i);
  return s;
}

}  // namespace detail

/// Samples (n+1; d_1..d_n, d) and guards it: B must have the complete
/// intersection counts of the base type and E the counts of (n+1; d_1..d_n).
/// Resamples up to the retry cap.
inline IncrementalSetup prepare_incremental(const DegreeType& full, std::uint32_t prime, std::uint64_t seed) {
  const auto [base, d] = split_last(full);
  if (d < base.max_degree()) throw UsageError("incremental method requires d >= d_n");
  const auto ci = ci_series(base);
  const int delta = static_cast<int>(ci.bound());
  const DegreeType e_type = base.with_n(base.n() + 1);
  const auto e_expected = froberg_series(e_type, static_cast<std::size_t>(delta + d));
  GenericInstance inst = sample_ideal(full, prime, seed);
  for (int attempt = 0;; ++attempt) {
    auto s = detail::prepare(inst);
    std::optional<Divergence> div;
    TruncatedSeries b_counts(static_cast<std::size_t>(delta));
    for (int i = 0; i <= delta; ++i) b_counts[static_cast<std::size_t>(i)] = s.b.count(i);
    div = first_divergence(b_counts, ci, static_cast<std::size_t>(delta));
    if (!div) {
      TruncatedSeries e_counts(static_cast<std::size_t>(delta + d));
      for (int i = 0; i <= delta + d; ++i) e_counts[static_cast<std::size_t>(i)] = s.e.count(i);
      div = first_divergence(e_counts, e_expected, static_cast<std::size_t>(delta + d));
    }
    if (!div) return s;
    if (attempt + 1 >= kGuardRetryCap) throw GenericityError(inst, *div);
    inst = sample_ideal(full, prime, seed, inst.resample_count + 1);
  }
}

struct IncrementalResult {
  bool closed_form = false;
  int istar = 0;
  std::vector<IncrementalStep> steps;
  std::vector<std::vector<std::size_t>> S;  // S_1..S_{i*}
  MonomialIdeal assembled{1};
  std::optional<StandardMonomialSet> F;
  std::vector<std::string> findings;
};

/// Runs steps 0..i* (matrices, greedy columns, S_i) and assembles in(I, g)
/// and F. For d >= delta only the closed form is produced.
inline IncrementalResult run_incremental(const IncrementalSetup& s) {
  IncrementalResult res;
  const int d = s.d;
  if (d >= s.delta) {
    res.closed_form = true;
    res.assembled = assemble_initial_closed_form(s.in_i, s.b, d);
    return res;
  }
  res.istar = (s.delta - d) / 2;
  const PrimeField k = s.instance.field();
  Reducer reducer(s.basis_i);
  const int z = s.b.nvars + 1;
  std::vector<Monomial> added_so_far;
  for (int i = 0; i <= res.istar; ++i) {
    IncrementalStep step;
    step.i = i;
    const auto m = build_matrix(i, s.g, reducer, s.basis_i, s.e);
    step.rows = m.rows.size();
    step.cols = m.cols.size();
    step.rank = rank(m.matrix, k);
    const std::size_t a_i = s.b.count(i);
    const std::size_t a_di = s.b.count(d + i);
    if (step.rank < step.rows) {
      step.finding = "rank " + std::to_string(step.rank) + " < |E_" + std::to_string(i) + "| = " +
                     std::to_string(step.rows);
    }
    const std::vector<Monomial> block(m.cols.begin(),
                                      m.cols.begin() + static_cast<std::ptrdiff_t>(std::min(a_di, m.cols.size())));
    if (block != embed_all(s.b.grade(d + i), z)) {
      step.finding = "leading block of E_" + std::to_string(d + i) + " differs from B_" + std::to_string(d + i);
    }
    DenseMatrix work = m.matrix;
    step.kept_columns = row_reduce(work, k, step.rows);
    // Step 0 keeps one column (a_0 = 1); its position must be 1.
    const auto sel = extract_S(step.kept_columns, a_i, a_di);
    if (!sel) {
      step.finding = "first " + std::to_string(a_i) + " independent columns leave the B_" +
                     std::to_string(d + i) + " block";
    } else {
      step.S = *sel;
      for (const auto& mono : select_positions(s.b.grade(d + i), step.S)) {
        const Monomial lifted = mono.embed(z);
        const bool red = std::any_of(added_so_far.begin(), added_so_far.end(),
                                     [&](const Monomial& a) { return a.divides(lifted); });
        step.added.push_back(lifted);
        step.redundant.push_back(red);
      }
      added_so_far.insert(added_so_far.end(), step.added.begin(), step.added.end());
      if (i == 0 && step.S != std::vector<std::size_t>{1}) {
        step.finding = "step 0 did not select the largest monomial of B_d";
      }
      if (i >= 1) res.S.push_back(step.S);
    }
    if (step.finding) res.findings.push_back("step " + std::to_string(i) + ": " + *step.finding);
    res.steps.push_back(std::move(step));
  }
  if (res.findings.empty()) {
    res.assembled = assemble_initial(s.in_i, s.b, res.S, d);
    res.F = build_F(s.b, res.S, d);
  }
  return res;
}

}  // namespace gin
