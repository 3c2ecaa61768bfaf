// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gin/conjectures.hpp"
#include "gin/structure.hpp"
#include "oracles.hpp"

using namespace gin;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Result {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail << "failed: " << what << "; ";
    pass = pass && cond;
  }
};

std::vector<Monomial> mons(std::initializer_list<std::vector<int>> es) {
  std::vector<Monomial> out;
  for (const auto& e : es) out.emplace_back(std::span<const int>(e));
  return out;
}

const std::vector<std::uint64_t> kSeeds{0, 1, 2};

// ---------------------------------------------------------------------------

Result criterion1() {
  Result r;
  const auto t = DegreeType::parse("4:2,3,3,4");
  r.require(ci_series(t).to_ll() == std::vector<long long>{1, 4, 9, 14, 16, 14, 9, 4, 1}, "ci_series");
  double worst = 0;
  for (auto seed : kSeeds) {
    const auto t0 = Clock::now();
    const auto g = sample_guarded(t, kDefaultPrime, seed, 9);
    const auto b = StandardMonomialSet::of(g.data.initial, 9);
    const auto td = tilde_decompose(b);
    const auto tc = td.counts();
    r.require(b.counts() == std::vector<std::size_t>{1, 4, 9, 14, 16, 14, 9, 4, 1, 0}, "a_i counts");
    r.require(std::vector<std::size_t>(tc.begin() + 1, tc.begin() + 5) == std::vector<std::size_t>{3, 5, 5, 2},
              "a'_i counts");
    r.require(same_set(td.tilde0[1], mons({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})), "B~_1");
    r.require(same_set(td.tilde0[2], mons({{1, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}})),
              "B~_2");
    r.require(same_set(td.tilde0[3], mons({{1, 1, 1, 0}, {0, 2, 1, 0}, {1, 0, 2, 0}, {0, 1, 2, 0}, {0, 0, 3, 0}})),
              "B~_3");
    r.require(same_set(td.tilde0[4], mons({{0, 1, 3, 0}, {0, 0, 4, 0}})), "B~_4");
    r.require(same_set(b.grade(1), [&] {
                auto v = td.tilde0[1];
                v.push_back(Monomial{0, 0, 0, 1});
                return v;
              }()),
              "B_1");
    for (int i = 2; i <= 4; ++i) {
      auto v = td.tilde0[static_cast<std::size_t>(i)];
      const auto up = times_power(b.grade(i - 1), 4, 1);
      v.insert(v.end(), up.begin(), up.end());
      r.require(same_set(b.grade(i), v), "B_" + std::to_string(i) + " = B~ + x4 B");
    }
    for (int i = 0; i <= 3; ++i) {
      r.require(same_set(b.grade(8 - i), times_power(b.grade(i), 4, 8 - 2 * i)), "B_{8-i} = x4^{8-2i} B_i");
    }
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    r.require(dt < 5.0, "runtime < 5 s");
  }
  r.detail << "3 seeds, worst " << worst << " s";
  return r;
}

Result criterion2() {
  Result r;
  double worst = 0;
  for (auto seed : kSeeds) {
    const auto t0 = Clock::now();
    const auto setup = prepare_incremental(DegreeType::parse("5:2,3,3,4,5"), kDefaultPrime, seed);
    const auto res = run_incremental(setup);
    r.require(res.findings.empty(), "no findings");
    if (!res.findings.empty()) continue;
    r.require(res.steps[0].added.size() == 1 && res.steps[0].added[0] == setup.b.grade(5).front().embed(5),
              "step 0 adds the largest monomial of B_5");
    r.require(res.steps[0].added[0] == Monomial{1, 1, 1, 2, 0}, "largest of B_5 is x1x2x3x4^2");
    r.require(res.S == std::vector<std::vector<std::size_t>>{{1, 2, 3, 4}}, "S_1 = [1,4]");
    const auto direct = initial_ideal(groebner(setup.instance.forms, 13, setup.instance.field()));
    r.require(res.assembled == direct, "assembled in(I,g) == direct");
    r.require(hilbert_series(direct, 12).to_ll() ==
                  std::vector<long long>{1, 5, 14, 28, 44, 57, 62, 57, 44, 28, 14, 5, 1},
              "f-counts");
    r.require(res.F && res.F->counts() ==
                           std::vector<std::size_t>{1, 5, 14, 28, 44, 57, 62, 57, 44, 28, 14, 5, 1, 0},
              "F counts");
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    r.require(dt < 30.0, "runtime < 30 s");
  }
  r.detail << "3 seeds, worst " << worst << " s";
  return r;
}

Result criterion3() {
  Result r;
  double worst = 0;
  for (auto seed : kSeeds) {
    const auto t0 = Clock::now();
    const auto setup = prepare_incremental(DegreeType::parse("6:2,3,3,4,5,5"), kDefaultPrime, seed);
    const auto res = run_incremental(setup);
    r.require(res.findings.empty(), "no findings");
    if (res.steps.size() < 2) continue;
    r.require(res.steps[0].added == std::vector<Monomial>{Monomial{0, 2, 1, 2, 0, 0}}, "step 0 adds x2^2x3x4^2");
    const auto& s1 = res.steps[1];
    r.require(s1.S == std::vector<std::size_t>{1, 2, 3, 4, 6}, "S_1 = [1,4] u {6}");
    r.require(s1.redundant == std::vector<bool>{false, false, false, false, true}, "position 6 flagged redundant");
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    r.require(dt < 180.0, "runtime < 3 min");
  }
  r.detail << "3 seeds, worst " << worst << " s";
  return r;
}

// Grid shared by criteria 4, 5, 7: base (n; d_1..d_n) with n <= 4 plus d, all d < delta.
struct GridEntry {
  std::string type;
  std::uint64_t seed;
};

std::vector<GridEntry> grid() {
  const std::vector<std::string> types{
      "3:3,3,3", "3:3,4,4", "3:4,4,4", "3:4,4,5", "4:2,2,2,2", "4:2,2,3,3", "4:2,3,3,3",
      "4:2,3,3,4", "4:3,3,3,3", "4:3,3,3,4", "4:3,3,3,5", "4:2,3,4,4", "4:2,3,4,5", "5:2,2,2,2,2",
      "5:2,2,2,2,3", "5:2,2,2,3,3", "5:2,2,2,3,4", "5:2,3,3,4,4", "5:2,3,3,4,5"};
  std::vector<GridEntry> g;
  for (const auto& t : types) {
    for (std::uint64_t seed : {0ull, 1ull}) g.push_back({t, seed});
  }
  return g;
}

struct GridRun {
  GridEntry entry;
  IncrementalSetup setup;
  IncrementalResult result;
  MonomialIdeal direct{1};
};

std::vector<GridRun> run_grid() {
  std::vector<GridRun> runs;
  for (const auto& e : grid()) {
    auto setup = prepare_incremental(DegreeType::parse(e.type), kDefaultPrime, e.seed);
    auto res = run_incremental(setup);
    const int top = setup.delta + setup.d;
    auto direct = initial_ideal(groebner(setup.instance.forms, top, setup.instance.field()));
    runs.push_back({e, std::move(setup), std::move(res), std::move(direct)});
  }
  return runs;
}

Result criterion4(const std::vector<GridRun>& runs) {
  Result r;
  std::size_t checked = 0;
  for (const auto& g : runs) {
    const std::string tag = g.entry.type + "@" + std::to_string(g.entry.seed);
    r.require(g.setup.d < g.setup.delta, tag + " has d < delta");
    r.require(g.setup.base.n() <= 4 && g.setup.instance.type.max_degree() <= 5, tag + " within n <= 4, degrees <= 5");
    r.require(g.result.findings.empty(), tag + " no findings");
    if (!g.result.findings.empty() || !g.result.F) continue;
    r.require(g.result.assembled == g.direct, tag + " assemble_initial == direct");
    const int top = g.setup.delta + g.setup.d;
    const auto fd = StandardMonomialSet::of(g.direct, top);
    bool f_ok = true;
    for (int i = 0; i <= top; ++i) f_ok = f_ok && same_set(g.result.F->grade(i), fd.grade(i));
    r.require(f_ok, tag + " build_F == direct standard monomials");
    ++checked;
  }
  r.require(checked >= 20, "at least 20 pairs");
  r.detail << checked << " (type, seed) pairs";
  return r;
}

Result criterion5(const std::vector<GridRun>& runs) {
  Result r;
  std::size_t checked = 0;
  for (const auto& g : runs) {
    const std::string tag = g.entry.type + "@" + std::to_string(g.entry.seed);
    // B of the base type (guarded inside prepare_incremental).
    if (g.setup.base.n() >= 2) {
      r.require(check_structure_B(g.setup.b, g.setup.base).holds(), tag + " base B");
      ++checked;
    }
    // Standard monomials of the full r = n instance, guarded against its CI series.
    const auto full = g.setup.instance.type;
    const auto ci = ci_series(full);
    const auto hs = hilbert_series(g.direct, ci.bound());
    r.require(!first_divergence(hs, ci, ci.bound()), tag + " full instance is generic");
    const auto f = StandardMonomialSet::of(g.direct, static_cast<int>(ci.bound()) + 1);
    r.require(check_structure_B(f, full).holds(), tag + " full B");
    ++checked;
  }
  r.detail << checked << " guarded r = n instances, three structure clauses";
  return r;
}

Result criterion6() {
  Result r;
  std::size_t checks = 0, violations = 0, oor = 0;
  auto tally = [&](const ConjectureReport& rep) {
    ++checks;
    if (rep.verdict == Verdict::violated) {
      ++violations;
      r.require(false, rep.conjecture + " on " + rep.type.to_string() + " seed " + std::to_string(rep.seed));
    }
    if (rep.verdict == Verdict::out_of_regime) ++oor;
  };
  // Complete intersections with n <= 3 or the sigma condition.
  const std::vector<std::string> ci_types{"2:2,2", "2:3,4", "3:2,2,2", "3:2,3,4", "3:3,3,3",
                                          "3:2,2,5", "4:2,2,2,2", "4:2,3,3,4", "5:2,3,3,4,5"};
  for (const auto& t : ci_types) {
    const auto dt = DegreeType::parse(t);
    r.require(dt.n() <= 3 || condition1_check(dt).holds, t + " in regime");
    for (std::uint64_t seed : {0ull, 1ull}) {
      const CheckOptions opt{kDefaultPrime, seed, std::nullopt, false};
      tally(run_pardue_e(dt, opt));
      tally(run_pardue_c(dt, opt));
    }
  }
  struct F {
    std::string type;
    std::optional<std::size_t> bound;
  };
  const std::vector<F> froberg_types{{"4:2,2,2,2,2", {}}, {"3:2,2,2,2", {}}, {"2:2,2,2", {}},     {"4:2,3,4,5,6", {}},
                                     {"3:2", 6},          {"4:2,3", 6},      {"5:2,2,3", 6}};
  for (const auto& f : froberg_types) {
    const auto dt = DegreeType::parse(f.type);
    r.require(dt.r() <= dt.n() || dt.n() <= 3 || condition1_check(dt).holds, f.type + " in regime");
    for (std::uint64_t seed : {0ull, 1ull}) {
      const auto rep = check_froberg(dt, kDefaultPrime, seed, f.bound);
      tally(rep);
      if (f.type == "4:2,2,2,2,2") r.require(rep.hf_computed == std::vector<BigInt>{1, 4, 5, 0}, "HF [1,4,5,0]");
    }
  }
  r.require(checks >= 50, "at least 50 checks");
  r.require(oor == 0, "no out-of-regime verdicts");
  r.detail << checks << " instance checks, " << violations << " violations";
  return r;
}

Result criterion7(const std::vector<GridRun>& runs) {
  Result r;
  std::size_t checked = 0;
  for (const auto& g : runs) {
    const std::string tag = g.entry.type + "@" + std::to_string(g.entry.seed);
    // The basis of I in n+1 variables must be complete for the comparison to
    // cover every generator.
    const auto fs = std::vector<Polynomial>(g.setup.instance.forms.begin(), g.setup.instance.forms.end() - 1);
    const auto gb = groebner(fs, g.setup.delta + g.setup.d, g.setup.instance.field());
    r.require(gb.saturated, tag + " basis of I complete below the cap");
    r.require(initial_matches_projection(initial_ideal(gb), g.setup.in_j), tag + " in(I) == in(pi(I))");
    ++checked;
  }
  r.require(checked >= 10, "at least 10 instances");
  r.detail << checked << " guarded instances of type (n+1; d_1..d_n)";
  return r;
}

Result criterion8() {
  Result r;
  std::mt19937_64 rng(2024);
  constexpr int kCases = 1000;

  // Series: ceiling idempotence.
  for (int k = 0; k < kCases; ++k) {
    const std::size_t b = 1 + rng() % 12;
    TruncatedSeries s(b);
    for (std::size_t i = 0; i <= b; ++i) s[i] = static_cast<long long>(rng() % 41) - 20;
    r.require(ceiling(ceiling(s)) == ceiling(s), "ceiling idempotence");
  }
  // Series: CI symmetry and unimodality.
  for (int k = 0; k < kCases; ++k) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<int> ds;
    for (int i = 0; i < n; ++i) ds.push_back(1 + static_cast<int>(rng() % 6));
    const auto s = ci_series(DegreeType(n, ds));
    const std::size_t delta = s.bound();
    for (std::size_t i = 0; i <= delta; ++i) {
      r.require(s[i] == s[delta - i], "CI symmetry");
      if (i >= 1 && 2 * i <= delta) r.require(s[i] >= s[i - 1], "CI unimodality");
    }
  }
  // Order: totality, multiplicativity, degree refinement.
  auto random_mono = [&](int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (auto& x : e) x = static_cast<int>(rng() % 5);
    return Monomial(std::span<const int>(e));
  };
  for (int k = 0; k < kCases; ++k) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto a = random_mono(n), b = random_mono(n), c = random_mono(n);
    const auto ab = degrevlex_cmp(a, b);
    r.require((ab == 0) == (a == b), "order totality");
    r.require(degrevlex_cmp(b, a) == (0 <=> ab), "order antisymmetry");
    r.require(degrevlex_cmp(a * c, b * c) == ab, "order multiplicativity");
    if (a.degree() != b.degree()) r.require(ab == (a.degree() <=> b.degree()), "degree refinement");
  }
  // Algebra: normal form idempotence/linearity and HF vs the Macaulay oracle.
  auto random_form = [&](int n, int d, const PrimeField& f) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(n, d)) {
      if (rng() % 2) terms.push_back({static_cast<Coeff>(1 + rng() % (f.p() - 1)), m});
    }
    if (terms.empty()) terms.push_back({1, monomials_of_degree(n, d).front()});
    return Polynomial::from_terms(n, std::move(terms), f);
  };
  for (int k = 0; k < kCases; ++k) {
    const PrimeField field(k % 3 == 0 ? 7u : kDefaultPrime);
    const int n = 1 + static_cast<int>(rng() % 3);
    const int nr = 1 + static_cast<int>(rng() % 3);
    std::vector<Polynomial> gens;
    for (int i = 0; i < nr; ++i) gens.push_back(random_form(n, 1 + static_cast<int>(rng() % 3), field));
    const int cap = 6;
    const auto gb = groebner(gens, cap, field);
    const auto in = initial_ideal(gb);
    for (int t = 0; t <= cap; ++t) {
      r.require(static_cast<std::int64_t>(hilbert_function(in, t)) == oracle::macaulay_hf(gens, n, t, field.p()),
                "HF vs Macaulay oracle");
    }
    const int d1 = 1 + static_cast<int>(rng() % cap), d2 = 1 + static_cast<int>(rng() % cap);
    const auto f = random_form(n, d1, field), g = random_form(n, d2, field);
    const auto nf = normal_form(f, gb);
    r.require(normal_form(nf, gb) == nf, "NF idempotence");
    const Coeff a = static_cast<Coeff>(rng() % field.p()), b = static_cast<Coeff>(rng() % field.p());
    r.require(normal_form(f.linear_combination(a, g, b, field), gb) ==
                  nf.linear_combination(a, normal_form(g, gb), b, field),
              "NF linearity");
  }
  r.detail << kCases << " randomized cases per property";
  return r;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::string& name, const std::function<Result()>& fn) {
    const auto t0 = Clock::now();
    Result res;
    try {
      res = fn();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail << "exception: " << e.what();
    }
    if (!res.pass) ++failures;
    std::cout << (res.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << res.detail.str()
              << ", " << seconds_since(t0) << " s)" << std::endl;
  };
  report(1, "B(4;2,3,3,4) counts, tilde counts and grade sets", criterion1);
  report(2, "incremental trace of (5;2,3,3,4,5)", criterion2);
  report(3, "incremental trace of (6;2,3,3,4,5,5), redundant column", criterion3);
  std::vector<GridRun> runs;
  std::string grid_error;
  try {
    runs = run_grid();
  } catch (const std::exception& e) {
    grid_error = e.what();
  }
  auto grid_guard = [&](std::function<Result(const std::vector<GridRun>&)> fn) {
    return [&, fn] {
      if (!grid_error.empty()) throw std::runtime_error("grid setup: " + grid_error);
      return fn(runs);
    };
  };
  report(4, "assemble_initial and build_F against direct bases", grid_guard(criterion4));
  report(5, "structure of B on the grid", grid_guard(criterion5));
  report(6, "conjecture regression in proven and covered regimes", criterion6);
  report(7, "in(I) equals in(pi(I)) for n forms in n+1 variables", grid_guard(criterion7));
  report(8, "series, order, normal form and Hilbert function invariants", criterion8);
  return failures;
}
