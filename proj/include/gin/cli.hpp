#pragma once

// Command implementations behind the gin executable. Each command renders
// into a string and returns an exit code, so tests can drive them without a
// subprocess.
//
// Exit codes: 0 ok, 1 at least one violated verdict, 2 usage or runtime error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gin/conjectures.hpp"
#include "gin/json.hpp"
#include "gin/structure.hpp"

namespace gin::cli {

enum class Format { text, json };

struct RunConfig {
  std::string command;
  std::string conjecture;  // for `check`
  std::string type;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::optional<std::size_t> bound;
  Format format = Format::text;
  bool trace = false;
  bool verify = false;
  unsigned jobs = 1;
};

struct Outcome {
  int exit_code = 0;
  std::string out;
};

inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

// ---------------------------------------------------------------------------
// Text helpers

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

template <class T>
std::string list(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

inline std::string monomial_list(const std::vector<Monomial>& ms) {
  std::vector<std::string> parts;
  for (const auto& m : ms) parts.push_back(m.to_string());
  return join(parts);
}

/// Generators grouped by degree (ascending), each group decreasing.
inline std::string generator_listing(const MonomialIdeal& ideal) {
  std::ostringstream os;
  auto gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return degrevlex_cmp(a, b) > 0;
  });
  int cur = -1;
  for (const auto& g : gens) {
    if (g.degree() != cur) {
      if (cur >= 0) os << '\n';
      cur = g.degree();
      os << "  deg " << cur << ": ";
    } else {
      os << ", ";
    }
    os << g.to_string();
  }
  if (cur >= 0) os << '\n';
  return os.str();
}

/// Two-row table "i | a_i" in the style of the worked examples.
inline std::string count_table(const std::string& label, const std::vector<std::size_t>& counts) {
  std::ostringstream head, body;
  head << "  i    |";
  body << "  " << label;
  for (std::size_t k = label.size(); k < 5; ++k) body << ' ';
  body << '|';
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto w = std::max(std::to_string(i).size(), std::to_string(counts[i]).size()) + 1;
    auto pad = [w](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
    head << pad(std::to_string(i));
    body << pad(std::to_string(counts[i]));
  }
  return head.str() + '\n' + body.str() + '\n';
}

inline std::string series_text(const TruncatedSeries& s) { return list(s.coeffs()); }

inline DegreeType parse_type(const RunConfig& cfg) {
  if (cfg.type.empty()) throw UsageError("--type is required");
  return DegreeType::parse(cfg.type);
}

// ---------------------------------------------------------------------------
// series

inline Outcome cmd_series(const RunConfig& cfg) {
  const auto t = parse_type(cfg);
  const std::size_t bound = cfg.bound.value_or(default_bound(t));
  TruncatedSeries raw = TruncatedSeries::from_ints(bound, {1});
  for (int i = 0; i < t.n(); ++i) raw = mul_truncated(raw, TruncatedSeries::geometric(bound));
  raw = times_numerator(raw, t.degrees());
  const auto fs = ceiling(raw);
  std::optional<std::size_t> cut;
  for (std::size_t i = 0; i <= bound; ++i) {
    if (raw[i] <= 0) {
      cut = i;
      break;
    }
  }

  std::optional<TruncatedSeries> ci;
  std::optional<SigmaProfile> prof;
  std::optional<Condition1Report> c1;
  if (t.r() == t.n()) {
    ci = ci_series(t);
    prof = sigma_profile(t);
    c1 = condition1_check(t);
  }

  Outcome o;
  if (cfg.format == Format::json) {
    Json j{{"type", t.to_string()}, {"bound", bound}, {"froberg", series_to_json(fs)}, {"product", series_to_json(raw)}};
    j["ceiling_cut"] = cut ? Json(*cut) : Json(nullptr);
    if (ci) {
      j["ci"] = series_to_json(*ci);
      j["delta"] = prof->top_delta();
      j["delta_star"] = prof->top_delta_star() ? Json(*prof->top_delta_star()) : Json(nullptr);
      j["sigma"] = prof->top_sigma() ? Json(*prof->top_sigma()) : Json(nullptr);
      Json entries = Json::array();
      for (const auto& e : c1->entries) {
        entries.push_back({{"index", e.index}, {"degree", e.degree}, {"sigma_prev", e.sigma_prev}, {"pass", e.pass}});
      }
      j["condition1"] = {{"holds", c1->holds}, {"entries", entries}};
    }
    o.out = j.dump(2) + '\n';
    return o;
  }
  std::ostringstream os;
  os << "type " << t.to_string() << ", bound " << bound << '\n';
  os << "product   " << series_text(raw) << '\n';
  os << "ceiling   " << series_text(fs);
  if (cut) os << "  (cut at degree " << *cut << ")";
  os << '\n';
  if (ci) {
    os << "ci_series " << series_text(*ci) << '\n';
    os << "delta = " << prof->top_delta();
    if (auto ds = prof->top_delta_star()) os << ", delta* = " << *ds;
    if (auto sg = prof->top_sigma()) os << ", sigma = " << *sg;
    os << '\n';
    os << "sigma condition: " << (c1->holds ? "holds" : "fails") << '\n';
    for (const auto& e : c1->entries) {
      os << "  i=" << e.index << "  d_i=" << e.degree << "  sigma_{i-1}=" << e.sigma_prev << "  "
         << (e.pass ? "ok" : "FAIL") << '\n';
    }
  }
  o.out = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// initial

inline Outcome cmd_initial(const RunConfig& cfg) {
  const auto t = parse_type(cfg);
  const std::size_t bound = resolve_bound(t, cfg.bound);
  const auto g = sample_guarded(t, cfg.prime, cfg.seed, bound);
  const auto& in = g.data.initial;
  const auto b = StandardMonomialSet::of(in, static_cast<int>(bound));
  const auto expected = froberg_series(t, bound);

  Outcome o;
  if (g.finding) o.exit_code = kExitViolation;
  if (cfg.format == Format::json) {
    Json j{{"type", t.to_string()},
           {"prime", cfg.prime},
           {"seed", cfg.seed},
           {"resample_count", g.instance.resample_count},
           {"bound", bound},
           {"generators", ideal_to_json(in)},
           {"hf", big_vector_to_json(prefix(g.data.hilbert, bound))},
           {"hf_expected", big_vector_to_json(prefix(expected, bound))}};
    if (t.r() == t.n() && t.n() >= 2) j["tilde_counts"] = tilde_decompose(b).counts();
    if (cfg.trace) {
      Json grades = Json::array();
      for (const auto& gr : b.grades) grades.push_back(monomials_to_json(gr));
      j["standard_monomials"] = grades;
      j["instance"] = instance_to_json(g.instance);
    }
    if (g.finding) {
      j["finding"] = {{"degree", g.finding->degree},
                      {"computed", big_to_json(g.finding->computed)},
                      {"expected", big_to_json(g.finding->expected)}};
    }
    o.out = j.dump(2) + '\n';
    return o;
  }
  std::ostringstream os;
  os << "type " << t.to_string() << ", p = " << cfg.prime << ", seed " << cfg.seed;
  if (g.instance.resample_count) os << " (resampled " << g.instance.resample_count << "x)";
  os << '\n';
  os << "minimal generators of in(I) (" << in.size() << "):\n" << generator_listing(in);
  os << "standard monomials:\n" << count_table("a_i", b.counts());
  if (t.r() == t.n() && t.n() >= 2) os << count_table("a'_i", tilde_decompose(b).counts());
  if (cfg.trace) {
    for (int i = 0; i <= b.top(); ++i) {
      if (b.count(i)) os << "  B_" << i << " = {" << monomial_list(b.grade(i)) << "}\n";
    }
  }
  if (g.finding) {
    os << "FINDING: Hilbert function differs from the ceiling series at degree " << g.finding->degree
       << " (computed " << g.finding->computed << ", expected " << g.finding->expected << ")\n";
  }
  o.out = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// incremental-trace

inline Outcome cmd_incremental_trace(const RunConfig& cfg) {
  const auto t = parse_type(cfg);
  const auto setup = prepare_incremental(t, cfg.prime, cfg.seed);
  const auto res = run_incremental(setup);

  std::optional<bool> direct_ok;
  std::optional<bool> f_ok;
  if (cfg.verify) {
    const int top = setup.delta + setup.d;
    const auto direct = initial_ideal(groebner(setup.instance.forms, top, setup.instance.field()));
    if (res.findings.empty()) {
      direct_ok = direct == res.assembled;
      if (res.F) {
        const auto fd = StandardMonomialSet::of(direct, top);
        f_ok = true;
        for (int i = 0; i <= top; ++i) *f_ok = *f_ok && same_set(res.F->grade(i), fd.grade(i));
      }
    } else {
      direct_ok = false;
    }
  }

  Outcome o;
  if (!res.findings.empty() || direct_ok == false || f_ok == false) o.exit_code = kExitViolation;
  if (cfg.format == Format::json) {
    Json steps = Json::array();
    for (const auto& s : res.steps) steps.push_back(step_to_json(s));
    Json j{{"type", t.to_string()},
           {"prime", cfg.prime},
           {"seed", cfg.seed},
           {"resample_count", setup.instance.resample_count},
           {"base", setup.base.to_string()},
           {"d", setup.d},
           {"delta", setup.delta},
           {"closed_form", res.closed_form},
           {"istar", res.istar},
           {"b_counts", setup.b.counts()},
           {"steps", steps},
           {"findings", res.findings}};
    if (res.findings.empty()) {
      j["generators"] = ideal_to_json(res.assembled);
      j["f_counts"] = hilbert_series(res.assembled, static_cast<std::size_t>(setup.delta + setup.d)).to_ll();
    }
    if (res.F) j["F_counts"] = res.F->counts();
    if (direct_ok) j["direct_match"] = *direct_ok;
    if (f_ok) j["F_match"] = *f_ok;
    o.out = j.dump(2) + '\n';
    return o;
  }
  std::ostringstream os;
  os << "type " << t.to_string() << " = base " << setup.base.to_string() << " + d = " << setup.d << ", p = "
     << cfg.prime << ", seed " << cfg.seed;
  if (setup.instance.resample_count) os << " (resampled " << setup.instance.resample_count << "x)";
  os << '\n';
  os << "delta = " << setup.delta << '\n';
  os << "B = standard monomials of pi(I):\n" << count_table("a_i", setup.b.counts());
  if (cfg.trace) {
    for (int i = 0; i <= setup.b.top(); ++i) {
      if (setup.b.count(i)) os << "  B_" << i << " = {" << monomial_list(setup.b.grade(i)) << "}\n";
    }
  }
  if (res.closed_form) {
    os << "d >= delta: closed form in(I,g) = in(I) + z^{d-delta+2j} B_{delta-j}, j = 0..delta\n";
  } else {
    os << "i* = " << res.istar << (((setup.delta - setup.d) % 2) ? " (odd case)" : " (even case)") << '\n';
    for (const auto& s : res.steps) {
      os << "step " << s.i << ": M_" << s.i << " is " << s.rows << " x " << s.cols << ", rank " << s.rank
         << ", S_" << s.i << " = " << list(s.S) << '\n';
      for (std::size_t k = 0; k < s.added.size(); ++k) {
        os << "  adds " << s.added[k].to_string() << " (position " << s.S[k] << ")";
        if (s.redundant[k]) os << "  redundant: multiple of an earlier generator";
        os << '\n';
      }
      if (s.finding) os << "  FINDING: " << *s.finding << '\n';
    }
  }
  if (res.findings.empty()) {
    const auto hs = hilbert_series(res.assembled, static_cast<std::size_t>(setup.delta + setup.d));
    os << "in(I,g): " << res.assembled.size() << " minimal generators\n";
    if (cfg.trace) os << generator_listing(res.assembled);
    os << "f_i = " << series_text(hs) << '\n';
    if (res.F) os << "F:\n" << count_table("f_i", res.F->counts());
  }
  if (direct_ok) os << "direct basis: in(I,g) " << (*direct_ok ? "matches" : "DIFFERS") << '\n';
  if (f_ok) os << "direct basis: F " << (*f_ok ? "matches" : "DIFFERS") << '\n';
  o.out = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// check

struct TrialResult {
  std::optional<ConjectureReport> report;
  std::string error;
};

/// Runs `fn(trial)` for trial = 0..trials-1 on up to `jobs` threads; results
/// come back indexed by trial.
template <class Fn>
std::vector<TrialResult> run_trials(std::size_t trials, unsigned jobs, Fn fn) {
  std::vector<TrialResult> out(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < trials; k = next++) {
      try {
        out[k].report = fn(k);
      } catch (const std::exception& e) {
        out[k].error = e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  return out;
}

inline Outcome cmd_check(const RunConfig& cfg) {
  const auto t = parse_type(cfg);
  const auto& names = conjecture_names();
  if (std::find(names.begin(), names.end(), cfg.conjecture) == names.end()) {
    throw UsageError("unknown conjecture '" + cfg.conjecture + "' (expected one of " + join(names) + ")");
  }
  const auto results = run_trials(cfg.trials, cfg.jobs, [&](std::size_t k) {
    CheckOptions opt{cfg.prime, cfg.seed + k, cfg.bound, cfg.verify};
    return run_check(cfg.conjecture, t, opt);
  });

  std::size_t holds = 0, violated = 0, oor = 0, errors = 0;
  for (const auto& r : results) {
    if (!r.report) {
      ++errors;
      continue;
    }
    switch (r.report->verdict) {
      case Verdict::holds: ++holds; break;
      case Verdict::violated: ++violated; break;
      case Verdict::out_of_regime: ++oor; break;
    }
  }
  Outcome o;
  o.exit_code = errors ? kExitError : violated ? kExitViolation : 0;
  if (cfg.format == Format::json) {
    Json reports = Json::array();
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (results[k].report) {
        reports.push_back(report_to_json(*results[k].report));
      } else {
        reports.push_back({{"seed", cfg.seed + k}, {"error", results[k].error}});
      }
    }
    Json j{{"conjecture", cfg.conjecture},
           {"type", t.to_string()},
           {"trials", cfg.trials},
           {"reports", reports},
           {"summary", {{"holds", holds}, {"violated", violated}, {"out_of_regime", oor}, {"errors", errors}}}};
    o.out = j.dump(2) + '\n';
    return o;
  }
  std::ostringstream os;
  os << cfg.conjecture << " on " << t.to_string() << ", p = " << cfg.prime << ", seeds " << cfg.seed << ".."
     << cfg.seed + cfg.trials - 1 << '\n';
  for (std::size_t k = 0; k < results.size(); ++k) {
    os << "  seed " << cfg.seed + k << ": ";
    if (!results[k].report) {
      os << "error: " << results[k].error << '\n';
      continue;
    }
    const auto& r = *results[k].report;
    os << to_string(r.verdict) << " [" << to_string(r.regime) << "]";
    if (r.resample_count) os << " resampled " << r.resample_count << "x";
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << '\n';
    for (const auto& w : r.witnesses) {
      os << "    witness:";
      if (w.monomial) os << ' ' << w.monomial->to_string();
      if (w.degree) os << " degree " << *w.degree << " computed " << w.computed << " expected " << w.expected;
      if (w.index) os << " index " << w.index;
      os << '\n';
    }
    if (cfg.trace && !r.hf_computed.empty()) {
      os << "    hf          " << list(r.hf_computed) << '\n';
      os << "    hf_expected " << list(r.hf_expected) << '\n';
    }
  }
  os << "summary: " << holds << " holds, " << violated << " violated, " << oor << " out-of-regime, " << errors
     << " errors\n";
  o.out = os.str();
  return o;
}

// ---------------------------------------------------------------------------
// selftest

/// Fast end-to-end checks on the worked examples.
inline Outcome cmd_selftest(const RunConfig& cfg) {
  struct Item {
    std::string name;
    bool pass;
  };
  std::vector<Item> items;
  auto run = [&](const std::string& name, auto fn) {
    try {
      items.push_back({name, fn()});
    } catch (const std::exception&) {
      items.push_back({name, false});
    }
  };
  run("ci series of 4:2,3,3,4", [] {
    return ci_series(DegreeType::parse("4:2,3,3,4")).to_ll() == std::vector<long long>{1, 4, 9, 14, 16, 14, 9, 4, 1};
  });
  run("froberg series of 2:2,2,2", [] {
    return froberg_series(DegreeType::parse("2:2,2,2"), 4).to_ll() == std::vector<long long>{1, 2, 0, 0, 0};
  });
  run("initial ideal of 2:2,2", [&] {
    const auto g = sample_guarded(DegreeType::parse("2:2,2"), cfg.prime, cfg.seed, 4);
    return g.data.initial == MonomialIdeal(2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 3}});
  });
  run("incremental trace of 5:2,3,3,4,5", [&] {
    const auto res = run_incremental(prepare_incremental(DegreeType::parse("5:2,3,3,4,5"), cfg.prime, cfg.seed));
    return res.findings.empty() && res.steps.at(0).added.at(0) == Monomial{1, 1, 1, 2, 0} &&
           res.S.at(0) == std::vector<std::size_t>{1, 2, 3, 4};
  });
  run("froberg on 4:2,2,2,2,2", [&] {
    return run_froberg(DegreeType::parse("4:2,2,2,2,2"), {cfg.prime, cfg.seed, std::nullopt, false}).verdict ==
           Verdict::holds;
  });
  Outcome o;
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "PASS " : "FAIL ") << it.name << '\n';
    if (!it.pass) o.exit_code = kExitViolation;
  }
  o.out = os.str();
  return o;
}

inline Outcome dispatch(const RunConfig& cfg) {
  try {
    if (cfg.command == "series") return cmd_series(cfg);
    if (cfg.command == "initial") return cmd_initial(cfg);
    if (cfg.command == "incremental-trace") return cmd_incremental_trace(cfg);
    if (cfg.command == "check") return cmd_check(cfg);
    if (cfg.command == "selftest") return cmd_selftest(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const std::exception& e) {
    return {kExitError, std::string("error: ") + e.what() + '\n'};
  }
}

}  // namespace gin::cli
