#pragma once

// Seeded generic forms over F_p and the genericity guard.
//
// Random stream: std::mt19937_64 seeded through std::seed_seq with the four
// 32-bit words {seed_lo, seed_hi, resample_lo, resample_hi}. Both are fully
// specified by the C++ standard, so every platform produces the same stream.
// A coefficient is drawn by rejection: take a raw 64-bit output r, reject
// r >= floor(2^64 / (p-1)) * (p-1), and return 1 + r mod (p-1). Forms are
// sampled in order d_1..d_r, monomials within a form in decreasing degrevlex
// order.

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gin/field.hpp"
#include "gin/groebner.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/polynomial.hpp"
#include "gin/series.hpp"

namespace gin {

class CoefficientStream {
 public:
  CoefficientStream(std::uint64_t seed, std::uint64_t resample_count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(resample_count),
                      static_cast<std::uint32_t>(resample_count >> 32)};
    engine_.seed(seq);
  }

  /// Uniform in [1, p-1].
  Coeff nonzero(const PrimeField& k) {
    const std::uint64_t span = k.p() - 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return static_cast<Coeff>(1 + r % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Every degree-d monomial in n variables with a nonzero random coefficient.
inline Polynomial sample_form(int n, int d, CoefficientStream& rng, const PrimeField& k) {
  if (d < 1) throw UsageError("sample_form: degree must be >= 1");
  std::vector<Term> terms;
  for (auto& m : monomials_of_degree(n, d)) terms.push_back({rng.nonzero(k), std::move(m)});
  return Polynomial::from_sorted(n, std::move(terms));
}

struct GenericInstance {
  DegreeType type;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  std::uint64_t resample_count = 0;
  std::vector<Polynomial> forms;

  PrimeField field() const { return PrimeField(prime); }
  int nvars() const { return type.n(); }
};

inline GenericInstance sample_ideal(const DegreeType& t, std::uint32_t prime, std::uint64_t seed,
                                    std::uint64_t resample_count = 0) {
  const PrimeField k(prime);
  CoefficientStream rng(seed, resample_count);
  GenericInstance inst{t, prime, seed, resample_count, {}};
  for (int d : t.degrees()) inst.forms.push_back(sample_form(t.n(), d, rng, k));
  return inst;
}

/// Regimes where the generic Hilbert series is a theorem: r <= n, n <= 3,
/// quadrics with n <= 11, cubics with n <= 8, or the sigma condition. A sample
/// missing the value there is a bad specialization.
inline bool hilbert_series_proven(const DegreeType& t) {
  const auto& ds = t.degrees();
  const bool all2 = std::all_of(ds.begin(), ds.end(), [](int d) { return d == 2; });
  const bool all3 = std::all_of(ds.begin(), ds.end(), [](int d) { return d == 3; });
  return t.r() <= t.n() || t.n() <= 3 || (all2 && t.n() <= 11) || (all3 && t.n() <= 8) ||
         condition1_check(t).holds;
}

/// Reduced basis, initial ideal, and Hilbert function of an instance through `bound`.
struct InstanceData {
  GroebnerBasis basis;
  MonomialIdeal initial;
  TruncatedSeries hilbert;
};

inline InstanceData analyze(const GenericInstance& inst, std::size_t bound) {
  auto gb = groebner(inst.forms, static_cast<int>(bound), inst.field());
  auto in = initial_ideal(gb);
  auto hs = hilbert_series(in, bound);
  return {std::move(gb), std::move(in), std::move(hs)};
}

struct Divergence {
  std::size_t degree;
  BigInt computed;
  BigInt expected;
};

inline std::optional<Divergence> first_divergence(const TruncatedSeries& computed,
                                                  const TruncatedSeries& expected, std::size_t through) {
  for (std::size_t t = 0; t <= through; ++t) {
    if (computed[t] != expected[t]) return Divergence{t, computed[t], expected[t]};
  }
  return std::nullopt;
}

/// Thrown when every resample misses a proven value.
class GenericityError : public std::runtime_error {
 public:
  GenericityError(const GenericInstance& inst, const Divergence& div)
      : std::runtime_error(message(inst, div)), divergence(div) {}
  Divergence divergence;

 private:
  static std::string message(const GenericInstance& inst, const Divergence& div) {
    std::ostringstream os;
    os << "genericity guard exhausted for type " << inst.type.to_string() << " (p=" << inst.prime
       << ", seed=" << inst.seed << "): degree " << div.degree << " has HF " << div.computed
       << ", expected " << div.expected;
    return os.str();
  }
};

inline constexpr int kGuardRetryCap = 8;

struct GuardOutcome {
  GenericInstance instance;
  InstanceData data;
  /// Set when the instance disagrees with `expected` in an unproven regime:
  /// a finding, kept as is.
  std::optional<Divergence> finding;
};

/// Hilbert function of `inst` against `expected` through `through_degree`.
/// In proven regimes a mismatch resamples (resample_count + 1) up to the
/// retry cap; elsewhere it is returned as a finding.
inline GuardOutcome genericity_guard(GenericInstance inst, const TruncatedSeries& expected,
                                     std::size_t through_degree, int retry_cap = kGuardRetryCap) {
  if (through_degree > expected.bound()) throw UsageError("guard degree exceeds the expected series bound");
  const bool proven = hilbert_series_proven(inst.type);
  for (int attempt = 0;; ++attempt) {
    auto data = analyze(inst, through_degree);
    auto div = first_divergence(data.hilbert, expected, through_degree);
    if (!div) return {std::move(inst), std::move(data), std::nullopt};
    if (!proven) return {std::move(inst), std::move(data), div};
    if (attempt + 1 >= retry_cap) throw GenericityError(inst, *div);
    inst = sample_ideal(inst.type, inst.prime, inst.seed, inst.resample_count + 1);
  }
}

/// Socle degree + 1 of the conjectured series when it is a polynomial
/// (r >= n); nullopt when the quotient is not Artinian.
inline std::optional<std::size_t> artinian_bound(const DegreeType& t) {
  const std::size_t b = default_bound(t);
  const auto s = froberg_series(t, b);
  const auto last = s.last_nonzero();
  if (!last || *last == b) return std::nullopt;
  return *last + 1;
}

/// Samples and guards against the conjectured series of the type.
inline GuardOutcome sample_guarded(const DegreeType& t, std::uint32_t prime, std::uint64_t seed,
                                   std::size_t bound) {
  return genericity_guard(sample_ideal(t, prime, seed), froberg_series(t, bound), bound);
}

}  // namespace gin
