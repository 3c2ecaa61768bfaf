#pragma once

// Truncated integer power series, the ceiling operator, and the integer
// combinatorics of a degree type (delta_i, sigma_i, and the condition d_i >= sigma_{i-1}).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gin/error.hpp"

namespace gin {

using BigInt = boost::multiprecision::cpp_int;

/// Power series sum c_i z^i known exactly for 0 <= i <= bound.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t bound = 0) : coeffs_(bound + 1) {}

  TruncatedSeries(std::size_t bound, const std::vector<BigInt>& prefix)
      : coeffs_(bound + 1) {
    if (prefix.size() > bound + 1) {
      throw UsageError("series prefix longer than bound + 1");
    }
    std::copy(prefix.begin(), prefix.end(), coeffs_.begin());
  }

  static TruncatedSeries from_ints(std::size_t bound,
                                   std::initializer_list<long long> prefix) {
    std::vector<BigInt> c;
    for (long long v : prefix) c.emplace_back(v);
    return TruncatedSeries(bound, c);
  }

  /// 1 / (1 - z) = 1 + z + z^2 + ...
  static TruncatedSeries geometric(std::size_t bound) {
    TruncatedSeries s(bound);
    for (auto& c : s.coeffs_) c = 1;
    return s;
  }

  /// 1 - z^d
  static TruncatedSeries one_minus_power(std::size_t bound, std::size_t d) {
    TruncatedSeries s(bound);
    s.coeffs_[0] = 1;
    if (d <= bound) s.coeffs_[d] -= 1;
    return s;
  }

  std::size_t bound() const { return coeffs_.size() - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigInt& operator[](std::size_t i) { return coeffs_.at(i); }

  /// Largest index with a nonzero coefficient, or nullopt for the zero series.
  std::optional<std::size_t> last_nonzero() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i] != 0) return i;
    }
    return std::nullopt;
  }

  std::vector<long long> to_ll() const {
    std::vector<long long> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(static_cast<long long>(c));
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Cauchy product truncated at the shared bound.
inline TruncatedSeries mul_truncated(const TruncatedSeries& a,
                                     const TruncatedSeries& b) {
  if (a.bound() != b.bound()) {
    throw UsageError("mul_truncated: mismatched bounds " +
                     std::to_string(a.bound()) + " and " +
                     std::to_string(b.bound()));
  }
  const std::size_t n = a.bound();
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/// Keeps a_i while every a_j (j <= i) is positive; zero from the first
/// non-positive coefficient on.
inline TruncatedSeries ceiling(const TruncatedSeries& s) {
  TruncatedSeries out(s.bound());
  for (std::size_t i = 0; i <= s.bound(); ++i) {
    if (s[i] <= 0) break;
    out[i] = s[i];
  }
  return out;
}

/// Ideal type (n; d_1, ..., d_r) with d_1 <= ... <= d_r.
class DegreeType {
 public:
  DegreeType(int n, std::vector<int> degrees) : n_(n), degrees_(std::move(degrees)) {
    if (n_ < 1) throw UsageError("degree type: n must be >= 1");
    if (degrees_.empty()) throw UsageError("degree type: need at least one degree");
    for (int d : degrees_) {
      if (d < 1) throw UsageError("degree type: degrees must be >= 1");
    }
    std::sort(degrees_.begin(), degrees_.end());
  }

  /// Parses "n:d1,d2,...,dr". Errors name the offending character position.
  static DegreeType parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> UsageError {
      return UsageError("malformed type '" + std::string(text) + "' at position " +
                        std::to_string(pos) + ": " + why);
    };
    auto read_int = [&]() -> int {
      const std::size_t start = pos;
      long long v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > 255) throw fail("value too large");
        ++pos;
      }
      if (pos == start) throw fail("expected a positive integer");
      return static_cast<int>(v);
    };
    const int n = read_int();
    if (n < 1) {
      pos = 0;
      throw fail("variable count must be >= 1");
    }
    if (pos >= text.size() || text[pos] != ':') throw fail("expected ':'");
    ++pos;
    std::vector<int> degrees;
    while (true) {
      const std::size_t start = pos;
      const int d = read_int();
      if (d < 1) {
        pos = start;
        throw fail("degrees must be >= 1");
      }
      degrees.push_back(d);
      if (pos == text.size()) break;
      if (text[pos] != ',') throw fail("expected ','");
      ++pos;
    }
    return DegreeType(n, std::move(degrees));
  }

  int n() const { return n_; }
  int r() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(int i) const { return degrees_.at(static_cast<std::size_t>(i - 1)); }
  int max_degree() const { return degrees_.back(); }
  int degree_sum() const {
    int s = 0;
    for (int d : degrees_) s += d;
    return s;
  }

  /// Same degrees in a different number of variables.
  DegreeType with_n(int n) const { return DegreeType(n, degrees_); }

  std::string to_string() const {
    std::ostringstream os;
    os << n_ << ':';
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) os << ',';
      os << degrees_[i];
    }
    return os.str();
  }

  friend bool operator==(const DegreeType&, const DegreeType&) = default;

 private:
  int n_;
  std::vector<int> degrees_;
};

/// Default truncation for conjecture checks: (sum d_i - n) + max d_i + 2.
inline std::size_t default_bound(const DegreeType& t) {
  const int b = t.degree_sum() - t.n() + t.max_degree() + 2;
  return static_cast<std::size_t>(std::max(b, 0));
}

/// Ceiling of prod (1 - z^{d_i}) / (1 - z)^n, truncated at bound.
inline TruncatedSeries froberg_series(const DegreeType& t, std::size_t bound) {
  TruncatedSeries s = TruncatedSeries::from_ints(bound, {1});
  for (int d : t.degrees()) {
    s = mul_truncated(s, TruncatedSeries::one_minus_power(bound, static_cast<std::size_t>(d)));
  }
  const auto geo = TruncatedSeries::geometric(bound);
  for (int i = 0; i < t.n(); ++i) s = mul_truncated(s, geo);
  return ceiling(s);
}

/// prod (1 - z^{d_i}) * HS, no ceiling. Used for regular-sequence checks.
inline TruncatedSeries times_numerator(const TruncatedSeries& hs,
                                       const std::vector<int>& degrees) {
  TruncatedSeries s = hs;
  for (int d : degrees) {
    s = mul_truncated(s, TruncatedSeries::one_minus_power(s.bound(), static_cast<std::size_t>(d)));
  }
  return s;
}

/// Hilbert series of a complete intersection of type (n; d_1..d_n); the
/// result is the degree-delta polynomial, bound = delta.
inline TruncatedSeries ci_series(const DegreeType& t) {
  if (t.r() != t.n()) {
    throw UsageError("ci_series requires r == n, got type " + t.to_string());
  }
  const auto delta = static_cast<std::size_t>(t.degree_sum() - t.n());
  TruncatedSeries s = TruncatedSeries::from_ints(delta, {1});
  for (int d : t.degrees()) {
    // 1 + z + ... + z^{d-1}
    TruncatedSeries f(delta);
    for (int k = 0; k < d && static_cast<std::size_t>(k) <= delta; ++k) f[static_cast<std::size_t>(k)] = 1;
    s = mul_truncated(s, f);
  }
  return s;
}

/// delta_i = d_1 + ... + d_i - i and sigma_i = min(delta_{i-1}, floor(delta_i / 2)).
/// Index 0 of both vectors is unused; sigma_1 is left at 0.
struct SigmaProfile {
  std::vector<int> delta;
  std::vector<int> sigma;

  int r() const { return static_cast<int>(delta.size()) - 1; }
  int delta_i(int i) const { return delta.at(static_cast<std::size_t>(i)); }
  int sigma_i(int i) const {
    if (i < 2) throw UsageError("sigma_i is defined for i >= 2");
    return sigma.at(static_cast<std::size_t>(i));
  }
  /// delta = delta_r
  int top_delta() const { return delta.back(); }
  /// delta* = delta_{r-1}; undefined for r = 1.
  std::optional<int> top_delta_star() const {
    if (r() < 2) return std::nullopt;
    return delta[delta.size() - 2];
  }
  /// sigma = sigma_r; undefined for r = 1.
  std::optional<int> top_sigma() const {
    if (r() < 2) return std::nullopt;
    return sigma.back();
  }
};

inline int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

inline SigmaProfile sigma_profile(const DegreeType& t) {
  SigmaProfile p;
  p.delta.assign(static_cast<std::size_t>(t.r()) + 1, 0);
  p.sigma.assign(static_cast<std::size_t>(t.r()) + 1, 0);
  int sum = 0;
  for (int i = 1; i <= t.r(); ++i) {
    sum += t.degree(i);
    p.delta[static_cast<std::size_t>(i)] = sum - i;
  }
  for (int i = 2; i <= t.r(); ++i) {
    p.sigma[static_cast<std::size_t>(i)] =
        std::min(p.delta[static_cast<std::size_t>(i - 1)], floor_half(p.delta[static_cast<std::size_t>(i)]));
  }
  return p;
}

struct Condition1Entry {
  int index;
  int degree;
  int sigma_prev;
  bool pass;
};

struct Condition1Report {
  bool holds = true;
  std::vector<Condition1Entry> entries;
};

/// d_i >= sigma_{i-1} for every 4 <= i <= r (vacuous for r <= 3).
inline Condition1Report condition1_check(const DegreeType& t) {
  Condition1Report rep;
  const auto prof = sigma_profile(t);
  for (int i = 4; i <= t.r(); ++i) {
    const int s = prof.sigma_i(i - 1);
    const bool ok = t.degree(i) >= s;
    rep.entries.push_back({i, t.degree(i), s, ok});
    rep.holds = rep.holds && ok;
  }
  return rep;
}

}  // namespace gin
