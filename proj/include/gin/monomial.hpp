#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gin/error.hpp"

namespace gin {

inline constexpr int kMaxVars = 16;

/// x_1^{e_1} ... x_n^{e_n}. Exponents are bytes; the total degree is cached.
class Monomial {
 public:
  Monomial() = default;

  /// The constant monomial 1 in `nvars` variables.
  explicit Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
    if (nvars < 1 || nvars > kMaxVars) {
      throw UsageError("variable count must lie in [1, " + std::to_string(kMaxVars) + "]");
    }
  }

  Monomial(std::span<const int> exponents) : Monomial(static_cast<int>(exponents.size())) {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0 || exponents[i] > 255) throw UsageError("exponent out of range [0, 255]");
      exps_[i] = static_cast<std::uint8_t>(exponents[i]);
      degree_ = static_cast<std::uint16_t>(degree_ + exponents[i]);
    }
  }
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  /// x_i^e with 1-based variable index.
  static Monomial variable(int nvars, int index, int e = 1) {
    Monomial m(nvars);
    m.set(index, e);
    return m;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  /// Exponent of x_i, 1-based.
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
  std::span<const std::uint8_t> exponents() const { return {exps_.data(), nvars_}; }
  std::vector<int> exponent_vector() const { return {exps_.begin(), exps_.begin() + nvars_}; }
  bool is_one() const { return degree_ == 0; }

  void set(int i, int e) {
    if (i < 1 || i > nvars_) throw UsageError("variable index out of range");
    if (e < 0 || e > 255) throw UsageError("exponent out of range [0, 255]");
    degree_ = static_cast<std::uint16_t>(degree_ - exps_[static_cast<std::size_t>(i - 1)] + e);
    exps_[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(e);
  }

  /// Largest index i with x_i | m. Undefined (usage error) for m = 1.
  int max_index() const {
    for (int i = nvars_; i >= 1; --i) {
      if (exps_[static_cast<std::size_t>(i - 1)]) return i;
    }
    throw UsageError("max_index is undefined for the monomial 1");
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (int i = 0; i < nvars_; ++i) {
      if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    Monomial r(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) {
      const int e = a.exps_[static_cast<std::size_t>(i)] + b.exps_[static_cast<std::size_t>(i)];
      if (e > 255) throw UsageError("exponent overflow");
      r.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    if (!b.divides(a)) throw UsageError("monomial quotient: divisor does not divide");
    Monomial r(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) {
      r.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
          a.exps_[static_cast<std::size_t>(i)] - b.exps_[static_cast<std::size_t>(i)]);
    }
    r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    Monomial r(a.nvars_);
    int deg = 0;
    for (int i = 0; i < a.nvars_; ++i) {
      const auto e = std::max(a.exps_[static_cast<std::size_t>(i)], b.exps_[static_cast<std::size_t>(i)]);
      r.exps_[static_cast<std::size_t>(i)] = e;
      deg += e;
    }
    r.degree_ = static_cast<std::uint16_t>(deg);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars_; ++i) {
      if (a.exps_[static_cast<std::size_t>(i)] && b.exps_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  /// Same monomial in a ring with `nvars` variables; extra variables get
  /// exponent 0, dropped variables must have exponent 0.
  Monomial embed(int nvars) const {
    Monomial r(nvars);
    for (int i = 0; i < std::max(nvars, static_cast<int>(nvars_)); ++i) {
      const int e = i < nvars_ ? exps_[static_cast<std::size_t>(i)] : 0;
      if (i >= nvars) {
        if (e) throw UsageError("embed: dropped variable has positive exponent");
        continue;
      }
      r.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = degree_;
    return r;
  }

  std::string to_string() const {
    if (degree_ == 0) return "1";
    std::string s;
    for (int i = 0; i < nvars_; ++i) {
      const int e = exps_[static_cast<std::size_t>(i)];
      if (!e) continue;
      s += "x" + std::to_string(i + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  static void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) {
      throw UsageError("monomials live in rings with " + std::to_string(a.nvars_) + " and " +
                       std::to_string(b.nvars_) + " variables");
    }
  }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (int i = 0; i < nvars_; ++i) h = h * 131 + exps_[static_cast<std::size_t>(i)];
    return h;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

/// Degree reverse lexicographic comparison: higher degree wins; on ties a > b
/// iff the last nonzero entry of exps(a) - exps(b) is negative.
inline std::strong_ordering degrevlex_cmp(const Monomial& a, const Monomial& b) {
  Monomial::check_same_ring(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.nvars(); i >= 1; --i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

struct DegrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_cmp(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of degree `t` in variables x_1..x_k of an n-variable ring,
/// sorted degrevlex-decreasing.
inline std::vector<Monomial> monomials_of_degree(int nvars, int t, int k = -1) {
  if (k < 0) k = nvars;
  std::vector<Monomial> out;
  if (t < 0) return out;
  if (k == 0) {
    if (t == 0) out.emplace_back(nvars);
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  // Recursive composition generator over the first k variables.
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == k - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.emplace_back(std::span<const int>(e));
      e[static_cast<std::size_t>(var)] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(var)] = v;
      rec(var + 1, left - v);
    }
    e[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, t);
  std::sort(out.begin(), out.end(), DegrevlexGreater{});
  return out;
}

inline void sort_decreasing(std::vector<Monomial>& ms) {
  std::sort(ms.begin(), ms.end(), DegrevlexGreater{});
}

}  // namespace gin

template <>
struct std::hash<gin::Monomial> {
  std::size_t operator()(const gin::Monomial& m) const { return m.hash(); }
};
