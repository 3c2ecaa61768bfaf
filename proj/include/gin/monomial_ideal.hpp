#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <vector>

#include "gin/monomial.hpp"
#include "gin/series.hpp"

namespace gin {

/// Monomial ideal stored by its minimal generators, degrevlex-decreasing.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}

  MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& g : gens) {
      if (g.nvars() != nvars) throw UsageError("generator lives in the wrong ring");
    }
    gens_ = minimalize(std::move(gens));
  }

  /// Drops every generator divisible by another (and duplicates); sorts decreasing.
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    // Ascending degree first so a divisor is always seen before its multiples.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return degrevlex_cmp(a, b) < 0;
    });
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
      const bool redundant =
          std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
      if (!redundant) kept.push_back(g);
    }
    sort_decreasing(kept);
    return kept;
  }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  bool is_minimal() const {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (i != j && gens_[i].divides(gens_[j])) return false;
      }
    }
    return true;
  }

  MonomialIdeal with(std::vector<Monomial> extra) const {
    extra.insert(extra.end(), gens_.begin(), gens_.end());
    return MonomialIdeal(nvars_, std::move(extra));
  }

  /// Image in K[x_1..x_keep] after setting x_{keep+1}, ..., x_n to zero:
  /// generators involving a dropped variable vanish.
  MonomialIdeal project(int keep) const {
    std::vector<Monomial> kept;
    for (const auto& g : gens_) {
      bool uses_dropped = false;
      for (int i = keep + 1; i <= nvars_; ++i) uses_dropped = uses_dropped || g[i] != 0;
      if (!uses_dropped) kept.push_back(g.embed(keep));
    }
    return MonomialIdeal(keep, std::move(kept));
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

/// Degree-t monomials outside I, degrevlex-decreasing.
inline std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int t) {
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(ideal.nvars(), t)) {
    if (!ideal.contains(m)) out.push_back(std::move(m));
  }
  return out;
}

inline std::size_t hilbert_function(const MonomialIdeal& ideal, int t) {
  return standard_monomials(ideal, t).size();
}

/// Standard monomials grade by grade for 0..top. Each grade is grown from the
/// previous one (standard monomials form an order ideal).
inline std::vector<std::vector<Monomial>> standard_monomial_grades(const MonomialIdeal& ideal, int top) {
  std::vector<std::vector<Monomial>> grades;
  if (top < 0) return grades;
  const int n = ideal.nvars();
  grades.push_back({});
  if (!ideal.contains(Monomial(n))) grades[0].push_back(Monomial(n));
  for (int t = 1; t <= top; ++t) {
    std::unordered_set<Monomial> seen;
    std::vector<Monomial> next;
    for (const auto& s : grades.back()) {
      for (int j = 1; j <= n; ++j) {
        Monomial m = s * Monomial::variable(n, j);
        if (seen.insert(m).second && !ideal.contains(m)) next.push_back(m);
      }
    }
    sort_decreasing(next);
    grades.push_back(std::move(next));
  }
  return grades;
}

/// sum_t HF(t) z^t through `bound`.
inline TruncatedSeries hilbert_series(const MonomialIdeal& ideal, std::size_t bound) {
  TruncatedSeries s(bound);
  const auto grades = standard_monomial_grades(ideal, static_cast<int>(bound));
  for (std::size_t t = 0; t <= bound; ++t) s[t] = grades[t].size();
  return s;
}

}  // namespace gin
