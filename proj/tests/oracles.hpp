#pragma once

// Reference computations that share no code with the engine beyond the
// Monomial/Polynomial containers.
//
// macaulay_initial: for each degree t, stack m * f_i over every monomial m of
// degree t - d_i, order the columns by decreasing degrevlex and row reduce.
// The pivot columns are exactly the degree-t part of in(I).
//
// inclusion_exclusion_hf: HF of R / (m_1..m_k) as
//   sum over subsets S of (-1)^|S| * C(t - deg lcm(S) + n - 1, n - 1).

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gin/monomial.hpp"
#include "gin/polynomial.hpp"

namespace oracle {

using gin::Monomial;
using gin::Polynomial;

inline std::vector<Monomial> all_monomials(int n, int t) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, left - k);
    }
  };
  if (n == 0) return out;
  rec(rec, 0, t);
  // Independent sort: compare reversed exponent differences by hand.
  std::sort(out.begin(), out.end(), [n](const Monomial& a, const Monomial& b) {
    for (int v = n; v >= 1; --v) {
      if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
  });
  return out;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Pivot columns of the row echelon form of `rows` over F_p.
inline std::vector<std::size_t> pivots(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  std::vector<std::size_t> piv;
  if (rows.empty()) return piv;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const auto inv = powmod(rows[r][c], p - 2, p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      const auto f = rows[k][c];
      if (!f) continue;
      for (std::size_t j = c; j < ncols; ++j) rows[k][j] = (rows[k][j] + p - f * rows[r][j] % p) % p;
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

/// Degree-t monomials of in(I) for homogeneous generators `gens`.
inline std::vector<Monomial> macaulay_initial(const std::vector<Polynomial>& gens, int n, int t, std::uint64_t p) {
  const auto cols = all_monomials(n, t);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t j = 0; j < cols.size(); ++j) index[cols[j].exponent_vector()] = j;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& f : gens) {
    const int df = f.degree();
    if (df > t) continue;
    for (const auto& m : all_monomials(n, t - df)) {
      std::vector<std::uint64_t> row(cols.size(), 0);
      for (const auto& term : f.terms()) {
        const auto prod = (term.mono * m).exponent_vector();
        row[index.at(prod)] = (row[index.at(prod)] + term.coeff) % p;
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<Monomial> out;
  for (auto c : pivots(std::move(rows), p)) out.push_back(cols[c]);
  return out;
}

inline std::int64_t macaulay_hf(const std::vector<Polynomial>& gens, int n, int t, std::uint64_t p) {
  return static_cast<std::int64_t>(all_monomials(n, t).size() - macaulay_initial(gens, n, t, p).size());
}

inline std::int64_t binom(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

inline std::int64_t inclusion_exclusion_hf(const std::vector<Monomial>& gens, int n, int t) {
  const std::size_t k = gens.size();
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> l(static_cast<std::size_t>(n), 0);
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      ++bits;
      for (int v = 1; v <= n; ++v) l[static_cast<std::size_t>(v - 1)] = std::max(l[static_cast<std::size_t>(v - 1)], gens[i][v]);
    }
    int deg = 0;
    for (int x : l) deg += x;
    const auto c = binom(t - deg + n - 1, n - 1);
    total += (bits % 2 ? -c : c);
  }
  return total;
}

}  // namespace oracle
