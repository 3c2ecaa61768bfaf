#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gin/field.hpp"
#include "gin/monomial.hpp"

namespace gin {

struct Term {
  Coeff coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over a prime field: nonzero terms in strictly decreasing
/// degrevlex order. The field is passed to arithmetic explicitly.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 1) : nvars_(nvars) {}

  /// Builds from arbitrary terms: combines duplicates, drops zeros, sorts.
  static Polynomial from_terms(int nvars, std::vector<Term> terms, const PrimeField& k) {
    for (auto& t : terms) {
      if (t.mono.nvars() != nvars) throw UsageError("term lives in the wrong ring");
      t.coeff %= k.p();
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return degrevlex_cmp(a.mono, b.mono) > 0; });
    Polynomial p(nvars);
    for (const auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = k.add(p.terms_.back().coeff, t.coeff);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(t);
      }
    }
    return p;
  }

  /// Trusts the caller: terms already strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial monomial(const Monomial& m, Coeff c = 1) {
    Polynomial p(m.nvars());
    if (c) p.terms_.push_back({c, m});
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const {
    if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading().mono; }
  int degree() const { return leading().mono.degree(); }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }

  /// Coefficient of m, or 0.
  Coeff coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
      return degrevlex_cmp(t.mono, x) > 0;
    });
    return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
  }

  Polynomial scaled(Coeff c, const PrimeField& k) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({k.mul(t.coeff, c), t.mono});
    return r;
  }

  Polynomial times(const Monomial& m) const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff, t.mono * m});
    return r;
  }

  Polynomial monic(const PrimeField& k) const {
    if (is_zero()) return *this;
    return scaled(k.inv(leading().coeff), k);
  }

  /// a * this + b * other
  Polynomial linear_combination(Coeff a, const Polynomial& other, Coeff b, const PrimeField& k) const {
    if (nvars_ != other.nvars_) throw UsageError("polynomials live in different rings");
    Polynomial r(nvars_);
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
      int c;
      if (i == terms_.size()) c = -1;
      else if (j == other.terms_.size()) c = 1;
      else {
        const auto o = degrevlex_cmp(terms_[i].mono, other.terms_[j].mono);
        c = o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
      if (c > 0) {
        const Coeff v = k.mul(a, terms_[i].coeff);
        if (v) r.terms_.push_back({v, terms_[i].mono});
        ++i;
      } else if (c < 0) {
        const Coeff v = k.mul(b, other.terms_[j].coeff);
        if (v) r.terms_.push_back({v, other.terms_[j].mono});
        ++j;
      } else {
        const Coeff v = k.add(k.mul(a, terms_[i].coeff), k.mul(b, other.terms_[j].coeff));
        if (v) r.terms_.push_back({v, terms_[i].mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  /// Substitutes x_i = 0 for every i > keep and moves to a ring with `keep` variables.
  Polynomial project(int keep) const {
    Polynomial r(keep);
    for (const auto& t : terms_) {
      bool zero = false;
      for (int i = keep + 1; i <= nvars_; ++i) zero = zero || t.mono[i] != 0;
      if (!zero) r.terms_.push_back({t.coeff, t.mono.embed(keep)});
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      s += std::to_string(terms_[i].coeff);
      if (!terms_[i].mono.is_one()) s += "*" + terms_[i].mono.to_string();
    }
    return s;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int nvars_;
  std::vector<Term> terms_;
};

}  // namespace gin
