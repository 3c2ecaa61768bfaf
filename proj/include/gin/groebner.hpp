#pragma once

// Degree-truncated reduced Groebner bases of homogeneous ideals under
// degrevlex. Buchberger with the normal selection strategy: S-pairs are
// processed in ascending lcm degree, so everything found through degree t is
// final once degree t is done. Pair pruning follows Gebauer-Moeller.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gin/field.hpp"
#include "gin/monomial.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/polynomial.hpp"

namespace gin {

struct GroebnerBasis {
  PrimeField field;
  int nvars = 1;
  /// Monic, mutually reduced, ascending degree.
  std::vector<Polynomial> elements;
  int degree_cap = 0;
  /// Valid for every degree <= degree_cap.
  bool complete_below_cap = false;
  /// No S-pair or generator was discarded for exceeding the cap, i.e. this is
  /// the full reduced basis.
  bool saturated = false;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(elements.size());
    for (const auto& g : elements) out.push_back(g.leading_monomial());
    return out;
  }
};

namespace detail {

/// Every monomial of one degree, indexed in degrevlex-decreasing order, with
/// the basis element (if any) whose leading monomial divides it.
struct DegreeTable {
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, int> index;
  std::vector<int> reducer;

  int at(const Monomial& m) const { return index.find(m)->second; }
};

}  // namespace detail

/// Reduces homogeneous polynomials modulo a growing list of monic polynomials
/// with pairwise non-dividing leading monomials. Dense per-degree accumulator.
class Reducer {
 public:
  Reducer(const PrimeField& k, int nvars) : field_(k), nvars_(nvars) {}

  explicit Reducer(const GroebnerBasis& gb) : field_(gb.field), nvars_(gb.nvars) {
    for (const auto& g : gb.elements) add(g);
  }

  const std::vector<Polynomial>& basis() const { return basis_; }
  const PrimeField& field() const { return field_; }

  void add(Polynomial g) {
    const int t = g.degree();
    basis_.push_back(std::move(g));
    const int id = static_cast<int>(basis_.size()) - 1;
    if (auto it = tables_.find(t); it != tables_.end()) {
      it->second.reducer[static_cast<std::size_t>(it->second.at(basis_.back().leading_monomial()))] = id;
    }
    tables_.erase(tables_.upper_bound(t), tables_.end());
  }

  void replace(int id, Polynomial g) { basis_[static_cast<std::size_t>(id)] = std::move(g); }

  const detail::DegreeTable& table(int t) {
    auto it = tables_.find(t);
    if (it != tables_.end()) return it->second;
    detail::DegreeTable tab;
    tab.monos = monomials_of_degree(nvars_, t);
    tab.index.reserve(tab.monos.size() * 2);
    tab.reducer.assign(tab.monos.size(), -1);
    for (std::size_t i = 0; i < tab.monos.size(); ++i) {
      tab.index.emplace(tab.monos[i], static_cast<int>(i));
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        if (basis_[b].leading_monomial().divides(tab.monos[i])) {
          tab.reducer[i] = static_cast<int>(b);
          break;
        }
      }
    }
    return tables_.emplace(t, std::move(tab)).first->second;
  }

  /// Dense coefficient vector of degree t, indexed like table(t).monos.
  std::vector<Coeff> zero_vector(int t) { return std::vector<Coeff>(table(t).monos.size(), 0); }

  void accumulate(std::vector<Coeff>& acc, int t, const Polynomial& p, Coeff scale,
                  const Monomial* shift = nullptr) {
    const auto& tab = table(t);
    for (const auto& term : p.terms()) {
      const Monomial m = shift ? term.mono * *shift : term.mono;
      auto& slot = acc[static_cast<std::size_t>(tab.at(m))];
      slot = field_.add(slot, field_.mul(scale, term.coeff));
    }
  }

  /// Full reduction in place; afterwards no nonzero entry sits on a reducible
  /// monomial.
  void reduce_dense(std::vector<Coeff>& acc, int t) {
    const auto& tab = table(t);
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
      const Coeff c = acc[idx];
      if (c == 0 || tab.reducer[idx] < 0) continue;
      const auto& g = basis_[static_cast<std::size_t>(tab.reducer[idx])];
      const Monomial q = tab.monos[idx] / g.leading_monomial();
      for (const auto& term : g.terms()) {
        auto& slot = acc[static_cast<std::size_t>(tab.at(term.mono * q))];
        slot = field_.sub(slot, field_.mul(c, term.coeff));
      }
    }
  }

  Polynomial to_polynomial(const std::vector<Coeff>& acc, int t) {
    const auto& tab = table(t);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i]) terms.push_back({acc[i], tab.monos[i]});
    }
    return Polynomial::from_sorted(nvars_, std::move(terms));
  }

  /// Normal form of an arbitrary polynomial, one homogeneous component at a time.
  Polynomial reduce(const Polynomial& f) {
    if (f.nvars() != nvars_) throw UsageError("polynomial lives in the wrong ring");
    std::map<int, std::vector<Term>> by_degree;
    for (const auto& term : f.terms()) by_degree[term.mono.degree()].push_back(term);
    Polynomial out(nvars_);
    for (auto it = by_degree.rbegin(); it != by_degree.rend(); ++it) {
      const int t = it->first;
      auto acc = zero_vector(t);
      accumulate(acc, t, Polynomial::from_sorted(nvars_, it->second), 1);
      reduce_dense(acc, t);
      out = out.linear_combination(1, to_polynomial(acc, t), 1, field_);
    }
    return out;
  }

 private:
  PrimeField field_;
  int nvars_;
  std::vector<Polynomial> basis_;
  std::map<int, detail::DegreeTable> tables_;
};

namespace detail {

struct Pair {
  int i;
  int j;
  Monomial lcm;
};

}  // namespace detail

/// Reduced degrevlex Groebner basis of the homogeneous ideal generated by
/// `gens`, valid through degree `cap`.
inline GroebnerBasis groebner(const std::vector<Polynomial>& gens, int cap, const PrimeField& k) {
  if (gens.empty()) throw UsageError("groebner: no generators");
  const int n = gens.front().nvars();
  std::map<int, std::vector<Polynomial>> pending_gens;
  bool saturated = true;
  for (const auto& f : gens) {
    if (f.nvars() != n) throw UsageError("groebner: generators live in different rings");
    if (f.is_zero()) throw UsageError("groebner: zero generator");
    if (!f.is_homogeneous()) throw UsageError("groebner: generator is not homogeneous");
    if (f.degree() <= cap) pending_gens[f.degree()].push_back(f);
    else saturated = false;
  }

  Reducer red(k, n);
  std::map<int, std::vector<detail::Pair>> pairs;
  auto lm = [&](int id) -> const Monomial& { return red.basis()[static_cast<std::size_t>(id)].leading_monomial(); };

  // Gebauer-Moeller update for a freshly added element h.
  auto update = [&](int h) {
    const Monomial& mh = lm(h);
    std::vector<detail::Pair> cand;
    for (int g = 0; g < h; ++g) cand.push_back({g, h, lcm(lm(g), mh)});
    std::vector<bool> keep(cand.size(), true);
    // Chain criterion among new pairs: drop (g1,h) when another new pair's lcm
    // properly divides it; among equal lcms keep one, preferring a coprime one.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm)) {
          if (!(cand[b].lcm == cand[a].lcm)) {
            keep[a] = false;
          } else {
            const bool a_coprime = coprime(lm(cand[a].i), mh);
            const bool b_coprime = coprime(lm(cand[b].i), mh);
            if (b_coprime || !a_coprime) keep[a] = false;
          }
        }
      }
    }
    // Product criterion; a surviving coprime pair reduces to zero.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (keep[a] && coprime(lm(cand[a].i), mh)) keep[a] = false;
    }
    // Old pairs made redundant by h.
    for (auto& [deg, bucket] : pairs) {
      std::erase_if(bucket, [&](const detail::Pair& p) {
        return mh.divides(p.lcm) && !(lcm(lm(p.i), mh) == p.lcm) && !(lcm(lm(p.j), mh) == p.lcm);
      });
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      const int deg = cand[a].lcm.degree();
      if (deg > cap) {
        saturated = false;
        continue;
      }
      pairs[deg].push_back(cand[a]);
    }
  };

  auto add_if_nonzero = [&](std::vector<Coeff>& acc, int t, std::vector<int>& new_ids) {
    red.reduce_dense(acc, t);
    Polynomial p = red.to_polynomial(acc, t);
    if (p.is_zero()) return;
    red.add(p.monic(k));
    const int id = static_cast<int>(red.basis().size()) - 1;
    new_ids.push_back(id);
    update(id);
  };

  for (int t = 0; t <= cap; ++t) {
    const bool more = !pending_gens.empty() || !pairs.empty();
    if (!more) break;
    std::vector<int> new_ids;
    if (auto it = pairs.find(t); it != pairs.end()) {
      auto bucket = std::move(it->second);
      pairs.erase(it);
      for (const auto& p : bucket) {
        const auto& gi = red.basis()[static_cast<std::size_t>(p.i)];
        const auto& gj = red.basis()[static_cast<std::size_t>(p.j)];
        const Monomial qi = p.lcm / gi.leading_monomial();
        const Monomial qj = p.lcm / gj.leading_monomial();
        auto acc = red.zero_vector(t);
        red.accumulate(acc, t, gi, 1, &qi);
        red.accumulate(acc, t, gj, k.neg(1), &qj);
        add_if_nonzero(acc, t, new_ids);
      }
    }
    if (auto it = pending_gens.find(t); it != pending_gens.end()) {
      auto bucket = std::move(it->second);
      pending_gens.erase(it);
      for (const auto& f : bucket) {
        auto acc = red.zero_vector(t);
        red.accumulate(acc, t, f, 1);
        add_if_nonzero(acc, t, new_ids);
      }
    }
    // Tails of this degree may mention leading monomials found later in it.
    for (int id : new_ids) {
      const auto& g = red.basis()[static_cast<std::size_t>(id)];
      auto acc = red.zero_vector(t);
      red.accumulate(acc, t, g, 1);
      const auto& tab = red.table(t);
      const int lead = tab.at(g.leading_monomial());
      acc[static_cast<std::size_t>(lead)] = 0;
      red.reduce_dense(acc, t);
      acc[static_cast<std::size_t>(lead)] = 1;
      red.replace(id, red.to_polynomial(acc, t));
    }
  }
  if (!pairs.empty() || !pending_gens.empty()) saturated = false;

  GroebnerBasis gb{k, n, red.basis(), cap, true, saturated};
  return gb;
}

/// Remainder of f modulo G; every degree of f must be <= G.degree_cap.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  for (const auto& t : f.terms()) {
    if (t.mono.degree() > gb.degree_cap) {
      throw UsageError("normal_form: degree " + std::to_string(t.mono.degree()) +
                       " exceeds the basis cap " + std::to_string(gb.degree_cap));
    }
  }
  Reducer red(gb);
  return red.reduce(f);
}

/// Leading monomials of a reduced basis; these are already minimal.
inline MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  const auto lms = gb.leading_monomials();
  MonomialIdeal ideal(gb.nvars, lms);
  if (ideal.size() != lms.size()) {
    throw std::logic_error("initial_ideal: basis is not reduced (leading monomials not minimal)");
  }
  return ideal;
}

}  // namespace gin
