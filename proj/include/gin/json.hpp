#pragma once

// JSON forms of series, monomials, polynomials, ideals, instances, reports
// and incremental traces. Object keys come out sorted, so output is
// byte-stable for fixed inputs. Integers outside the int64 range are written
// as decimal strings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gin/conjectures.hpp"
#include "gin/generic.hpp"
#include "gin/monomial_ideal.hpp"
#include "gin/polynomial.hpp"
#include "gin/series.hpp"
#include "gin/structure.hpp"

namespace gin {

using Json = nlohmann::json;

inline Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  throw UsageError("expected an integer");
}

inline Json big_vector_to_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big_to_json(x));
  return a;
}

inline std::vector<BigInt> big_vector_from_json(const Json& j) {
  std::vector<BigInt> v;
  for (const auto& x : j) v.push_back(big_from_json(x));
  return v;
}

inline Json series_to_json(const TruncatedSeries& s) {
  return Json{{"bound", s.bound()}, {"coeffs", big_vector_to_json(s.coeffs())}};
}

inline TruncatedSeries series_from_json(const Json& j) {
  const auto bound = j.at("bound").get<std::size_t>();
  auto coeffs = big_vector_from_json(j.at("coeffs"));
  if (coeffs.size() != bound + 1) throw UsageError("series JSON: coeffs must have bound + 1 entries");
  return TruncatedSeries(bound, coeffs);
}

inline Json monomial_to_json(const Monomial& m) { return m.exponent_vector(); }

inline Monomial monomial_from_json(const Json& j) {
  const auto e = j.get<std::vector<int>>();
  return Monomial(std::span<const int>(e));
}

inline Json monomials_to_json(const std::vector<Monomial>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(monomial_to_json(m));
  return a;
}

inline Json polynomial_to_json(const Polynomial& p) {
  Json a = Json::array();
  for (const auto& t : p.terms()) a.push_back(Json::array({t.coeff, monomial_to_json(t.mono)}));
  return a;
}

inline Polynomial polynomial_from_json(const Json& j, int nvars, const PrimeField& k) {
  std::vector<Term> terms;
  for (const auto& t : j) terms.push_back({t.at(0).get<Coeff>(), monomial_from_json(t.at(1))});
  return Polynomial::from_terms(nvars, std::move(terms), k);
}

inline Json ideal_to_json(const MonomialIdeal& ideal) { return monomials_to_json(ideal.generators()); }

inline MonomialIdeal ideal_from_json(const Json& j, int nvars) {
  std::vector<Monomial> gens;
  for (const auto& m : j) gens.push_back(monomial_from_json(m));
  return MonomialIdeal(nvars, std::move(gens));
}

inline Json instance_to_json(const GenericInstance& inst) {
  Json forms = Json::array();
  for (const auto& f : inst.forms) forms.push_back(polynomial_to_json(f));
  return Json{{"type", inst.type.to_string()},
              {"prime", inst.prime},
              {"seed", inst.seed},
              {"resample_count", inst.resample_count},
              {"forms", forms}};
}

inline GenericInstance instance_from_json(const Json& j) {
  GenericInstance inst{DegreeType::parse(j.at("type").get<std::string>()), j.at("prime").get<std::uint32_t>(),
                       j.at("seed").get<std::uint64_t>(), j.at("resample_count").get<std::uint64_t>(), {}};
  const PrimeField k(inst.prime);
  for (const auto& f : j.at("forms")) inst.forms.push_back(polynomial_from_json(f, inst.type.n(), k));
  return inst;
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "violated") return Verdict::violated;
  if (s == "out-of-regime-note") return Verdict::out_of_regime;
  throw UsageError("unknown verdict '" + s + "'");
}

inline Regime regime_from_string(const std::string& s) {
  if (s == "known-proven") return Regime::known_proven;
  if (s == "covered") return Regime::covered;
  if (s == "open") return Regime::open;
  throw UsageError("unknown regime '" + s + "'");
}

inline Json witness_to_json(const Witness& w) {
  Json j = Json::object();
  if (w.monomial) j["monomial"] = monomial_to_json(*w.monomial);
  if (w.degree) {
    j["degree"] = *w.degree;
    j["computed"] = big_to_json(w.computed);
    j["expected"] = big_to_json(w.expected);
  }
  if (w.index) j["index"] = w.index;
  return j;
}

inline Witness witness_from_json(const Json& j) {
  Witness w;
  if (j.contains("monomial")) w.monomial = monomial_from_json(j.at("monomial"));
  if (j.contains("degree")) {
    w.degree = j.at("degree").get<std::size_t>();
    w.computed = big_from_json(j.at("computed"));
    w.expected = big_from_json(j.at("expected"));
  }
  if (j.contains("index")) w.index = j.at("index").get<int>();
  return w;
}

inline Json report_to_json(const ConjectureReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(witness_to_json(x));
  Json j{{"conjecture", r.conjecture},
         {"type", r.type.to_string()},
         {"prime", r.prime},
         {"seed", r.seed},
         {"resample_count", r.resample_count},
         {"verdict", to_string(r.verdict)},
         {"regime", to_string(r.regime)},
         {"witnesses", w},
         {"hf_computed", big_vector_to_json(r.hf_computed)},
         {"hf_expected", big_vector_to_json(r.hf_expected)}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline ConjectureReport report_from_json(const Json& j) {
  ConjectureReport r;
  r.conjecture = j.at("conjecture").get<std::string>();
  r.type = DegreeType::parse(j.at("type").get<std::string>());
  r.prime = j.at("prime").get<std::uint32_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.resample_count = j.value("resample_count", std::uint64_t{0});
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.regime = regime_from_string(j.at("regime").get<std::string>());
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(witness_from_json(w));
  r.hf_computed = big_vector_from_json(j.at("hf_computed"));
  r.hf_expected = big_vector_from_json(j.at("hf_expected"));
  r.note = j.value("note", std::string{});
  return r;
}

inline Json step_to_json(const IncrementalStep& s) {
  std::vector<std::size_t> redundant;
  for (std::size_t k = 0; k < s.redundant.size(); ++k) {
    if (s.redundant[k]) redundant.push_back(s.S.at(k));
  }
  Json j{{"step", s.i},
         {"rows", s.rows},
         {"cols", s.cols},
         {"rank", s.rank},
         {"kept_columns", s.kept_columns},
         {"S", s.S},
         {"added", monomials_to_json(s.added)},
         {"redundant_positions", redundant}};
  if (s.finding) j["finding"] = *s.finding;
  return j;
}

}  // namespace gin
