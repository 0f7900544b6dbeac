#pragma once

#include "agl/gt.hpp"
#include "agl/relations.hpp"
#include "agl/skew.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace agl {

using Json = nlohmann::ordered_json;

inline Json to_json(const Poly& p)
{
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json exps = Json::object();
    for (const auto& [v, e] : it->first.entries())
      exps[to_string(v)] = e;
    terms.push_back({{"coeff", to_string(it->second)}, {"exps", exps}});
  }
  return terms;
}

inline Poly poly_from_json(const Json& j)
{
  Poly p;
  for (const auto& term : j) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [name, e] : term.at("exps").items())
      entries.emplace_back(parse_var(name), e.get<unsigned>());
    p += Poly::monomial(Monomial::from_entries(std::move(entries)), parse_rational(term.at("coeff").get<std::string>()));
  }
  return p;
}

/// {num: [{coeff, exps}], den: [{a, b?, c, power}], scale}
inline Json to_json(const RatFunc& r)
{
  Json den = Json::array();
  for (const auto& [f, e] : r.den()) {
    Json factor = {{"a", to_string(f.a())}};
    if (f.b())
      factor["b"] = to_string(*f.b());
    factor["c"] = to_string(f.c());
    factor["power"] = e;
    den.push_back(std::move(factor));
  }
  return {{"num", to_json(r.num())}, {"den", den}, {"scale", to_string(r.scale())}};
}

inline RatFunc ratfunc_from_json(const Json& j)
{
  std::vector<LinearFactor> den;
  Rational sign = 1;
  for (const auto& f : j.at("den")) {
    const VarId a = parse_var(f.at("a").get<std::string>());
    const Rational c = parse_rational(f.at("c").get<std::string>());
    LinearFactor factor = LinearFactor::shifted_var(a, c);
    if (f.contains("b")) {
      auto [s, lf] = LinearFactor::difference(a, parse_var(f.at("b").get<std::string>()), c);
      sign *= s;
      factor = lf;
    }
    const unsigned power = f.value("power", 1U);
    for (unsigned k = 0; k < power; ++k)
      den.push_back(factor);
  }
  Rational scale = parse_rational(j.at("scale").get<std::string>());
  return RatFunc::from_parts(poly_from_json(j.at("num")), den, Rational(scale / sign)).normalize();
}

/// {terms: [{shift: {"k,i": p}, coeff}]} with left coefficients.
inline Json to_json(const SkewElement& u)
{
  Json terms = Json::array();
  for (const auto& [mu, a] : u.terms()) {
    Json shift = Json::object();
    for (const auto& [v, p] : mu.entries())
      shift[ShiftVector::key_of(v)] = p;
    terms.push_back({{"shift", shift}, {"coeff", to_json(a)}});
  }
  return {{"terms", terms}};
}

inline SkewElement skew_from_json(const Json& j)
{
  SkewElement u;
  for (const auto& term : j.at("terms")) {
    std::vector<ShiftVector::Entry> entries;
    for (const auto& [key, p] : term.at("shift").items())
      entries.emplace_back(ShiftVector::var_of_key(key), p.get<long>());
    u += SkewElement::left(ratfunc_from_json(term.at("coeff")), ShiftVector::from_entries(std::move(entries)));
  }
  return u;
}

/// Dense rows of exact rationals as strings.
inline Json to_json(const Matrix& m)
{
  Json rows = Json::array();
  for (const auto& row : m.dense()) {
    Json r = Json::array();
    for (const auto& v : row)
      r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

/// {suite, results: [{id, status, anchor, witness?}]}; no timings.
inline Json to_json(const VerificationReport& report)
{
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json entry = {{"id", r.id}, {"status", r.passed ? "pass" : "fail"}, {"anchor", r.anchor}};
    if (r.witness)
      entry["witness"] = to_json(*r.witness);
    else if (r.matrix_witness)
      entry["witness"] = to_json(*r.matrix_witness);
    results.push_back(std::move(entry));
  }
  return {{"suite", report.suite}, {"results", results}};
}

inline Json to_json(const GTPattern& p)
{
  Json rows = Json::array();
  for (int k = p.n(); k >= 1; --k) {
    Json r = Json::array();
    for (const auto& v : p.row(k))
      r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Json to_json(const ModuleRealization& mod)
{
  Json basis = Json::array();
  for (const auto& p : mod.basis)
    basis.push_back(to_json(p));
  Json mats = Json::object();
  for (const auto& [name, m] : mod.matrices)
    mats[name] = to_json(m);
  return {{"dimension", mod.dim()}, {"basis", basis}, {"matrices", mats}};
}

}  // namespace agl
