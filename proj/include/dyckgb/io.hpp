#pragma once

// JSON forms of the library's values.
//
//   polynomial: {"n": 4, "terms": [{"c": "1/1", "e": [0,1,1,0]}, ...]}
//               terms lex-descending
//   family:     {"n", "ell", "squares": [poly...],
//                "members": [{"alpha": "0110", "poly": {...}}, ...]}
//               members lex-descending by alpha
//   basis:      {"n", "reduced", "polys": [poly...]}
//   summary:    [{"k": 0, "shape": [4, 0], "dim": 1}, ...]
//   tableau:    [[row1...], [row2...]]

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "dyckgb/apolarity.hpp"
#include "dyckgb/combinatorics.hpp"
#include "dyckgb/explicit_basis.hpp"
#include "dyckgb/groebner.hpp"
#include "dyckgb/polyring.hpp"

namespace dyckgb {

using Json = nlohmann::json;

inline Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json e = Json::array();
    for (auto x : t.mono.exponents()) e.push_back(static_cast<int>(x));
    terms.push_back({{"c", to_string(t.coeff)}, {"e", std::move(e)}});
  }
  return {{"n", p.n()}, {"terms", std::move(terms)}};
}

inline Polynomial polynomial_from_json(const Json& j) {
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto e = t.at("e").get<std::vector<int>>();
    if (e.size() != n) throw std::invalid_argument("polynomial json: exponent vector length differs from n");
    terms.push_back(Term{Monomial::from_exponents(e), parse_rational(t.at("c").get<std::string>())});
  }
  Polynomial p(n, terms);
  if (p.size() != terms.size() || !std::equal(terms.begin(), terms.end(), p.terms().begin())) {
    throw std::invalid_argument("polynomial json: terms must be distinct, nonzero and lex-descending");
  }
  return p;
}

inline Json to_json(const ExplicitFamily& f) {
  Json squares = Json::array();
  for (const auto& s : f.squares) squares.push_back(to_json(s));
  Json members = Json::array();
  for (const auto& [alpha, g] : f.members) members.push_back({{"alpha", alpha.to_string()}, {"poly", to_json(g)}});
  return {{"n", f.n}, {"ell", f.ell}, {"squares", std::move(squares)}, {"members", std::move(members)}};
}

inline ExplicitFamily family_from_json(const Json& j) {
  ExplicitFamily f;
  f.n = j.at("n").get<std::size_t>();
  f.ell = j.at("ell").get<long>();
  for (const auto& s : j.at("squares")) f.squares.push_back(polynomial_from_json(s));
  for (const auto& m : j.at("members")) {
    f.members.emplace(McpPath::parse(m.at("alpha").get<std::string>()), polynomial_from_json(m.at("poly")));
  }
  return f;
}

inline Json to_json(const GroebnerBasis& gb) {
  Json polys = Json::array();
  for (const auto& p : gb.polys) polys.push_back(to_json(p));
  return {{"n", gb.n}, {"reduced", gb.is_reduced}, {"polys", std::move(polys)}};
}

inline GroebnerBasis basis_from_json(const Json& j) {
  GroebnerBasis gb;
  gb.n = j.at("n").get<std::size_t>();
  gb.is_reduced = j.at("reduced").get<bool>();
  for (const auto& p : j.at("polys")) gb.polys.push_back(polynomial_from_json(p));
  return gb;
}

inline Json to_json(const GradedSummary& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) {
    rows.push_back({{"k", r.k}, {"shape", {r.shape_first, r.shape_second}}, {"dim", r.dim}});
  }
  return rows;
}

inline GradedSummary summary_from_json(const Json& rows) {
  GradedSummary s;
  for (const auto& r : rows) {
    GradedRow row;
    row.k = r.at("k").get<std::size_t>();
    row.shape_first = r.at("shape").at(0).get<std::size_t>();
    row.shape_second = r.at("shape").at(1).get<std::size_t>();
    row.dim = r.at("dim").get<std::size_t>();
    s.rows.push_back(row);
  }
  if (!s.rows.empty()) s.n = s.rows.front().shape_first + s.rows.front().shape_second;
  return s;
}

inline Json to_json(const Tableau& t) { return Json::array({t.row1, t.row2}); }

inline Tableau tableau_from_json(const Json& j) {
  Tableau t;
  t.row1 = j.at(0).get<std::vector<std::size_t>>();
  t.row2 = j.at(1).get<std::vector<std::size_t>>();
  t.n = t.row1.size() + t.row2.size();
  validate(t);
  return t;
}

}  // namespace dyckgb
