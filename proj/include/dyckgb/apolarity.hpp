#pragma once

// Inverse-system side of R/I: the differential pairing, the orthogonal
// complement H of I, Specht polynomials of two-row tableaux and the graded
// decomposition of the quotient.

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dyckgb/combinatorics.hpp"
#include "dyckgb/explicit_basis.hpp"
#include "dyckgb/groebner.hpp"
#include "dyckgb/polyring.hpp"

namespace dyckgb {

/// p(d/dy1, ..., d/dyn) applied to q.
inline Polynomial apply_diff(const Polynomial& p, const Polynomial& q) {
  p.check_n(q.n());
  const std::size_t n = q.n();
  std::map<Monomial, Rational, std::greater<>> acc;
  for (const auto& s : p.terms()) {
    for (const auto& t : q.terms()) {
      if (!s.mono.divides(t.mono)) continue;
      // d^a/dy^a y^b = prod b_i! / (b_i - a_i)! y^(b-a)
      mpz_class falling = 1;
      for (std::size_t i = 0; i < n; ++i) {
        for (unsigned j = 0; j < s.mono[i]; ++j) falling *= t.mono[i] - j;
      }
      acc[t.mono / s.mono] += s.coeff * t.coeff * Rational(falling);
    }
  }
  return Polynomial::from_map(n, acc);
}

/// <p, q> = (p(d/dy) q)(0).
inline Rational scalar_product(const Polynomial& p, const Polynomial& q) {
  return apply_diff(p, q).coefficient(Monomial(q.n()));
}

struct SpechtPolynomial {
  Tableau tableau;
  Polynomial poly;
};

/// prod over columns c of (y_{row1[c]} - y_{row2[c]}).
inline SpechtPolynomial specht(const Tableau& t) {
  validate(t);
  const std::size_t n = t.n;
  Polynomial g = Polynomial::constant(n, 1);
  for (std::size_t c = 0; c < t.k(); ++c) {
    g = g * (Polynomial::variable(n, t.row1[c]) - Polynomial::variable(n, t.row2[c]));
  }
  const auto& trailing = g.trailing_term();
  const Rational sign = t.k() % 2 == 0 ? 1 : -1;
  if (trailing.coeff != sign || monomial_path(trailing.mono) != tableau_to_path(t)) {
    throw VerificationError("specht: trailing term is not y^T");
  }
  return SpechtPolynomial{t, std::move(g)};
}

/// Full vanishing of g(d/dy) q for every generator g of I.
inline bool in_orthogonal_complement(const Polynomial& q) {
  for (const auto& g : ideal_generators(q.n())) {
    if (!apply_diff(g, q).is_zero()) return false;
  }
  return true;
}

/// All G_T for T of shape (n-k, k), k = 0..floor(n/2). Independence is
/// certified by pairwise distinct trailing monomials.
inline std::vector<SpechtPolynomial> bprime_basis(std::size_t n) {
  if (n < 1) throw std::invalid_argument("bprime_basis: n must be positive");
  std::vector<SpechtPolynomial> out;
  std::map<Monomial, std::size_t> trailing;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    for (const auto& t : enumerate_syt_two_rows(n, k)) {
      auto sp = specht(t);
      if (!trailing.emplace(sp.poly.trailing_term().mono, out.size()).second) {
        throw VerificationError("bprime_basis: repeated trailing monomial");
      }
      out.push_back(std::move(sp));
    }
  }
  return out;
}

/// Writes h as a combination of the given Specht polynomials by peeling off
/// lex-least terms (the trailing monomials are distinct). nullopt when h is
/// not in their span.
inline std::optional<std::vector<std::pair<std::size_t, Rational>>> express_in_specht_basis(
    Polynomial h, const std::vector<SpechtPolynomial>& basis) {
  std::map<Monomial, std::size_t> by_trailing;
  for (std::size_t i = 0; i < basis.size(); ++i) by_trailing.emplace(basis[i].poly.trailing_term().mono, i);
  std::vector<std::pair<std::size_t, Rational>> coeffs;
  while (!h.is_zero()) {
    const auto& low = h.trailing_term();
    auto it = by_trailing.find(low.mono);
    if (it == by_trailing.end()) return std::nullopt;
    const auto& g = basis[it->second].poly;
    const Rational c = low.coeff / g.trailing_term().coeff;
    coeffs.emplace_back(it->second, c);
    h -= g * c;
  }
  return coeffs;
}

struct GradedRow {
  std::size_t k = 0;
  std::size_t shape_first = 0;
  std::size_t shape_second = 0;
  std::size_t dim = 0;

  friend bool operator==(const GradedRow&, const GradedRow&) = default;
};

struct GradedSummary {
  std::size_t n = 0;
  std::vector<GradedRow> rows;

  friend bool operator==(const GradedSummary&, const GradedSummary&) = default;
};

/// Degree k carries the irreducible of shape (n-k, k). Dimensions are
/// cross-checked against the Hilbert series of F and the SYT counts.
inline GradedSummary graded_summary(std::size_t n) {
  if (n < 1) throw std::invalid_argument("graded_summary: n must be positive");
  const auto hilbert = hilbert_series(build_family(n, final_generation(n)).as_groebner_basis());
  GradedSummary s;
  s.n = n;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    const auto dim = enumerate_syt_two_rows(n, k).size();
    if (k >= hilbert.size() || hilbert[k] != dim) {
      throw VerificationError("graded_summary: Hilbert coefficient of q^" + std::to_string(k) +
                              " does not match the SYT count for n=" + std::to_string(n));
    }
    s.rows.push_back(GradedRow{k, n - k, k, dim});
  }
  if (hilbert.size() != s.rows.size()) throw VerificationError("graded_summary: Hilbert series too long");
  return s;
}

/// "s(4) + s(3,1)*q + s(2,2)*q^2"
inline std::string to_text(const GradedSummary& s) {
  std::string out;
  for (const auto& r : s.rows) {
    if (!out.empty()) out += " + ";
    out += "s(" + std::to_string(r.shape_first);
    if (r.shape_second > 0) out += "," + std::to_string(r.shape_second);
    out += ")";
    if (r.k == 1) out += "*q";
    if (r.k > 1) out += "*q^" + std::to_string(r.k);
  }
  return out;
}

struct ClosureResult {
  bool closed = true;
  std::string failure;

  explicit operator bool() const noexcept { return closed; }
};

/// Random transpositions applied to members of F and to Specht polynomials:
/// permuted basis elements must stay in I, permuted G_T must stay in H and,
/// for n <= 6, in the span of the degree-k Specht polynomials.
inline ClosureResult verify_group_action_closure(std::size_t n, std::size_t trials, std::uint64_t seed = 1) {
  const auto fam = build_family(n, final_generation(n));
  const auto gb = fam.as_groebner_basis();
  const auto polys = fam.basis();
  const auto bprime = bprime_basis(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> var(1, n);
  std::uniform_int_distribution<std::size_t> pick_f(0, polys.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_t(0, bprime.size() - 1);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = i + 1;
    const auto a = var(rng);
    const auto b = var(rng);
    std::swap(sigma[a - 1], sigma[b - 1]);
    const std::string label = "sigma=(" + std::to_string(a) + " " + std::to_string(b) + ")";

    const auto& f = polys[pick_f(rng)];
    if (!normal_form(permute(f, sigma), gb).is_zero()) {
      return {false, label + " moves " + to_text(f) + " out of the ideal"};
    }
    const auto& sp = bprime[pick_t(rng)];
    const auto moved = permute(sp.poly, sigma);
    if (!in_orthogonal_complement(moved)) {
      return {false, label + " moves G_T=" + to_text(sp.poly) + " out of the orthogonal complement"};
    }
    if (n <= 6) {
      std::vector<SpechtPolynomial> same_degree;
      for (const auto& x : bprime) {
        if (x.tableau.k() == sp.tableau.k()) same_degree.push_back(x);
      }
      if (!express_in_specht_basis(moved, same_degree)) {
        return {false, label + " moves G_T=" + to_text(sp.poly) + " out of its Specht module"};
      }
    }
  }
  return {};
}

}  // namespace dyckgb
