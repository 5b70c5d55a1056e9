#pragma once

// Closed-form and iterative constructions of the reduced lex Groebner basis
// of I = <y1 + ... + yn, y1^2, ..., yn^2>.
//
// g_alpha = y^alpha + sum_{beta in P_alpha} y^beta for every modified Catalan
// path alpha, and F_ell collects y2^2..yn^2 with all g_alpha having
// ones(alpha) - 1 <= ell. The iterative route starts from F_1 and obtains
// each next generation from the remainders S_{alpha,k} of S(g_alpha, y_k^2)
// by the inverse of the matrix A_alpha (-2 on the diagonal, -1 elsewhere).

#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyckgb/combinatorics.hpp"
#include "dyckgb/groebner.hpp"
#include "dyckgb/linalg.hpp"
#include "dyckgb/polyring.hpp"

namespace dyckgb {

#ifdef NDEBUG
inline constexpr bool kCrossCheckByDefault = false;
#else
inline constexpr bool kCrossCheckByDefault = true;
#endif

/// y1 + ... + yn, y1^2, ..., yn^2.
inline std::vector<Polynomial> ideal_generators(std::size_t n) {
  std::vector<Polynomial> gens;
  std::vector<Term> lin;
  for (std::size_t i = 1; i <= n; ++i) lin.push_back(Term{Monomial::variable(n, i), 1});
  gens.emplace_back(n, std::move(lin));
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(Polynomial::monomial(Monomial::variable(n, i, 2)));
  return gens;
}

/// y2^2, ..., yn^2.
inline std::vector<Polynomial> square_generators(std::size_t n) {
  std::vector<Polynomial> out;
  for (std::size_t i = 2; i <= n; ++i) out.push_back(Polynomial::monomial(Monomial::variable(n, i, 2)));
  return out;
}

inline Polynomial g_alpha(const McpPath& alpha) {
  std::vector<Term> terms;
  terms.push_back(Term{path_monomial(alpha.path()), 1});
  for (const auto& beta : p_alpha(alpha)) terms.push_back(Term{path_monomial(beta), 1});
  return Polynomial::from_sorted(alpha.n(), std::move(terms));
}

/// Largest generation index needed for length n: floor((n - 1) / 2).
inline long final_generation(std::size_t n) { return (static_cast<long>(n) - 1) / 2; }

struct ExplicitFamily {
  std::size_t n = 0;
  long ell = -1;
  std::map<McpPath, Polynomial, std::greater<>> members;
  std::vector<Polynomial> squares;

  /// Every polynomial, sorted by leading monomial (descending).
  std::vector<Polynomial> basis() const {
    std::vector<Polynomial> out = squares;
    for (const auto& [alpha, g] : members) out.push_back(g);
    std::sort(out.begin(), out.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() > b.leading_monomial(); });
    return out;
  }

  /// Squares first, then members lex-descending: the divisor order used for
  /// the S-polynomial remainders.
  std::vector<Polynomial> divisors() const {
    std::vector<Polynomial> out = squares;
    for (const auto& [alpha, g] : members) out.push_back(g);
    return out;
  }

  GroebnerBasis as_groebner_basis() const {
    GroebnerBasis gb;
    gb.n = n;
    gb.polys = basis();
    gb.is_reduced = is_reduced_basis(gb);
    return gb;
  }

  friend bool operator==(const ExplicitFamily&, const ExplicitFamily&) = default;
};

inline ExplicitFamily build_family(std::size_t n, long ell) {
  ExplicitFamily f;
  f.n = n;
  f.ell = ell;
  f.squares = square_generators(n);
  for (const auto& alpha : enumerate_mcps(n, ell)) f.members.emplace(alpha, g_alpha(alpha));
  return f;
}

/// First disagreement between two bases (as sets of polynomials), if any.
inline std::optional<std::string> basis_difference(std::vector<Polynomial> a, std::vector<Polynomial> b) {
  auto by_lm = [](const Polynomial& p, const Polynomial& q) { return p.leading_monomial() > q.leading_monomial(); };
  std::sort(a.begin(), a.end(), by_lm);
  std::sort(b.begin(), b.end(), by_lm);
  auto label = [](const Polynomial& p) {
    const auto& m = p.leading_monomial();
    return m.is_square_free() ? "alpha=" + monomial_path(m).to_string() : "lm=" + to_text(m);
  };
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a[i] == b[i]) continue;
    if (a[i].leading_monomial() != b[i].leading_monomial()) {
      return "leading monomials differ: " + label(a[i]) + " vs " + label(b[i]);
    }
    for (std::size_t t = 0; t < std::max(a[i].size(), b[i].size()); ++t) {
      const bool ta = t < a[i].size();
      const bool tb = t < b[i].size();
      if (ta && tb && a[i].terms()[t] == b[i].terms()[t]) continue;
      // Report the lex-greatest monomial whose coefficients differ.
      const Monomial& where_mono = !tb || (ta && a[i].terms()[t].mono > b[i].terms()[t].mono)
                                       ? a[i].terms()[t].mono
                                       : b[i].terms()[t].mono;
      const std::string where = to_text(where_mono);
      return label(a[i]) + ": polynomials differ at term " + where;
    }
  }
  if (a.size() != b.size()) {
    return "basis sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// S-polynomial remainders

namespace detail {

inline void require_loop_range(const McpPath& alpha, std::size_t k, const char* what) {
  if (k < 2 || k > alpha.d() || alpha.at(k) != 1) {
    throw std::invalid_argument(std::string(what) + ": need 1 < k <= d with alpha_k = 1 (alpha=" +
                                alpha.to_string() + ", k=" + std::to_string(k) + ")");
  }
  if (alpha.d() + 2 > alpha.n()) {
    throw std::invalid_argument(std::string(what) + ": ones(alpha) - 1 exceeds floor((n-1)/2) - 1 for alpha=" +
                                alpha.to_string());
  }
}

/// Square-free monomials of degree r in y_{first..n}, cached per degree.
class TrailingProducts {
 public:
  TrailingProducts(std::size_t n, std::size_t first) : n_(n), first_(first) {}

  const std::vector<Monomial>& of_degree(std::size_t r) {
    auto it = cache_.find(r);
    if (it != cache_.end()) return it->second;
    std::vector<Monomial> out;
    const std::size_t avail = first_ <= n_ ? n_ - first_ + 1 : 0;
    for_each_subset(avail, r, [&](const std::vector<std::size_t>& idx) {
      Monomial::Exponent zero = 0;
      std::vector<Monomial::Exponent> e(n_, zero);
      for (auto i : idx) e[first_ - 1 + i] = 1;
      out.emplace_back(std::move(e));
    });
    return cache_.emplace(r, std::move(out)).first->second;
  }

 private:
  std::size_t n_;
  std::size_t first_;
  std::map<std::size_t, std::vector<Monomial>> cache_;
};

}  // namespace detail

/// S(g_alpha, y_k^2) divided by F_{ones(alpha)-1}.
inline Polynomial s_remainder_by_division(const McpPath& alpha, std::size_t k) {
  detail::require_loop_range(alpha, k, "s_remainder");
  const auto family = build_family(alpha.n(), static_cast<long>(alpha.ones()) - 1);
  const auto divisors = family.divisors();
  const auto s = s_polynomial(g_alpha(alpha), Polynomial::monomial(Monomial::variable(alpha.n(), k, 2)));
  return reduce(s, divisors);
}

/// Closed form:
///   sum_{r=2}^{m+1} sum_{v in U_{alpha,r-1}, v_k = 0} (-r)   y^v e_r
/// + sum_{r=2}^{m}   sum_{v in U_{alpha,r-1}, v_k = 1} (1-r)  y^v e_r
/// with m = ones(alpha) and e_r the square-free degree-r products of
/// y_{d+1}, ..., y_n.
inline Polynomial s_remainder_closed_form(const McpPath& alpha, std::size_t k) {
  detail::require_loop_range(alpha, k, "s_remainder");
  const std::size_t n = alpha.n();
  const std::size_t m = alpha.ones();
  detail::TrailingProducts tails(n, alpha.d() + 1);
  std::vector<Term> terms;
  for (std::size_t r = 2; r <= m + 1; ++r) {
    const auto& e_r = tails.of_degree(r);
    if (e_r.empty()) continue;
    for (const auto& v : u_alpha_r(alpha, r - 1)) {
      Rational c;
      if (v.at(k) == 0) {
        c = -static_cast<long>(r);
      } else if (r <= m) {
        c = 1 - static_cast<long>(r);
      } else {
        continue;
      }
      const Monomial head = path_monomial(v.padded(n));
      for (const auto& tail : e_r) terms.push_back(Term{head * tail, c});
    }
  }
  return Polynomial(n, std::move(terms));
}

/// S_{alpha,k}. With cross_check, both routes are computed and must agree.
inline Polynomial s_remainder(const McpPath& alpha, std::size_t k, bool cross_check = kCrossCheckByDefault) {
  auto closed = s_remainder_closed_form(alpha, k);
  if (cross_check) {
    const auto divided = s_remainder_by_division(alpha, k);
    if (!(divided == closed)) {
      throw VerificationError("closed-form S-remainder disagrees with division for alpha=" + alpha.to_string() +
                              ", k=" + std::to_string(k));
    }
  }
  return closed;
}

// ---------------------------------------------------------------------------
// The matrices A_alpha and M_alpha = A_alpha^{-1}

struct PhiMatrix {
  std::size_t m = 0;
  RationalMatrix a;
  RationalMatrix m_inv;
};

/// M_alpha from its closed form: (-m on the diagonal, 1 elsewhere) / (m + 1).
inline RationalMatrix phi_inverse_closed_form(std::size_t m) {
  RationalMatrix out(m, m);
  const Rational scale(1, static_cast<unsigned long>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out(i, j) = (i == j ? Rational(-static_cast<long>(m)) : Rational(1)) * scale;
    }
  }
  return out;
}

/// Dimension m = ones(alpha). The inverse is computed by elimination and
/// checked against the closed form.
inline PhiMatrix phi_matrix(std::size_t m) {
  if (m < 1) throw std::invalid_argument("phi_matrix: dimension must be positive");
  PhiMatrix out;
  out.m = m;
  out.a = RationalMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.a(i, j) = i == j ? -2 : -1;
  }
  auto inv = invert(out.a);
  if (!inv) throw VerificationError("phi_matrix: A is singular");
  if (!(*inv == phi_inverse_closed_form(m))) throw VerificationError("phi_matrix: inverse disagrees with closed form");
  out.m_inv = std::move(*inv);
  return out;
}

inline PhiMatrix phi_matrix(const McpPath& alpha) { return phi_matrix(alpha.ones()); }

/// Coefficient of y^{u(alpha,k_i)} y_{d+1} y_{d+2} in S_{alpha,k_j}, taken
/// from the given remainders (ordered by k_1 < ... < k_m).
inline RationalMatrix coefficient_matrix(const McpPath& alpha, const std::vector<Polynomial>& remainders) {
  const auto ks = alpha.path().one_positions();
  if (remainders.size() != ks.size()) throw std::invalid_argument("coefficient_matrix: one remainder per 1-position");
  const std::size_t n = alpha.n();
  RationalMatrix out(ks.size(), ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Monomial mono = path_monomial(u_alpha_one_k(alpha, ks[i]).padded(n)) * Monomial::variable(n, alpha.d() + 1) *
                    Monomial::variable(n, alpha.d() + 2);
    for (std::size_t j = 0; j < ks.size(); ++j) out(i, j) = remainders[j].coefficient(mono);
  }
  return out;
}

/// phi(S_{alpha,k_i}) = sum_j c_ij S_{alpha,k_j} with [c_ij] = M_alpha.
inline std::vector<Polynomial> phi_combine(const McpPath& alpha, const std::vector<Polynomial>& remainders) {
  const auto phi = phi_matrix(alpha);
  if (remainders.size() != phi.m) throw std::invalid_argument("phi_combine: one remainder per 1-position");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < phi.m; ++i) {
    std::map<Monomial, Rational, std::greater<>> acc;
    for (std::size_t j = 0; j < phi.m; ++j) {
      const auto& c = phi.m_inv(i, j);
      for (const auto& t : remainders[j].terms()) acc[t.mono] += c * t.coeff;
    }
    out.push_back(Polynomial::from_map(alpha.n(), acc));
  }
  return out;
}

/// For each 1-position k_i of alpha, phi(S_{alpha,k_i}); each result is
/// checked to equal g of alpha_child(alpha, k_i).
inline std::map<std::size_t, Polynomial> phi_apply(const McpPath& alpha, bool cross_check = kCrossCheckByDefault) {
  if (alpha.ones() < 2) {
    throw std::invalid_argument("phi_apply: alpha=" + alpha.to_string() + " has no 1-position k >= 2");
  }
  const auto ks = alpha.path().one_positions();
  std::vector<Polynomial> rems;
  for (auto k : ks) rems.push_back(s_remainder(alpha, k, cross_check));
  auto images = phi_combine(alpha, rems);
  std::map<std::size_t, Polynomial> out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto child = alpha_child(alpha, ks[i]);
    if (!(images[i] == g_alpha(child))) {
      throw VerificationError("phi image for alpha=" + alpha.to_string() + ", k=" + std::to_string(ks[i]) +
                              " is not g of " + child.to_string());
    }
    out.emplace(ks[i], std::move(images[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The generation loop

/// g_011 from the ideal generators: (g1^2 - sum yi^2)/2 - y1 g1 + y1^2.
inline Polynomial seed_g011(std::size_t n) {
  const auto gens = ideal_generators(n);
  const auto& g1 = gens[0];
  Polynomial sum_sq(n);
  for (std::size_t i = 1; i <= n; ++i) sum_sq += gens[i];
  const auto y1 = Polynomial::variable(n, 1);
  return (g1 * g1 - sum_sq) * Rational(1, 2) - y1 * g1 + gens[1];
}

struct GenerationLog {
  long from_ell = 0;
  std::size_t parents = 0;
  std::size_t phi_columns = 0;  // sum of ones(alpha) over parents
  std::size_t new_members = 0;
};

struct LoopOptions {
  bool parallel = false;
  std::ostream* trace = nullptr;
  /// Debug hook: called on every loop-built generation before it is
  /// compared with the closed form.
  std::function<void(ExplicitFamily&)> tamper;
};

struct LoopStats {
  std::vector<GenerationLog> generations;
  std::size_t phi_columns() const {
    std::size_t s = 0;
    for (const auto& g : generations) s += g.phi_columns;
    return s;
  }
};

namespace detail {

struct ParentOutput {
  McpPath alpha;
  std::vector<std::pair<McpPath, Polynomial>> children;
};

/// S-remainders against the loop's own family, combined by M_alpha.
inline ParentOutput expand_parent(const McpPath& alpha, const std::vector<Polynomial>& divisors) {
  const std::size_t n = alpha.n();
  const auto g = g_alpha(alpha);
  const auto ks = alpha.path().one_positions();
  std::vector<Polynomial> rems;
  for (auto k : ks) {
    rems.push_back(reduce(s_polynomial(g, Polynomial::monomial(Monomial::variable(n, k, 2))), divisors));
  }
  ParentOutput out{alpha, {}};
  for (auto& image : phi_combine(alpha, rems)) {
    if (image.is_zero() || !image.leading_monomial().is_square_free()) {
      throw VerificationError("phi image for alpha=" + alpha.to_string() + " has no square-free leading monomial");
    }
    McpPath child(monomial_path(image.leading_monomial()));
    out.children.emplace_back(std::move(child), std::move(image));
  }
  return out;
}

}  // namespace detail

/// Builds F_{floor((n-1)/2)} from F_1 generation by generation, checking
/// each generation against build_family.
inline ExplicitFamily generation_loop(std::size_t n, const LoopOptions& opts = {}, LoopStats* stats = nullptr) {
  if (n < 1) throw std::invalid_argument("generation_loop: n must be positive");
  const long last = final_generation(n);
  const auto gens = ideal_generators(n);

  ExplicitFamily fam;
  fam.n = n;
  fam.ell = std::min<long>(1, last);
  fam.squares = square_generators(n);
  fam.members.emplace(McpPath(BitPath::zeros(n).with(1, 1)), gens[0]);
  if (auto g011 = seed_g011(n); !g011.is_zero()) {
    fam.members.emplace(McpPath(monomial_path(g011.leading_monomial())), std::move(g011));
  }
  auto check = [&](ExplicitFamily& f) {
    if (opts.tamper) opts.tamper(f);
    const auto expected = build_family(n, f.ell);
    if (auto diff = basis_difference(f.basis(), expected.basis())) {
      throw VerificationError("generation ell=" + std::to_string(f.ell) + " (n=" + std::to_string(n) +
                              "): " + *diff);
    }
  };
  check(fam);

  for (long ell = 1; ell < last; ++ell) {
    std::vector<McpPath> parents;
    for (const auto& [alpha, g] : fam.members) {
      if (static_cast<long>(alpha.ones()) - 1 == ell) parents.push_back(alpha);
    }
    const auto divisors = fam.divisors();
    std::vector<detail::ParentOutput> results;
    if (opts.parallel && parents.size() > 1) {
      std::vector<std::future<detail::ParentOutput>> futures;
      for (const auto& a : parents) {
        futures.push_back(std::async(std::launch::async, [&divisors, a] { return detail::expand_parent(a, divisors); }));
      }
      for (auto& f : futures) results.push_back(f.get());
    } else {
      for (const auto& a : parents) results.push_back(detail::expand_parent(a, divisors));
    }

    GenerationLog log{ell, parents.size(), 0, 0};
    std::map<McpPath, Polynomial, std::greater<>> fresh;
    for (auto& r : results) {
      log.phi_columns += r.alpha.ones();
      if (opts.trace) *opts.trace << "generation " << ell << "->" << ell + 1 << ": alpha=" << r.alpha.to_string()
                                  << " columns=" << r.alpha.ones() << " children=";
      bool first = true;
      for (auto& [child, poly] : r.children) {
        if (opts.trace) *opts.trace << (first ? "" : ",") << child.to_string();
        first = false;
        auto [it, inserted] = fresh.emplace(child, poly);
        if (!inserted && !(it->second == poly)) {
          throw VerificationError("child " + child.to_string() + " produced twice with different polynomials");
        }
      }
      if (opts.trace) *opts.trace << '\n';
    }
    for (auto& [child, poly] : fresh) {
      if (fam.members.emplace(child, std::move(poly)).second) ++log.new_members;
    }
    fam.ell = ell + 1;
    if (stats) stats->generations.push_back(log);
    check(fam);
  }
  return fam;
}

}  // namespace dyckgb
