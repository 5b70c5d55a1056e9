#pragma once

// Generic lex Groebner machinery: multivariate division, S-polynomials,
// Buchberger's algorithm with the normal pair-selection strategy, and the
// reduced basis.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyckgb/polyring.hpp"

namespace dyckgb {

/// Raised when a self-check built into an algorithm fails.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

namespace detail {

using WorkPoly = std::map<Monomial, Rational, std::greater<>>;

inline void axpy(WorkPoly& acc, const Polynomial& g, const Monomial& m, const Rational& c) {
  for (const auto& t : g.terms()) {
    auto [it, inserted] = acc.try_emplace(t.mono * m, t.coeff * c);
    if (!inserted) {
      it->second += t.coeff * c;
      if (it->second == 0) acc.erase(it);
    }
  }
}

inline void check_divisors(std::span<const Polynomial> divisors, std::size_t n) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("divide: zero polynomial among divisors");
    g.check_n(n);
  }
}

}  // namespace detail

/// Remainder only. At each step the first divisor, in list order, whose
/// leading monomial divides the current leading monomial is used.
inline Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors) {
  detail::check_divisors(divisors, f.n());
  detail::WorkPoly work;
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);
  std::vector<Term> rem;
  while (!work.empty()) {
    auto lead = work.begin();
    const Polynomial* hit = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lead->first)) {
        hit = &g;
        break;
      }
    }
    if (hit == nullptr) {
      rem.push_back(Term{lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    const Monomial m = lead->first / hit->leading_monomial();
    const Rational c = -lead->second / hit->leading_coefficient();
    detail::axpy(work, *hit, m, c);
  }
  return Polynomial::from_sorted(f.n(), std::move(rem));
}

/// Full division with quotients: f = sum q_i g_i + r.
inline DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  detail::check_divisors(divisors, f.n());
  const std::size_t n = f.n();
  detail::WorkPoly work;
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);
  std::vector<detail::WorkPoly> quot(divisors.size());
  std::vector<Term> rem;
  while (!work.empty()) {
    auto lead = work.begin();
    std::size_t hit = divisors.size();
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].leading_monomial().divides(lead->first)) {
        hit = i;
        break;
      }
    }
    if (hit == divisors.size()) {
      rem.push_back(Term{lead->first, lead->second});
      work.erase(lead);
      continue;
    }
    const auto& g = divisors[hit];
    const Monomial m = lead->first / g.leading_monomial();
    const Rational c = lead->second / g.leading_coefficient();
    quot[hit][m] += c;
    detail::axpy(work, g, m, -c);
  }
  DivisionResult out;
  out.quotients.reserve(divisors.size());
  for (const auto& q : quot) out.quotients.push_back(Polynomial::from_map(n, q));
  out.remainder = Polynomial::from_sorted(n, std::move(rem));
  return out;
}

/// Checks f = sum q_i g_i + r and that no term of r is divisible by a
/// divisor's leading monomial.
inline bool division_identity_holds(const Polynomial& f, std::span<const Polynomial> divisors,
                                    const DivisionResult& res) {
  if (res.quotients.size() != divisors.size()) return false;
  Polynomial sum = res.remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) sum += res.quotients[i] * divisors[i];
  if (!(sum == f)) return false;
  for (const auto& t : res.remainder.terms()) {
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
  const Monomial l = monomial_lcm(f.leading_monomial(), g.leading_monomial());
  return f.mul_term(l / f.leading_monomial(), Rational(1) / f.leading_coefficient()) -
         g.mul_term(l / g.leading_monomial(), Rational(1) / g.leading_coefficient());
}

struct GroebnerBasis {
  std::size_t n = 0;
  std::vector<Polynomial> polys;
  bool is_reduced = false;
};

enum class PairStrategy {
  Normal,  // least lcm degree first, ties by lex-smaller lcm
  Fifo,    // creation order
};

struct BuchbergerOptions {
  PairStrategy strategy = PairStrategy::Normal;
  bool chain_criterion = false;
  /// Recompute every division with quotients and check the reconstruction
  /// identity; a failure throws VerificationError.
  bool check_divisions = false;
  std::ostream* trace = nullptr;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_processed = 0;
  std::size_t pairs_coprime = 0;
  std::size_t pairs_chain = 0;
  std::size_t zero_reductions = 0;
  std::size_t divisions_checked = 0;
};

namespace detail {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::size_t serial;
};

inline bool pair_before(const Pair& a, const Pair& b, PairStrategy s) {
  if (s == PairStrategy::Normal) {
    const auto da = a.lcm.degree();
    const auto db = b.lcm.degree();
    if (da != db) return da < db;
    if (a.lcm != b.lcm) return a.lcm < b.lcm;
  }
  return a.serial < b.serial;
}

}  // namespace detail

/// Buchberger's algorithm. The result is a Groebner basis of <gens> but not
/// necessarily reduced; see reduce_basis.
inline GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& opts = {},
                                BuchbergerStats* stats_out = nullptr) {
  BuchbergerStats stats;
  GroebnerBasis gb;
  if (!gens.empty()) gb.n = gens.front().n();
  for (const auto& g : gens) {
    g.check_n(gb.n);
    if (!g.is_zero()) gb.polys.push_back(g);
  }

  std::vector<detail::Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> done;
  std::size_t serial = 0;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.push_back(detail::Pair{i, j,
                                   monomial_lcm(gb.polys[i].leading_monomial(), gb.polys[j].leading_monomial()),
                                   serial++});
      ++stats.pairs_created;
    }
  };
  for (std::size_t j = 1; j < gb.polys.size(); ++j) add_pairs_for(j);

  auto chain_skips = [&](const detail::Pair& p) {
    for (std::size_t k = 0; k < gb.polys.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!gb.polys[k].leading_monomial().divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      if (done.contains(key(p.i, k)) && done.contains(key(p.j, k))) return true;
    }
    return false;
  };

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [&](const detail::Pair& a, const detail::Pair& b) {
      return detail::pair_before(a, b, opts.strategy);
    });
    const detail::Pair p = *best;
    queue.erase(best);

    const auto& fi = gb.polys[p.i];
    const auto& fj = gb.polys[p.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) {
      ++stats.pairs_coprime;
      done.emplace(p.i, p.j);
      continue;
    }
    if (opts.chain_criterion && chain_skips(p)) {
      ++stats.pairs_chain;
      done.emplace(p.i, p.j);
      continue;
    }

    ++stats.pairs_processed;
    const Polynomial s = s_polynomial(fi, fj);
    Polynomial r;
    if (opts.check_divisions) {
      auto res = divide(s, gb.polys);
      if (!division_identity_holds(s, gb.polys, res)) {
        throw VerificationError("division identity failed for pair (" + std::to_string(p.i) + "," +
                                std::to_string(p.j) + ")");
      }
      ++stats.divisions_checked;
      r = std::move(res.remainder);
    } else {
      r = reduce(s, gb.polys);
    }
    done.emplace(p.i, p.j);

    if (opts.trace != nullptr) {
      *opts.trace << "pair(" << p.i << "," << p.j << ") lcm=" << to_text(p.lcm)
                  << " remainder=" << (r.is_zero() ? std::string("zero") : to_text(r.leading_monomial())) << '\n';
    }
    if (r.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    gb.polys.push_back(std::move(r));
    add_pairs_for(gb.polys.size() - 1);
  }

  if (stats_out != nullptr) *stats_out = stats;
  return gb;
}

/// Minimal, monic, inter-reduced basis sorted by leading monomial
/// (descending). Unique for the ideal.
inline GroebnerBasis reduce_basis(const GroebnerBasis& gb) {
  std::vector<Polynomial> polys;
  for (const auto& p : gb.polys) {
    if (!p.is_zero()) polys.push_back(p.monic());
  }
  // Smallest leading monomials first so that minimality keeps divisors.
  std::stable_sort(polys.begin(), polys.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() < b.leading_monomial(); });
  std::vector<Polynomial> minimal;
  for (auto& p : polys) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  GroebnerBasis out;
  out.n = gb.n;
  out.is_reduced = true;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const auto& lt = minimal[i].leading_term();
    out.polys.push_back(Polynomial::monomial(lt.mono, lt.coeff) + reduce(minimal[i].tail(), others));
  }
  std::sort(out.polys.begin(), out.polys.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() > b.leading_monomial(); });
  return out;
}

inline bool is_reduced_basis(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.polys.size(); ++i) {
    const auto& p = gb.polys[i];
    if (p.is_zero() || p.leading_coefficient() != 1) return false;
    for (std::size_t j = 0; j < gb.polys.size(); ++j) {
      if (i == j) continue;
      const auto& lm = gb.polys[j].leading_monomial();
      if (lm == p.leading_monomial()) return false;
      for (const auto& t : p.terms()) {
        if (lm.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

/// True when every S-polynomial of the basis reduces to zero against it.
inline bool all_s_polynomials_reduce_to_zero(const GroebnerBasis& gb) {
  for (std::size_t j = 0; j < gb.polys.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!reduce(s_polynomial(gb.polys[i], gb.polys[j]), gb.polys).is_zero()) return false;
    }
  }
  return true;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return reduce(f, gb.polys); }

/// Monomials of degree <= degree_cap divisible by no leading monomial,
/// ordered by degree and lex-descending within a degree.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, unsigned degree_cap) {
  const std::size_t n = gb.n;
  auto standard = [&](const Monomial& m) {
    return std::none_of(gb.polys.begin(), gb.polys.end(),
                        [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
  };
  std::vector<Monomial> out;
  std::vector<Monomial> layer;
  if (standard(Monomial(n))) layer.push_back(Monomial(n));
  for (unsigned deg = 0; deg <= degree_cap && !layer.empty(); ++deg) {
    std::sort(layer.begin(), layer.end(), std::greater<>{});
    out.insert(out.end(), layer.begin(), layer.end());
    if (deg == degree_cap) break;
    // A standard monomial stays standard after dropping its last variable,
    // so extending by variables at or after the last one reaches them all.
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      std::size_t last = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i]) last = i;
      }
      for (std::size_t v = last; v < n; ++v) {
        Monomial e = m * Monomial::variable(n, v + 1);
        if (standard(e)) next.push_back(std::move(e));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// For each variable, the least exponent a with y_v^a a leading monomial;
/// empty when some variable has none (infinite quotient).
inline std::optional<std::vector<unsigned>> pure_power_exponents(const GroebnerBasis& gb) {
  std::vector<unsigned> out(gb.n, 0);
  for (const auto& g : gb.polys) {
    const auto& m = g.leading_monomial();
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < gb.n; ++i) {
      if (m[i] > 0) {
        ++support;
        var = i;
      }
    }
    if (support != 1) continue;
    if (out[var] == 0 || m[var] < out[var]) out[var] = m[var];
  }
  if (std::find(out.begin(), out.end(), 0u) != out.end()) return std::nullopt;
  return out;
}

inline bool has_finite_quotient(const GroebnerBasis& gb) { return pure_power_exponents(gb).has_value(); }

/// Coefficient k is the number of standard monomials of degree k. Without a
/// cap, the bound sum(a_v - 1) over the pure powers y_v^a_v is used.
inline std::vector<std::size_t> hilbert_series(const GroebnerBasis& gb,
                                               std::optional<unsigned> degree_cap = std::nullopt) {
  const auto powers = pure_power_exponents(gb);
  if (!powers) throw std::domain_error("hilbert_series: quotient is not finite-dimensional");
  unsigned cap = 0;
  if (degree_cap) {
    cap = *degree_cap;
  } else {
    for (auto a : *powers) cap += a - 1;
  }
  const auto mons = standard_monomials(gb, cap + 1);
  std::vector<std::size_t> coeffs;
  for (const auto& m : mons) {
    const auto d = m.degree();
    if (d > cap) throw std::domain_error("hilbert_series: standard monomials beyond degree cap " + std::to_string(cap));
    if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
    ++coeffs[d];
  }
  return coeffs;
}

}  // namespace dyckgb
