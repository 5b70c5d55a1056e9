#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls the enumeration or arithmetic routines it is compared against.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dyckgb/combinatorics.hpp"
#include "dyckgb/polyring.hpp"

namespace dyckgb::oracle {

inline std::vector<std::string> all_bitstrings(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> (n - 1 - i) & 1) s[i] = '1';
    }
    out.push_back(s);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Walks the lattice: north (0) raises y, east (1) raises x; stays weakly
/// above y = x iff x <= y throughout.
inline bool weakly_above(const std::string& s) {
  int x = 0;
  int y = 0;
  for (char c : s) {
    (c == '1' ? x : y) += 1;
    if (x > y) return false;
  }
  return true;
}

/// Tries every split alpha = w 1 0^m.
inline bool is_mcp(const std::string& s) {
  for (std::size_t l = 0; 2 * l + 1 <= s.size(); ++l) {
    const std::string w = s.substr(0, 2 * l);
    if (s[2 * l] != '1') continue;
    if (s.find('1', 2 * l + 1) != std::string::npos) continue;
    if (std::count(w.begin(), w.end(), '1') == static_cast<long>(l) && weakly_above(w)) return true;
  }
  return false;
}

inline std::size_t count_ones(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '1')); }

inline std::vector<std::string> mcps(std::size_t n, long ell) {
  std::vector<std::string> out;
  for (const auto& s : all_bitstrings(n)) {
    if (is_mcp(s) && static_cast<long>(count_ones(s)) - 1 <= ell) out.push_back(s);
  }
  return out;
}

/// Straight from the definition, by filtering all 2^n bitstrings.
inline std::vector<std::string> p_alpha(const std::string& alpha) {
  const std::size_t d = alpha.find_last_of('1') + 1;
  std::vector<std::string> out;
  for (const auto& beta : all_bitstrings(alpha.size())) {
    if (beta == alpha || count_ones(beta) != count_ones(alpha)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (alpha[i] == '0' && beta[i] != '0') ok = false;
    }
    if (ok) out.push_back(beta);
  }
  return out;
}

inline mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return c;
}

inline mpz_class ballot(long n, long k) { return binomial(n, k) - binomial(n, k - 1); }

inline mpz_class catalan(long k) { return binomial(2 * k, k) / (k + 1); }

/// Fills shape (n-k, k) from every permutation of 1..n and keeps the
/// standard fillings; returns them as (row1, row2) pairs.
inline std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> syt_by_permutations(std::size_t n,
                                                                                                       std::size_t k) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
  do {
    std::vector<std::size_t> r1(perm.begin(), perm.begin() + static_cast<long>(n - k));
    std::vector<std::size_t> r2(perm.begin() + static_cast<long>(n - k), perm.end());
    bool ok = std::is_sorted(r1.begin(), r1.end()) && std::is_sorted(r2.begin(), r2.end());
    for (std::size_t i = 0; ok && i < k; ++i) ok = r1[i] < r2[i];
    if (ok) out.emplace_back(r1, r2);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Square-free bitstrings staying weakly above the diagonal.
inline std::vector<std::string> above_diagonal_paths(std::size_t n, long ones = -1) {
  std::vector<std::string> out;
  for (const auto& s : all_bitstrings(n)) {
    if (weakly_above(s) && (ones < 0 || count_ones(s) == static_cast<std::size_t>(ones))) out.push_back(s);
  }
  return out;
}

/// Double loop over term pairs, combined by the normalizing constructor.
inline Polynomial naive_product(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> terms;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      std::vector<int> e(a.n());
      for (std::size_t i = 0; i < a.n(); ++i) e[i] = s.mono[i] + t.mono[i];
      terms.push_back(Term{Monomial::from_exponents(e), s.coeff * t.coeff});
    }
  }
  return Polynomial(a.n(), std::move(terms));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, std::size_t max_terms, int max_exp,
                                    int coeff_range = 5) {
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> num(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Term> terms;
  const auto k = count(rng);
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<int> e(n);
    for (auto& x : e) x = exp(rng);
    Rational c(num(rng), den(rng));
    c.canonicalize();
    terms.push_back(Term{Monomial::from_exponents(e), c});
  }
  return Polynomial(n, std::move(terms));
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<int> e(n, 0);
  const auto d = deg(rng);
  for (unsigned i = 0; i < d; ++i) ++e[var(rng)];
  return Monomial::from_exponents(e);
}

inline std::vector<std::string> to_strings(const std::vector<BitPath>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

}  // namespace dyckgb::oracle
