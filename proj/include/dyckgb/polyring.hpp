#pragma once

// Sparse multivariate polynomials over Q in variables y1 > y2 > ... > yn,
// ordered lexicographically.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckgb/combinatorics.hpp"

namespace dyckgb {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "a", "-a" or "a/b".
inline Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("invalid rational \"" + std::string(text) + "\"");
  }
  q.canonicalize();
  return q;
}

class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial from_exponents(std::span<const int> e) {
    std::vector<Exponent> exps;
    exps.reserve(e.size());
    for (int v : e) {
      if (v < 0 || v > std::numeric_limits<Exponent>::max()) {
        throw std::overflow_error("Monomial: exponent " + std::to_string(v) + " out of range");
      }
      exps.push_back(static_cast<Exponent>(v));
    }
    return Monomial(std::move(exps));
  }

  /// y_var (1-based).
  static Monomial variable(std::size_t n, std::size_t var, Exponent power = 1) {
    if (var < 1 || var > n) throw std::out_of_range("Monomial: variable index out of range");
    Monomial m(n);
    m.exps_[var - 1] = power;
    return m;
  }

  std::size_t n() const noexcept { return exps_.size(); }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  bool is_square_free() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  bool divides(const Monomial& other) const {
    check_same_n(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    check_same_n(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] && other.exps_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same_n(b);
    Monomial r(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
      const unsigned s = unsigned{a.exps_[i]} + b.exps_[i];
      if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("Monomial: exponent overflow");
      r.exps_[i] = static_cast<Exponent>(s);
    }
    return r;
  }

  /// Exact quotient; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::domain_error("Monomial: inexact division");
    Monomial r(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  void check_same_n(const Monomial& other) const {
    if (n() != other.n()) {
      throw std::invalid_argument("monomials over different rings (n=" + std::to_string(n()) + " vs " +
                                  std::to_string(other.n()) + ")");
    }
  }

 private:
  std::vector<Exponent> exps_;
};

/// a > b iff the first nonzero entry of a - b is positive.
inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  a.check_same_n(b);
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return lex_compare(a, b); }

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  a.check_same_n(b);
  std::vector<Monomial::Exponent> e(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

inline Monomial path_monomial(const BitPath& p) {
  return Monomial(std::vector<Monomial::Exponent>(p.bits().begin(), p.bits().end()));
}

inline BitPath monomial_path(const Monomial& m) {
  if (!m.is_square_free()) throw std::invalid_argument("monomial_path: monomial is not square-free");
  return BitPath(std::vector<std::uint8_t>(m.exponents().begin(), m.exponents().end()));
}

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Canonical sparse polynomial: terms strictly lex-descending, no zero
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  /// Combines like terms and sorts; input may be in any order.
  Polynomial(std::size_t n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) { normalize(); }

  static Polynomial constant(std::size_t n, const Rational& c) {
    return Polynomial(n, {Term{Monomial(n), c}});
  }
  static Polynomial monomial(const Monomial& m, const Rational& c = 1) { return Polynomial(m.n(), {Term{m, c}}); }
  static Polynomial variable(std::size_t n, std::size_t var) { return monomial(Monomial::variable(n, var)); }

  /// Builds from terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted(std::size_t n, std::vector<Term> terms) {
    Polynomial p(n);
    p.terms_ = std::move(terms);
    return p;
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Term& leading_term() const {
    if (is_zero()) throw std::domain_error("leading_term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  /// Lex-least term.
  const Term& trailing_term() const {
    if (is_zero()) throw std::domain_error("trailing_term of the zero polynomial");
    return terms_.back();
  }

  Rational coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
  }

  unsigned total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }

  /// The polynomial without its leading term.
  Polynomial tail() const {
    if (is_zero()) return *this;
    return from_sorted(n_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading_coefficient());
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, -1); }
  Polynomial operator-() const { return *this * Rational(-1); }

  friend Polynomial operator*(const Polynomial& p, const Rational& c) {
    if (c == 0) return Polynomial(p.n_);
    auto out = p;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

  /// Multiplication by c * m; preserves term order.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    check_n(m.n());
    if (c == 0) return Polynomial(n_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coeff * c});
    return from_sorted(n_, std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_n(b.n_);
    std::map<Monomial, Rational, std::greater<>> acc;
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
    }
    return from_map(a.n_, acc);
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  template <typename Map>
  static Polynomial from_map(std::size_t n, const Map& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (const auto& [m, c] : acc) {
      if (c != 0) out.push_back(Term{m, c});
    }
    return from_sorted(n, std::move(out));
  }

  void check_n(std::size_t other) const {
    if (other != n_) {
      throw std::invalid_argument("polynomials over different rings (n=" + std::to_string(n_) + " vs " +
                                  std::to_string(other) + ")");
    }
  }

 private:
  void normalize() {
    for (const auto& t : terms_) check_n(t.mono.n());
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, int sign) {
    a.check_n(b.n_);
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->mono > j->mono)) {
        out.push_back(*i++);
      } else if (i == a.terms_.end() || j->mono > i->mono) {
        out.push_back(Term{j->mono, sign * j->coeff});
        ++j;
      } else {
        Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
        if (c != 0) out.push_back(Term{i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return from_sorted(a.n_, std::move(out));
  }

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

inline Polynomial path_polynomial(const BitPath& p) { return Polynomial::monomial(path_monomial(p)); }

/// Applies sigma to the variables: y_i -> y_sigma(i), sigma given 1-based.
inline Polynomial permute(const Polynomial& p, std::span<const std::size_t> sigma) {
  if (sigma.size() != p.n()) throw std::invalid_argument("permute: permutation size mismatch");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Exponent> e(p.n(), 0);
    for (std::size_t i = 0; i < p.n(); ++i) e[sigma[i] - 1] = t.mono[i];
    out.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(p.n(), std::move(out));
}

// ---------------------------------------------------------------------------
// Text form: "y2*y3 + y2*y4", "-1/2*y1^2 + 3"

inline std::string to_text(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.n(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'y' + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) s += '-';
    } else {
      s += t.coeff < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit_mono = t.mono.is_one();
    if (mag != 1 || unit_mono) {
      s += mag.get_str();
      if (!unit_mono) s += '*';
    }
    if (!unit_mono) s += to_text(t.mono);
  }
  return s;
}

namespace detail {

class TextParser {
 public:
  TextParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  Polynomial parse_polynomial() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      Term t = parse_term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ >= s_.size()) break;
      if (peek() == '+') {
        sign = 1;
      } else if (peek() == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos_;
    }
    return Polynomial(n_, std::move(terms));
  }

  Monomial parse_monomial_only() {
    skip_ws();
    Term t = parse_term();
    skip_ws();
    if (pos_ != s_.size() || t.coeff != 1) fail("expected a single monomial");
    return t.mono;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in \"" + std::string(s_) +
                                "\": " + what);
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
    return out;
  }

  Term parse_term() {
    skip_ws();
    Rational coeff = 1;
    std::vector<int> exps(n_, 0);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = read_digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = read_digits();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      coeff = parse_rational(num);
      any = true;
      skip_ws();
      if (peek() != '*') return Term{Monomial::from_exponents(exps), coeff};
      ++pos_;
      skip_ws();
    }
    while (true) {
      if (peek() != 'y') {
        if (any) fail("expected variable");
        fail("expected coefficient or variable");
      }
      ++pos_;
      std::string idx = read_digits();
      if (idx.empty()) fail("missing variable index");
      const auto var = std::stoul(idx);
      if (var < 1 || var > n_) fail("variable y" + idx + " outside y1..y" + std::to_string(n_));
      int power = 1;
      if (peek() == '^') {
        ++pos_;
        std::string e = read_digits();
        if (e.empty()) fail("missing exponent");
        power = std::stoi(e);
      }
      exps[var - 1] += power;
      any = true;
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
    }
    return Term{Monomial::from_exponents(exps), coeff};
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  if (text == "0") return Polynomial(n);
  return detail::TextParser(text, n).parse_polynomial();
}

inline Monomial parse_monomial(std::string_view text, std::size_t n) {
  if (text == "1") return Monomial(n);
  return detail::TextParser(text, n).parse_monomial_only();
}

}  // namespace dyckgb
