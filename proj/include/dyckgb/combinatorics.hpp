#pragma once

// Lattice paths, bitstrings, modified Catalan paths and two-row standard
// Young tableaux.
//
// A bitstring b_1 ... b_n is read as a northeast lattice path: b_i = 0 is a
// north step, b_i = 1 is an east step. "Above the diagonal" means every
// prefix has at least as many north steps as east steps. Positions are
// 1-based in the public interface.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyckgb {

class BitPath {
 public:
  BitPath() = default;

  explicit BitPath(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
      if (b > 1) throw std::invalid_argument("BitPath: entries must be 0 or 1");
    }
  }

  static BitPath zeros(std::size_t n) { return BitPath(std::vector<std::uint8_t>(n, 0)); }

  static BitPath parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("BitPath: invalid character '" + std::string(1, c) + "' in \"" +
                                    std::string(text) + "\"");
      }
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitPath(std::move(bits));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /// 1-based access.
  std::uint8_t at(std::size_t pos) const {
    if (pos < 1 || pos > bits_.size()) {
      throw std::out_of_range("BitPath: position " + std::to_string(pos) + " outside 1.." +
                              std::to_string(bits_.size()));
    }
    return bits_[pos - 1];
  }

  /// 0-based access.
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  std::size_t ones() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }
  std::size_t zeros_count() const noexcept { return bits_.size() - ones(); }

  /// 1-based positions of the east steps, increasing.
  std::vector<std::size_t> one_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.push_back(i + 1);
    }
    return out;
  }

  /// 1-based position of the last 1, or 0 if there is none.
  std::size_t last_one() const noexcept {
    for (std::size_t i = bits_.size(); i > 0; --i) {
      if (bits_[i - 1]) return i;
    }
    return 0;
  }

  BitPath prefix(std::size_t len) const {
    if (len > bits_.size()) throw std::out_of_range("BitPath: prefix longer than path");
    return BitPath(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(len)));
  }

  BitPath with(std::size_t pos, std::uint8_t value) const {
    if (pos < 1 || pos > bits_.size()) throw std::out_of_range("BitPath: position out of range");
    auto copy = bits_;
    copy[pos - 1] = value;
    return BitPath(std::move(copy));
  }

  BitPath concat(const BitPath& tail) const {
    auto copy = bits_;
    copy.insert(copy.end(), tail.bits_.begin(), tail.bits_.end());
    return BitPath(std::move(copy));
  }

  /// Pads with trailing zeros up to length n.
  BitPath padded(std::size_t n) const {
    if (n < bits_.size()) throw std::invalid_argument("BitPath: cannot pad to a shorter length");
    auto copy = bits_;
    copy.resize(n, 0);
    return BitPath(std::move(copy));
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  // Lexicographic on the bit vector; agrees with the lex order of the
  // corresponding square-free monomials.
  friend std::strong_ordering operator<=>(const BitPath&, const BitPath&) = default;
  friend bool operator==(const BitPath&, const BitPath&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline bool is_above_diagonal(const BitPath& p) {
  long balance = 0;  // north minus east
  for (auto b : p.bits()) {
    balance += b ? -1 : 1;
    if (balance < 0) return false;
  }
  return true;
}

inline bool is_catalan(const BitPath& p) {
  return is_above_diagonal(p) && 2 * p.ones() == p.size();
}

/// p = w 1 0^m with w a Catalan path.
inline bool is_mcp(const BitPath& p) {
  const std::size_t d = p.last_one();
  if (d == 0) return false;
  return is_catalan(p.prefix(d - 1));
}

/// A validated modified Catalan path.
class McpPath {
 public:
  explicit McpPath(BitPath path) : path_(std::move(path)) {
    if (!is_mcp(path_)) throw std::invalid_argument("not a modified Catalan path: " + path_.to_string());
    d_ = path_.last_one();
  }

  static McpPath parse(std::string_view text) { return McpPath(BitPath::parse(text)); }

  const BitPath& path() const noexcept { return path_; }
  std::size_t n() const noexcept { return path_.size(); }
  /// Position of the last east step; always 2 * ones() - 1.
  std::size_t d() const noexcept { return d_; }
  std::size_t ones() const noexcept { return (d_ + 1) / 2; }
  std::uint8_t at(std::size_t pos) const { return path_.at(pos); }
  std::string to_string() const { return path_.to_string(); }

  friend std::strong_ordering operator<=>(const McpPath& a, const McpPath& b) { return a.path_ <=> b.path_; }
  friend bool operator==(const McpPath& a, const McpPath& b) { return a.path_ == b.path_; }

 private:
  BitPath path_;
  std::size_t d_ = 0;
};

namespace detail {

/// Calls f on every k-subset of {0..n-1}, subsets in lex-ascending order of
/// their sorted index vectors.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void catalan_words(std::size_t half, std::size_t north, std::size_t east, std::vector<std::uint8_t>& cur,
                          std::vector<BitPath>& out) {
  if (north == half && east == half) {
    out.emplace_back(cur);
    return;
  }
  // East first so output is lex-descending.
  if (east < north) {
    cur.push_back(1);
    catalan_words(half, north, east + 1, cur, out);
    cur.pop_back();
  }
  if (north < half) {
    cur.push_back(0);
    catalan_words(half, north + 1, east, cur, out);
    cur.pop_back();
  }
}

inline void sort_descending(std::vector<BitPath>& v) { std::sort(v.begin(), v.end(), std::greater<>{}); }

}  // namespace detail

/// All Catalan words of length 2 * half, lex-descending.
inline std::vector<BitPath> catalan_paths(std::size_t half) {
  std::vector<BitPath> out;
  std::vector<std::uint8_t> cur;
  detail::catalan_words(half, 0, 0, cur, out);
  return out;
}

/// MCPs of length n with ones() - 1 <= ell, lex-descending.
inline std::vector<McpPath> enumerate_mcps(std::size_t n, long ell) {
  if (n < 1) throw std::invalid_argument("enumerate_mcps: n must be positive");
  if (ell < -1) throw std::invalid_argument("enumerate_mcps: ell must be >= -1");
  std::vector<BitPath> paths;
  for (long half = 0; half <= ell && static_cast<std::size_t>(2 * half + 1) <= n; ++half) {
    for (const auto& w : catalan_paths(static_cast<std::size_t>(half))) {
      paths.push_back(w.concat(BitPath(std::vector<std::uint8_t>{1})).padded(n));
    }
  }
  detail::sort_descending(paths);
  std::vector<McpPath> out;
  out.reserve(paths.size());
  for (auto& p : paths) out.emplace_back(std::move(p));
  return out;
}

/// Paths with the same number of east steps as alpha that stay weakly above
/// alpha on its first d steps, excluding alpha itself. Lex-descending.
inline std::vector<BitPath> p_alpha(const McpPath& alpha) {
  const std::size_t n = alpha.n();
  const std::size_t d = alpha.d();
  const std::size_t m = alpha.ones();
  const auto prefix_ones = alpha.path().one_positions();  // all lie in 1..d
  std::vector<BitPath> out;
  for (std::size_t kept = 0; kept <= m; ++kept) {
    const std::size_t tail = m - kept;
    if (tail > n - d) continue;
    detail::for_each_subset(m, kept, [&](const std::vector<std::size_t>& head) {
      detail::for_each_subset(n - d, tail, [&](const std::vector<std::size_t>& rest) {
        if (tail == 0) return;  // kept == m reproduces alpha
        std::vector<std::uint8_t> bits(n, 0);
        for (auto h : head) bits[prefix_ones[h] - 1] = 1;
        for (auto r : rest) bits[d + r] = 1;
        out.emplace_back(std::move(bits));
      });
    });
  }
  detail::sort_descending(out);
  return out;
}

/// Members of p_alpha with a north step at position k. Requires alpha_k = 1.
inline std::vector<BitPath> p_alpha_k(const McpPath& alpha, std::size_t k) {
  if (k < 2 || k > alpha.d() || alpha.at(k) != 1) {
    throw std::invalid_argument("p_alpha_k: need 1 < k <= d with alpha_k = 1 (alpha=" + alpha.to_string() +
                                ", k=" + std::to_string(k) + ")");
  }
  std::vector<BitPath> out;
  for (auto& beta : p_alpha(alpha)) {
    if (beta.at(k) == 0) out.push_back(std::move(beta));
  }
  return out;
}

/// Length-d prefixes u below alpha's support with ones(u) = ones(alpha) - r.
inline std::vector<BitPath> u_alpha_r(const McpPath& alpha, std::size_t r) {
  const std::size_t m = alpha.ones();
  if (r < 1 || r > m) {
    throw std::invalid_argument("u_alpha_r: r=" + std::to_string(r) + " outside 1.." + std::to_string(m));
  }
  const auto pos = alpha.path().one_positions();
  std::vector<BitPath> out;
  detail::for_each_subset(m, m - r, [&](const std::vector<std::size_t>& keep) {
    std::vector<std::uint8_t> bits(alpha.d(), 0);
    for (auto i : keep) bits[pos[i] - 1] = 1;
    out.emplace_back(std::move(bits));
  });
  detail::sort_descending(out);
  return out;
}

/// The members of p_alpha whose first d bits equal u.
inline std::vector<BitPath> p_u_alpha(const McpPath& alpha, const BitPath& u) {
  std::vector<BitPath> out;
  for (auto& beta : p_alpha(alpha)) {
    if (beta.prefix(alpha.d()) == u) out.push_back(std::move(beta));
  }
  return out;
}

/// The d-prefix of alpha with position k cleared.
inline BitPath u_alpha_one_k(const McpPath& alpha, std::size_t k) {
  if (k < 1 || k > alpha.d() || alpha.at(k) != 1) {
    throw std::invalid_argument("u_alpha_one_k: alpha_" + std::to_string(k) + " must be 1 (alpha=" +
                                alpha.to_string() + ")");
  }
  return alpha.path().prefix(alpha.d()).with(k, 0);
}

/// u(alpha, k) 1 1 0^(n-d-2).
inline McpPath alpha_child(const McpPath& alpha, std::size_t k) {
  if (k < 2) throw std::invalid_argument("alpha_child: k must be at least 2");
  if (alpha.d() + 2 > alpha.n()) {
    throw std::invalid_argument("alpha_child: child of " + alpha.to_string() + " does not fit in length " +
                                std::to_string(alpha.n()));
  }
  auto u = u_alpha_one_k(alpha, k);
  return McpPath(u.concat(BitPath(std::vector<std::uint8_t>{1, 1})).padded(alpha.n()));
}

// ---------------------------------------------------------------------------
// Two-row standard Young tableaux

struct Tableau {
  std::size_t n = 0;
  std::vector<std::size_t> row1;  // length n - k
  std::vector<std::size_t> row2;  // length k

  std::size_t k() const noexcept { return row2.size(); }

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

inline bool is_standard(const Tableau& t) {
  if (t.row1.size() + t.row2.size() != t.n) return false;
  if (t.row2.size() > t.row1.size()) return false;
  std::vector<bool> seen(t.n + 1, false);
  for (const auto* row : {&t.row1, &t.row2}) {
    for (std::size_t i = 0; i < row->size(); ++i) {
      const auto v = (*row)[i];
      if (v < 1 || v > t.n || seen[v]) return false;
      seen[v] = true;
      if (i > 0 && (*row)[i - 1] >= v) return false;
    }
  }
  for (std::size_t i = 0; i < t.row2.size(); ++i) {
    if (t.row1[i] >= t.row2[i]) return false;
  }
  return true;
}

inline void validate(const Tableau& t) {
  if (!is_standard(t)) throw std::invalid_argument("not a standard two-row tableau");
}

namespace detail {

inline void syt_fill(std::size_t n, std::size_t k, std::size_t next, Tableau& cur, std::vector<Tableau>& out) {
  if (next > n) {
    out.push_back(cur);
    return;
  }
  // Second row first: the matching paths then come out lex-descending.
  if (cur.row2.size() < k && cur.row2.size() < cur.row1.size()) {
    cur.row2.push_back(next);
    syt_fill(n, k, next + 1, cur, out);
    cur.row2.pop_back();
  }
  if (cur.row1.size() < n - k) {
    cur.row1.push_back(next);
    syt_fill(n, k, next + 1, cur, out);
    cur.row1.pop_back();
  }
}

}  // namespace detail

/// All SYT of shape (n-k, k).
inline std::vector<Tableau> enumerate_syt_two_rows(std::size_t n, std::size_t k) {
  if (2 * k > n) {
    throw std::invalid_argument("enumerate_syt_two_rows: k=" + std::to_string(k) + " exceeds floor(n/2) for n=" +
                                std::to_string(n));
  }
  std::vector<Tableau> out;
  Tableau cur;
  cur.n = n;
  detail::syt_fill(n, k, 1, cur, out);
  return out;
}

/// Bit i is 1 exactly when i sits in the second row.
inline BitPath tableau_to_path(const Tableau& t) {
  validate(t);
  std::vector<std::uint8_t> bits(t.n, 0);
  for (auto v : t.row2) bits[v - 1] = 1;
  return BitPath(std::move(bits));
}

inline Tableau path_to_tableau(const BitPath& p) {
  if (!is_above_diagonal(p)) throw std::invalid_argument("path_to_tableau: path crosses the diagonal");
  Tableau t;
  t.n = p.size();
  for (std::size_t i = 0; i < p.size(); ++i) (p[i] ? t.row2 : t.row1).push_back(i + 1);
  return t;
}

}  // namespace dyckgb
