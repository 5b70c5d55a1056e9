#pragma once

// Small dense matrices over Q.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dyckgb/polyring.hpp"

namespace dyckgb {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace detail {

/// Row-reduces m in place; returns the rank.
inline std::size_t row_reduce(RationalMatrix& m, RationalMatrix* companion = nullptr) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    auto swap_rows = [](RationalMatrix& a, std::size_t r1, std::size_t r2) {
      if (r1 == r2) return;
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
    };
    swap_rows(m, pivot, rank);
    if (companion) swap_rows(*companion, pivot, rank);
    const Rational inv = Rational(1) / m(rank, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(rank, c) *= inv;
    if (companion) {
      for (std::size_t c = 0; c < companion->cols(); ++c) (*companion)(rank, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(rank, c);
      if (companion) {
        for (std::size_t c = 0; c < companion->cols(); ++c) (*companion)(r, c) -= f * (*companion)(rank, c);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline std::size_t rank(RationalMatrix m) { return detail::row_reduce(m); }

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<RationalMatrix> invert(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix is not square");
  auto inv = RationalMatrix::identity(m.rows());
  if (detail::row_reduce(m, &inv) != m.rows()) return std::nullopt;
  return inv;
}

}  // namespace dyckgb
