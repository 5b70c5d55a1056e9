#include <gtest/gtest.h>

#include <map>
#include <random>
#include <vector>

#include "dyckgb/apolarity.hpp"
#include "dyckgb/linalg.hpp"
#include "oracles.hpp"

namespace dyckgb {
namespace {

Polynomial P(const char* text, std::size_t n) { return parse_polynomial(text, n); }

const Tableau kExampleTableau{8, {1, 2, 4, 5, 7}, {3, 6, 8}};

/// Coefficient rows of the given polynomials over their joint support.
RationalMatrix coefficient_rows(const std::vector<Polynomial>& polys) {
  std::map<Monomial, std::size_t> column;
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) column.emplace(t.mono, column.size());
  }
  RationalMatrix m(polys.size(), column.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& t : polys[i].terms()) m(i, column.at(t.mono)) = t.coeff;
  }
  return m;
}

/// dim ker of sum_i d/dy_i from square-free degree k to degree k-1.
std::size_t harmonic_dimension(std::size_t n, std::size_t k) {
  std::vector<Polynomial> images;
  for (const auto& s : oracle::all_bitstrings(n)) {
    if (oracle::count_ones(s) != k) continue;
    images.push_back(apply_diff(ideal_generators(n)[0], path_polynomial(BitPath::parse(s))));
  }
  const auto total = images.size();
  std::erase_if(images, [](const Polynomial& p) { return p.is_zero(); });
  return total - (images.empty() ? 0 : rank(coefficient_rows(images)));
}

TEST(ApplyDiff, Derivatives) {
  EXPECT_EQ(apply_diff(P("y1", 2), P("y1^3*y2", 2)), P("3*y1^2*y2", 2));
  EXPECT_EQ(apply_diff(P("y1^2", 2), P("y1^3", 2)), P("6*y1", 2));
  EXPECT_EQ(apply_diff(P("y1*y2", 2), P("y1^2*y2^3 + y2", 2)), P("6*y1*y2^2", 2));
  EXPECT_EQ(apply_diff(P("2", 2), P("y1 + y2", 2)), P("2*y1 + 2*y2", 2));
  EXPECT_TRUE(apply_diff(P("y2", 2), P("y1^4", 2)).is_zero());
  EXPECT_THROW(apply_diff(P("y1", 2), P("y1", 3)), std::invalid_argument);
}

TEST(ScalarProduct, MonomialsAreOrthogonal) {
  EXPECT_EQ(scalar_product(P("y1^3*y2^2", 2), P("y1^3*y2^2", 2)), 12);
  EXPECT_EQ(scalar_product(P("y1^3", 2), P("y1^2*y2", 2)), 0);
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    const auto a = oracle::random_polynomial(rng, 3, 5, 3);
    const auto b = oracle::random_polynomial(rng, 3, 5, 3);
    ASSERT_EQ(scalar_product(a, b), scalar_product(b, a));
  }
}

TEST(Specht, ExampleTableau) {
  const auto sp = specht(kExampleTableau);
  EXPECT_EQ(sp.poly, P("y1 - y3", 8) * P("y2 - y6", 8) * P("y4 - y8", 8));
  EXPECT_EQ(sp.poly.trailing_term().coeff, -1);
  EXPECT_EQ(monomial_path(sp.poly.trailing_term().mono).to_string(), "00100101");
  EXPECT_THROW(specht(Tableau{3, {1}, {2, 3}}), std::invalid_argument);
}

TEST(Specht, SingleRowIsOne) {
  EXPECT_EQ(specht(Tableau{4, {1, 2, 3, 4}, {}}).poly, P("1", 4));
}

TEST(Specht, TrailingTermIsSignedPath) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      for (const auto& t : enumerate_syt_two_rows(n, k)) {
        const auto sp = specht(t);
        ASSERT_EQ(sp.poly.trailing_term().coeff, k % 2 ? -1 : 1);
        ASSERT_EQ(sp.poly.trailing_term().mono, path_monomial(tableau_to_path(t)));
        ASSERT_TRUE(sp.poly.is_homogeneous());
        ASSERT_EQ(sp.poly.total_degree(), k);
      }
    }
  }
}

TEST(OrthogonalComplement, Membership) {
  EXPECT_TRUE(in_orthogonal_complement(P("1", 3)));
  EXPECT_TRUE(in_orthogonal_complement(P("y1 - y2", 3)));
  EXPECT_FALSE(in_orthogonal_complement(P("y1", 3)));
  EXPECT_FALSE(in_orthogonal_complement(P("y1^2 - y2^2", 3)));
}

TEST(BPrime, SizeAndTrailingMonomials) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto bp = bprime_basis(n);
    ASSERT_EQ(mpz_class(static_cast<unsigned long>(bp.size())), oracle::binomial(n, n / 2));
    std::vector<std::string> trailing;
    for (const auto& sp : bp) {
      ASSERT_TRUE(in_orthogonal_complement(sp.poly));
      trailing.push_back(monomial_path(sp.poly.trailing_term().mono).to_string());
      ASSERT_EQ(trailing.back(), tableau_to_path(sp.tableau).to_string());
    }
    std::sort(trailing.begin(), trailing.end());
    auto expected = oracle::above_diagonal_paths(n);
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(trailing, expected);
  }
  EXPECT_THROW(bprime_basis(0), std::invalid_argument);
}

TEST(BPrime, SpansEachGradedPiece) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto bp = bprime_basis(n);
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      std::vector<Polynomial> degree_k;
      for (const auto& sp : bp) {
        if (sp.tableau.k() == k) degree_k.push_back(sp.poly);
      }
      const auto r = rank(coefficient_rows(degree_k));
      ASSERT_EQ(r, degree_k.size()) << "n=" << n << " k=" << k;
      ASSERT_EQ(r, harmonic_dimension(n, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(ExpressInSpecht, RecoversCombination) {
  const auto bp = bprime_basis(6);
  std::vector<SpechtPolynomial> deg2;
  for (const auto& sp : bp) {
    if (sp.tableau.k() == 2) deg2.push_back(sp);
  }
  Polynomial h(6);
  std::map<std::size_t, Rational> chosen{{0, Rational(3)}, {2, Rational(-1, 2)}, {deg2.size() - 1, Rational(5)}};
  for (const auto& [i, c] : chosen) h += deg2[i].poly * c;
  const auto coeffs = express_in_specht_basis(h, deg2);
  ASSERT_TRUE(coeffs);
  std::map<std::size_t, Rational> got(coeffs->begin(), coeffs->end());
  EXPECT_EQ(got, chosen);
  EXPECT_FALSE(express_in_specht_basis(P("y1*y2", 6), deg2));
  EXPECT_TRUE(express_in_specht_basis(Polynomial(6), deg2)->empty());
}

TEST(GradedSummary, SmallCases) {
  EXPECT_EQ(to_text(graded_summary(4)), "s(4) + s(3,1)*q + s(2,2)*q^2");
  EXPECT_EQ(to_text(graded_summary(1)), "s(1)");
  const auto s = graded_summary(7);
  ASSERT_EQ(s.rows.size(), 4u);
  EXPECT_EQ(s.rows[3], (GradedRow{3, 4, 3, 14}));
  EXPECT_THROW(graded_summary(0), std::invalid_argument);
}

TEST(GradedSummary, DimensionsAreBallot) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& r : graded_summary(n).rows) {
      ASSERT_EQ(r.shape_first + r.shape_second, n);
      ASSERT_EQ(mpz_class(static_cast<unsigned long>(r.dim)), oracle::ballot(n, r.k));
    }
  }
}

TEST(Closure, HoldsForSmallN) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto res = verify_group_action_closure(n, 25, 100 + n);
    EXPECT_TRUE(res) << res.failure;
    EXPECT_TRUE(res.failure.empty());
  }
}

}  // namespace
}  // namespace dyckgb
