#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "dyckgb/combinatorics.hpp"
#include "oracles.hpp"

namespace dyckgb {
namespace {

using oracle::to_strings;

BitPath bp(const std::string& s) { return BitPath::parse(s); }

TEST(BitPath, ParseAndCounts) {
  const auto p = bp("010110");
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(p.ones(), 3u);
  EXPECT_EQ(p.zeros_count(), 3u);
  EXPECT_EQ(p.at(2), 1);
  EXPECT_EQ(p.last_one(), 5u);
  EXPECT_EQ(p.one_positions(), (std::vector<std::size_t>{2, 4, 5}));
  EXPECT_EQ(p.to_string(), "010110");
  EXPECT_THROW(bp("01a"), std::invalid_argument);
  EXPECT_THROW(p.at(0), std::out_of_range);
  EXPECT_THROW(p.at(7), std::out_of_range);
}

TEST(BitPath, OrderMatchesLex) {
  EXPECT_GT(bp("1000"), bp("0111"));
  EXPECT_GT(bp("0110"), bp("0101"));
  EXPECT_EQ(bp("0110"), bp("0110"));
}

TEST(IsCatalan, Examples) {
  EXPECT_TRUE(is_catalan(bp("0101")));
  EXPECT_TRUE(is_catalan(bp("0011")));
  EXPECT_FALSE(is_catalan(bp("1010")));
  EXPECT_FALSE(is_catalan(bp("0110")));
  EXPECT_TRUE(is_catalan(BitPath{}));
  EXPECT_FALSE(is_catalan(bp("00")));
}

TEST(IsMcp, Examples) {
  EXPECT_TRUE(is_mcp(bp("1000000")));
  EXPECT_TRUE(is_mcp(bp("0110000")));
  EXPECT_TRUE(is_mcp(bp("010110")));
  EXPECT_EQ(McpPath::parse("010110").d(), 5u);
  EXPECT_EQ(McpPath::parse("1").d(), 1u);
  EXPECT_FALSE(is_mcp(bp("0000")));
  EXPECT_FALSE(is_mcp(bp("0101")));
  EXPECT_FALSE(is_mcp(bp("1100")));
  EXPECT_THROW(McpPath::parse("0101"), std::invalid_argument);
}

TEST(IsMcp, AgreesWithSplitOracle) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : oracle::all_bitstrings(n)) {
      ASSERT_EQ(is_mcp(bp(s)), oracle::is_mcp(s)) << s;
      if (is_mcp(bp(s))) {
        ASSERT_EQ(McpPath::parse(s).d(), 2 * bp(s).ones() - 1) << s;
      }
    }
  }
}

std::vector<std::string> mcp_strings(std::size_t n, long ell) {
  std::vector<std::string> out;
  for (const auto& a : enumerate_mcps(n, ell)) out.push_back(a.to_string());
  return out;
}

TEST(EnumerateMcps, Examples) {
  EXPECT_EQ(mcp_strings(4, 1), (std::vector<std::string>{"1000", "0110"}));
  EXPECT_EQ(mcp_strings(1, 0), (std::vector<std::string>{"1"}));
  EXPECT_EQ(enumerate_mcps(7, 3).size(), 9u);
  EXPECT_TRUE(enumerate_mcps(5, -1).empty());
}

TEST(EnumerateMcps, MatchesBruteForceAndCatalanCount) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (long ell = -1; ell <= 6; ++ell) {
      ASSERT_EQ(mcp_strings(n, ell), oracle::mcps(n, ell)) << "n=" << n << " ell=" << ell;
      mpz_class expected = 0;
      for (long k = 0; k <= std::min<long>(ell, (static_cast<long>(n) - 1) / 2); ++k) expected += oracle::catalan(k);
      ASSERT_EQ(mpz_class(static_cast<unsigned long>(enumerate_mcps(n, ell).size())), expected);
    }
  }
}

TEST(PAlpha, LinearGenerator) {
  EXPECT_TRUE(p_alpha(McpPath::parse("1")).empty());
  EXPECT_EQ(to_strings(p_alpha(McpPath::parse("1000"))), (std::vector<std::string>{"0100", "0010", "0001"}));
}

TEST(PAlpha, QuadraticGenerator) {
  // every y_i y_j with 2 <= i < j <= n except y2 y3 itself
  const auto p = p_alpha(McpPath::parse("011000"));
  EXPECT_EQ(p.size(), 9u);
  for (const auto& beta : p) {
    EXPECT_EQ(beta.ones(), 2u);
    EXPECT_EQ(beta.at(1), 0);
    EXPECT_NE(beta.to_string(), "011000");
  }
}

TEST(PAlpha, MatchesDefinitionFilter) {
  for (std::size_t n = 1; n <= 11; ++n) {
    for (const auto& a : enumerate_mcps(n, 5)) {
      ASSERT_EQ(to_strings(p_alpha(a)), oracle::p_alpha(a.to_string())) << a.to_string();
    }
  }
}

TEST(PAlpha, AlphaIsLexGreatest) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& a : enumerate_mcps(n, 4)) {
      for (const auto& beta : p_alpha(a)) ASSERT_GT(a.path(), beta);
    }
  }
}

TEST(PAlphaK, FourPrefixFamilies) {
  const auto alpha = McpPath::parse("01011000");
  const auto p4 = p_alpha_k(alpha, 4);
  EXPECT_EQ(to_strings(p4), (std::vector<std::string>{"01001100", "01001010", "01001001", "01000110", "01000101",
                                                      "01000011", "00001110", "00001101", "00001011", "00000111"}));
  std::set<std::string> prefixes;
  for (const auto& b : p4) prefixes.insert(b.prefix(5).to_string());
  EXPECT_EQ(prefixes, (std::set<std::string>{"01001", "01000", "00001", "00000"}));
}

TEST(PAlphaK, FilterAndErrors) {
  const auto alpha = McpPath::parse("0110000");
  for (const auto& b : p_alpha_k(alpha, 2)) {
    EXPECT_EQ(b.at(2), 0);
    EXPECT_EQ(b.ones(), 2u);
  }
  EXPECT_EQ(p_alpha_k(alpha, 2).size(), 10u);  // pairs from positions 3..7
  EXPECT_THROW(p_alpha_k(McpPath::parse("1000"), 1), std::invalid_argument);
  EXPECT_THROW(p_alpha_k(alpha, 4), std::invalid_argument);
}

TEST(UAlphaR, Examples) {
  const auto alpha = McpPath::parse("0101100");
  EXPECT_EQ(to_strings(u_alpha_r(alpha, 1)), (std::vector<std::string>{"01010", "01001", "00011"}));
  EXPECT_EQ(to_strings(u_alpha_r(alpha, 3)), (std::vector<std::string>{"00000"}));
  EXPECT_THROW(u_alpha_r(alpha, 0), std::invalid_argument);
  EXPECT_THROW(u_alpha_r(alpha, 4), std::invalid_argument);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& a : enumerate_mcps(n, 4)) EXPECT_EQ(u_alpha_r(a, 1).size(), a.ones());
  }
}

TEST(UAlphaR, PartitionsPAlpha) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& a : enumerate_mcps(n, 4)) {
      std::multiset<std::string> covered;
      for (std::size_t r = 1; r <= a.ones(); ++r) {
        for (const auto& u : u_alpha_r(a, r)) {
          for (const auto& beta : p_u_alpha(a, u)) {
            covered.insert(beta.to_string());
            ASSERT_EQ(beta.ones() - u.ones(), r);
          }
        }
      }
      const auto all = to_strings(p_alpha(a));
      ASSERT_EQ(covered, std::multiset<std::string>(all.begin(), all.end())) << a.to_string();
    }
  }
}

TEST(UAlphaOneK, Examples) {
  const auto alpha = McpPath::parse("0101100");
  EXPECT_EQ(u_alpha_one_k(alpha, 4).to_string(), "01001");
  EXPECT_EQ(u_alpha_one_k(McpPath::parse("0110000"), 3).to_string(), "010");
  EXPECT_THROW(u_alpha_one_k(alpha, 3), std::invalid_argument);
  for (auto k : alpha.path().one_positions()) {
    const auto u1 = to_strings(u_alpha_r(alpha, 1));
    EXPECT_NE(std::find(u1.begin(), u1.end(), u_alpha_one_k(alpha, k).to_string()), u1.end());
  }
}

TEST(AlphaChild, Examples) {
  const auto alpha = McpPath::parse("0110000");
  EXPECT_EQ(alpha_child(alpha, 2).to_string(), "0011100");
  EXPECT_EQ(alpha_child(alpha, 3).to_string(), "0101100");
  EXPECT_THROW(alpha_child(McpPath::parse("0110"), 2), std::invalid_argument);
  EXPECT_THROW(alpha_child(McpPath::parse("10000"), 1), std::invalid_argument);
}

TEST(AlphaChild, AlwaysMcpWithDPlusTwo) {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (const auto& a : enumerate_mcps(n, 5)) {
      if (a.d() + 2 > n) continue;
      for (auto k : a.path().one_positions()) {
        if (k < 2) continue;
        const auto c = alpha_child(a, k);
        ASSERT_TRUE(oracle::is_mcp(c.to_string()));
        ASSERT_EQ(c.d(), a.d() + 2);
        ASSERT_EQ(c.ones(), a.ones() + 1);
      }
    }
  }
}

TEST(Syt, Examples) {
  const auto t83 = enumerate_syt_two_rows(8, 3);
  Tableau ex{8, {1, 2, 4, 5, 7}, {3, 6, 8}};
  EXPECT_NE(std::find(t83.begin(), t83.end(), ex), t83.end());
  EXPECT_EQ(enumerate_syt_two_rows(4, 2).size(), 2u);
  for (std::size_t n = 0; n <= 9; ++n) EXPECT_EQ(enumerate_syt_two_rows(n, 0).size(), 1u);
  EXPECT_THROW(enumerate_syt_two_rows(5, 3), std::invalid_argument);
}

TEST(Syt, MatchesPermutationOracle) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      auto brute = oracle::syt_by_permutations(n, k);
      std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> got;
      for (const auto& t : enumerate_syt_two_rows(n, k)) {
        ASSERT_TRUE(is_standard(t));
        got.emplace_back(t.row1, t.row2);
      }
      std::sort(brute.begin(), brute.end());
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, brute) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Syt, BallotCount) {
  for (long n = 1; n <= 14; ++n) {
    for (long k = 0; 2 * k <= n; ++k) {
      ASSERT_EQ(mpz_class(static_cast<unsigned long>(enumerate_syt_two_rows(n, k).size())), oracle::ballot(n, k));
    }
  }
}

TEST(Syt, StandardnessChecks) {
  EXPECT_TRUE(is_standard(Tableau{4, {1, 3}, {2, 4}}));
  EXPECT_FALSE(is_standard(Tableau{4, {2, 3}, {1, 4}}));  // column fails
  EXPECT_FALSE(is_standard(Tableau{4, {1, 2}, {4, 3}}));  // row fails
  EXPECT_FALSE(is_standard(Tableau{3, {1}, {2, 3}}));     // not a partition shape
  EXPECT_FALSE(is_standard(Tableau{3, {1, 1}, {2}}));     // repeated entry
}

TEST(TableauToPath, Examples) {
  EXPECT_EQ(tableau_to_path(Tableau{8, {1, 2, 4, 5, 7}, {3, 6, 8}}).to_string(), "00100101");
  EXPECT_EQ(tableau_to_path(Tableau{5, {1, 2, 3, 4, 5}, {}}).to_string(), "00000");
}

TEST(TableauToPath, BijectionOntoAboveDiagonalPaths) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      std::vector<std::string> image;
      for (const auto& t : enumerate_syt_two_rows(n, k)) {
        image.push_back(tableau_to_path(t).to_string());
        ASSERT_EQ(path_to_tableau(tableau_to_path(t)), t);
      }
      ASSERT_EQ(image, oracle::above_diagonal_paths(n, static_cast<long>(k))) << "n=" << n << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace dyckgb
