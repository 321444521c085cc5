#include <necklace/exact_linalg.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace necklace;

namespace {

std::vector<Integer> factors(const std::vector<std::vector<long>>& dense) {
  return smith_normal_form(SparseMatrix::from_dense(dense)).invariant_factors;
}

/// Rank by plain rational elimination on a dense copy.
std::size_t dense_rank(const std::vector<std::vector<long>>& a) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& row : a) m.emplace_back(row.begin(), row.end());
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(Smith, TextbookExample) {
  EXPECT_EQ(factors({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<Integer>{2, 6, 12}));
}

TEST(Smith, DiagonalNeedsRebalancing) {
  EXPECT_EQ(factors({{2, 0}, {0, 3}}), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(factors({{4, 0}, {0, 6}}), (std::vector<Integer>{2, 12}));
}

TEST(Smith, ZeroAndEmpty) {
  EXPECT_TRUE(factors({{0, 0}, {0, 0}}).empty());
  EXPECT_TRUE(smith_normal_form(SparseMatrix(0, 3)).invariant_factors.empty());
}

TEST(Smith, TransformsReproduceDiagonal) {
  SparseMatrix m = SparseMatrix::from_dense({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}, {3, 5, 8}});
  SmithResult s = smith_normal_form(m, true);
  ASSERT_TRUE(s.left && s.right);
  auto U = s.left->to_dense(), M = m.to_dense(), V = s.right->to_dense();
  std::vector<std::vector<Integer>> UM(U.size(), std::vector<Integer>(M[0].size(), 0));
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t k = 0; k < M.size(); ++k)
      for (std::size_t j = 0; j < M[0].size(); ++j) UM[i][j] += U[i][k] * M[k][j];
  for (std::size_t i = 0; i < UM.size(); ++i)
    for (std::size_t j = 0; j < V[0].size(); ++j) {
      Integer e = 0;
      for (std::size_t k = 0; k < V.size(); ++k) e += UM[i][k] * V[k][j];
      Integer want = (i == j && i < s.invariant_factors.size()) ? s.invariant_factors[i] : Integer(0);
      EXPECT_EQ(e, want) << i << "," << j;
    }
}

TEST(Rank, AgreesWithDenseEliminationOnRandomMatrices) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<long>> a(static_cast<std::size_t>(size(rng)), std::vector<long>(static_cast<std::size_t>(size(rng))));
    for (auto& row : a)
      for (auto& x : row) x = (rng() % 3 == 0) ? entry(rng) : 0;
    EXPECT_EQ(rank(SparseMatrix::from_dense(a), CoefficientRing::rationals()), dense_rank(a));
    EXPECT_EQ(rank(SparseMatrix::from_dense(a), CoefficientRing::integers()), dense_rank(a));
  }
}

TEST(Rank, PrimeFieldSeesTorsion) {
  auto m = SparseMatrix::from_dense({{2, 0}, {0, 3}});
  EXPECT_EQ(rank(m, CoefficientRing::prime_field(2)), 1u);
  EXPECT_EQ(rank(m, CoefficientRing::prime_field(3)), 1u);
  EXPECT_EQ(rank(m, CoefficientRing::prime_field(5)), 2u);
  EXPECT_THROW(CoefficientRing::prime_field(4), std::invalid_argument);
}

TEST(Homology, RealProjectivePlaneCellular) {
  // Cellular chains of RP^2: Z <-0- Z <-2- Z.
  SparseMatrix d2 = SparseMatrix::from_dense({{2}});
  SparseMatrix d1 = SparseMatrix::from_dense({{0}});
  DegreeHomology h1 = homology_of_slice(d2, d1, CoefficientRing::integers());
  EXPECT_EQ(h1.free_rank, 0u);
  EXPECT_EQ(h1.torsion, (std::vector<Integer>{2}));
  EXPECT_EQ(homology_of_slice(d2, d1, CoefficientRing::rationals()).free_rank, 0u);
  EXPECT_EQ(homology_of_slice(d2, d1, CoefficientRing::prime_field(2)).free_rank, 1u);
}

TEST(Homology, RejectsNonComplex) {
  SparseMatrix d_in = SparseMatrix::from_dense({{1}});
  SparseMatrix d_out = SparseMatrix::from_dense({{1}});
  EXPECT_THROW(homology_of_slice(d_in, d_out, CoefficientRing::integers()), CompositionNonzeroError);
}
