#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "gridhfl/gf2.hpp"

namespace {

using gridhfl::DenseBitMatrix;
using gridhfl::SparseBitMatrix;
using gridhfl::SparseVector;

SparseBitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int per_col) {
  SparseBitMatrix m(rows, cols);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(rows - 1));
  std::uniform_int_distribution<int> count(0, per_col);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::uint32_t> col;
    for (int t = count(rng); t > 0; --t) col.push_back(pick(rng));
    m.set_column(j, col);
  }
  return m;
}

TEST(Gf2, ParityNormalizeCancelsPairs) {
  EXPECT_EQ(gridhfl::parity_normalize({3, 1, 3, 2, 1, 1}), (SparseVector{1, 2}));
  EXPECT_TRUE(gridhfl::parity_normalize({5, 5}).empty());
}

TEST(Gf2, SmallRanks) {
  SparseBitMatrix m(3, 3);
  m.set_column(0, {0, 1});
  m.set_column(1, {1, 2});
  m.set_column(2, {0, 2});  // sum of the first two
  EXPECT_EQ(gridhfl::sparse_rank(m), 2u);
  EXPECT_EQ(DenseBitMatrix(m).rank(), 2u);
  EXPECT_EQ(gridhfl::rank(SparseBitMatrix::identity(7)), 7u);
  EXPECT_EQ(gridhfl::rank(SparseBitMatrix(4, 4)), 0u);
}

TEST(Gf2, EntryOutsideRowsRejected) {
  SparseBitMatrix m(2, 1);
  EXPECT_THROW(m.set_column(0, {2}), gridhfl::InvariantViolation);
}

TEST(Gf2, ProductAndSum) {
  SparseBitMatrix a(2, 2), b(2, 2);
  a.set_column(0, {0, 1});
  a.set_column(1, {1});
  b.set_column(0, {1});
  b.set_column(1, {0});
  const auto ab = a * b;
  EXPECT_EQ(ab.column(0), (SparseVector{1}));
  EXPECT_EQ(ab.column(1), (SparseVector{0, 1}));
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_EQ(a * SparseBitMatrix::identity(2), a);
}

// Sparse elimination against the bit-packed oracle on 100 random matrices.
TEST(Gf2, SparseRankMatchesDenseOracle) {
  std::mt19937_64 rng(2000);
  std::uniform_int_distribution<std::size_t> dim(1, 2000);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = trial < 5 ? 2000 : dim(rng);
    const std::size_t cols = trial < 5 ? 2000 : dim(rng);
    const auto m = random_matrix(rng, rows, cols, trial % 2 == 0 ? 3 : 6);
    ASSERT_EQ(gridhfl::sparse_rank(m), DenseBitMatrix(m).rank()) << "trial " << trial;
  }
}

TEST(Gf2, SolveReturnsAWitness) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, 60, 40, 4);
    // a target in the column space
    std::vector<std::uint32_t> pick;
    for (std::uint32_t j = 0; j < 40; ++j) {
      if (rng() % 3 == 0) pick.push_back(j);
    }
    const auto target = m.apply(gridhfl::parity_normalize(pick));
    const auto sol = gridhfl::sparse_solve(m, target);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), target);
  }
}

TEST(Gf2, SolveDetectsOutsideColumnSpace) {
  SparseBitMatrix m(3, 2);
  m.set_column(0, {0, 1});
  m.set_column(1, {1, 2});
  EXPECT_FALSE(gridhfl::sparse_solve(m, {0}).has_value());
  EXPECT_TRUE(gridhfl::sparse_solve(m, {0, 2}).has_value());
  EXPECT_EQ(*gridhfl::sparse_solve(m, {}), SparseVector{});
}

}  // namespace
