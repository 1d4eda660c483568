#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "gridhfl/permutation.hpp"

namespace {

using gridhfl::factorial;
using gridhfl::permutation_rank;
using gridhfl::permutation_unrank;

TEST(Permutation, FactorialTable) {
  EXPECT_EQ(factorial(0), 1u);
  EXPECT_EQ(factorial(2), 2u);
  EXPECT_EQ(factorial(5), 120u);
  EXPECT_EQ(factorial(12), 479001600u);
  EXPECT_THROW(factorial(21), gridhfl::InputError);
}

TEST(Permutation, RankIsLexicographicIndex) {
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t expected = 0;
    do {
      ASSERT_EQ(permutation_rank(p), expected);
      ASSERT_EQ(permutation_unrank(expected, k), p);
      ++expected;
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(expected, factorial(k));
  }
}

TEST(Permutation, RandomRoundTripAtEight) {
  std::mt19937_64 rng(8);
  std::vector<int> p(8);
  std::iota(p.begin(), p.end(), 0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::shuffle(p.begin(), p.end(), rng);
    const auto r = permutation_rank(p);
    ASSERT_LT(r, factorial(8));
    ASSERT_EQ(permutation_unrank(r, 8), p);
  }
}

TEST(Permutation, ExtremesAtTwelve) {
  std::vector<int> id(12);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(permutation_rank(id), 0u);
  std::vector<int> rev(id.rbegin(), id.rend());
  EXPECT_EQ(permutation_rank(rev), factorial(12) - 1);
}

}  // namespace
