#include <set>

#include <gtest/gtest.h>

#include "gridhfl/flype_search.hpp"

namespace {

using gridhfl::BraidWord;

TEST(Fragments, AvoidFirstGeneratorAndStayReduced) {
  EXPECT_EQ(gridhfl::flype_fragments(2, 3).size(), 1u);
  const auto f3 = gridhfl::flype_fragments(3, 3);
  EXPECT_EQ(f3.size(), 7u);  // empty, s2^{+-j} for j = 1..3
  const auto f4 = gridhfl::flype_fragments(4, 2);
  EXPECT_EQ(f4.size(), 1u + 4u + 12u);
  std::set<std::vector<int>> seen;
  for (const auto& w : f4) {
    EXPECT_TRUE(seen.insert(w.letters()).second);
    for (std::size_t i = 0; i < w.length(); ++i) {
      EXPECT_GE(std::abs(w.letters()[i]), 2);
      if (i > 0) {
        EXPECT_NE(w.letters()[i], -w.letters()[i - 1]);
      }
    }
  }
}

TEST(Search, TwoStrandsHasNoCandidates) {
  const auto r = gridhfl::flype_search(2, 3, 2, 8);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_THROW(gridhfl::flype_search(1, 1, 2, 8), gridhfl::InputError);
  EXPECT_THROW(gridhfl::flype_search(3, 1, 0, 8), gridhfl::InputError);
}

TEST(Search, SmallThreeStrandFamily) {
  const auto r = gridhfl::flype_search(3, 1, 1, 9);
  EXPECT_EQ(r.candidates.size(), 27u);
  for (const auto& c : r.candidates) {
    EXPECT_EQ(c.pair.w1, c.a * BraidWord(3, {1}) * c.b * BraidWord(3, {-1}) * c.c);
    // odd exponents keep the permutations, hence the self-linking data, equal
    EXPECT_TRUE(c.sl_data_equal);
    ASSERT_TRUE(c.evaluated());
    // the pair is a conjugate/exchange pair for m = 1: theta must agree
    EXPECT_FALSE(c.split());
  }
  EXPECT_EQ(r.skipped, 0u);
}

TEST(Search, CapMarksCandidatesSkipped) {
  std::size_t logged = 0;
  const auto r = gridhfl::flype_search(3, 1, 2, 4, [&](const std::string&) { ++logged; });
  EXPECT_EQ(r.skipped, r.candidates.size());
  EXPECT_EQ(logged, r.skipped);
  for (const auto& c : r.candidates) EXPECT_FALSE(c.evaluated());
}

}  // namespace
