#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "gridhfl/braid.hpp"
#include "gridhfl/grid.hpp"
#include "gridhfl/registry.hpp"

namespace {

using gridhfl::BraidWord;
using gridhfl::GridDiagram;
using gridhfl::InputError;

std::string validate_message(const GridDiagram& g) {
  try {
    gridhfl::validate(g);
  } catch (const InputError& e) {
    return e.what();
  }
  return "ok";
}

GridDiagram random_grid(std::mt19937_64& rng, int k) {
  std::vector<int> x(k), o(k);
  for (int i = 0; i < k; ++i) x[i] = o[i] = i;
  std::shuffle(x.begin(), x.end(), rng);
  do {
    std::shuffle(o.begin(), o.end(), rng);
  } while ([&] {
    for (int c = 0; c < k; ++c) {
      if (x[c] == o[c]) return true;
    }
    return false;
  }());
  return GridDiagram{k, x, o};
}

TEST(Validate, Examples) {
  EXPECT_EQ(validate_message(GridDiagram{2, {0, 1}, {1, 0}}), "ok");
  EXPECT_NE(validate_message(GridDiagram{2, {0, 1}, {0, 1}}).find("shared square in column 0"), std::string::npos);
  EXPECT_NE(validate_message(GridDiagram{3, {0, 0, 1}, {1, 2, 0}}).find("x_rows not a bijection"), std::string::npos);
  EXPECT_NE(validate_message(GridDiagram{3, {0, 1, 2}, {1, 2}}).find("o_rows"), std::string::npos);
  EXPECT_NE(validate_message(GridDiagram{0, {}, {}}), "ok");
}

TEST(TextFormat, RoundTripAndRejects) {
  const GridDiagram g{3, {1, 2, 0}, {0, 1, 2}};
  EXPECT_EQ(gridhfl::format_grid(g), "k=3\nX: 1 2 0\nO: 0 1 2\n");
  EXPECT_EQ(gridhfl::parse_grid(gridhfl::format_grid(g)), g);
  EXPECT_THROW(gridhfl::parse_grid("k=2\nX: 0 1\nO: 0 1\n"), InputError);
  EXPECT_THROW(gridhfl::parse_grid("k=2\nX: 0 1\n"), InputError);
  EXPECT_THROW(gridhfl::parse_grid("size=2\nX: 0 1\nO: 1 0\n"), InputError);
  EXPECT_THROW(gridhfl::parse_grid("k=2\nX: 0 a\nO: 1 0\n"), InputError);
}

TEST(ZPlus, Examples) {
  const GridDiagram g{2, {0, 1}, {1, 0}};
  EXPECT_EQ(gridhfl::z_plus(g).rows, (std::vector<int>{0, 1}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto h = random_grid(rng, 2 + static_cast<int>(rng() % 9));
    const auto z = gridhfl::z_plus(h);
    ASSERT_TRUE(gridhfl::is_valid_state(z));
    // the point sits on the upper right corner of each X square
    for (int c = 0; c < h.size; ++c) EXPECT_EQ(z.rows[(c + 1) % h.size], (h.x_rows[c] + 1) % h.size);
  }
}

TEST(GridToBraid, TwoByTwo) {
  const auto w = gridhfl::grid_to_braid(GridDiagram{2, {1, 0}, {0, 1}});
  EXPECT_EQ(w, BraidWord(1));
  EXPECT_EQ(gridhfl::grid_to_braid(GridDiagram{2, {0, 1}, {1, 0}}), BraidWord(1));
}

TEST(BraidToGrid, SmallExamples) {
  const auto g1 = gridhfl::braid_to_grid(BraidWord(1));
  EXPECT_EQ(g1.size, 2);
  EXPECT_EQ(gridhfl::grid_to_braid(g1), BraidWord(1));
  const auto g2 = gridhfl::braid_to_grid(BraidWord(2, {1}));
  EXPECT_EQ(g2.size, 3);
  EXPECT_EQ(gridhfl::grid_to_braid(g2), BraidWord(2, {1}));
  const auto g3 = gridhfl::braid_to_grid(BraidWord(2, {1, 1, 1}));
  EXPECT_LE(g3.size, 5);
  EXPECT_EQ(gridhfl::grid_to_braid(g3), BraidWord(2, {1, 1, 1}));
  EXPECT_EQ(gridhfl::grid_to_braid(gridhfl::braid_to_grid(BraidWord(3, {1, 2, 1, 2}))), BraidWord(3, {1, 2, 1, 2}));
  EXPECT_EQ(gridhfl::braid_to_grid(BraidWord(2, {1})), g2);  // deterministic
}

// Every link component needs an X and an O in distinct columns, so k >= 2 per component.
TEST(BraidToGrid, TrivialBraidsUseTwoColumnsPerStrand) {
  for (int n = 1; n <= 4; ++n) {
    const auto g = gridhfl::braid_to_grid(BraidWord(n));
    EXPECT_EQ(g.size, 2 * n);
    EXPECT_EQ(gridhfl::grid_component_count(g), n);
  }
}

TEST(BraidToGrid, RoundTripOverAllShortWords) {
  int count = 0;
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<int>> layer{{}};
    for (int len = 0; len <= (n <= 3 ? 5 : 3); ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& letters : layer) {
        const BraidWord w(n, letters);
        const auto g = gridhfl::braid_to_grid(w);
        ASSERT_NO_THROW(gridhfl::validate(g));
        ASSERT_EQ(gridhfl::grid_to_braid(g), w) << gridhfl::format_braid(w);
        int wrapping = 0;
        for (int c = 0; c < g.size; ++c) wrapping += g.x_rows[c] > g.o_rows[c];
        EXPECT_EQ(wrapping, n);
        EXPECT_EQ(gridhfl::grid_component_count(g), gridhfl::component_partition(w).component_count());
        ++count;
        for (int i = 1; i < n; ++i) {
          for (int s : {i, -i}) {
            auto v = letters;
            v.push_back(s);
            next.push_back(std::move(v));
          }
        }
      }
      layer = std::move(next);
    }
  }
  EXPECT_GT(count, 1000);
}

TEST(GridToBraid, RandomGridsReadConsistently) {
  std::mt19937_64 rng(11);
  int read = 0;
  for (int t = 0; t < 500; ++t) {
    const auto g = random_grid(rng, 2 + static_cast<int>(rng() % 7));
    BraidWord w;
    try {
      w = gridhfl::grid_to_braid(g);
    } catch (const InputError&) {
      continue;
    }
    ++read;
    int wrapping = 0;
    for (int c = 0; c < g.size; ++c) wrapping += g.x_rows[c] > g.o_rows[c];
    EXPECT_EQ(w.strands(), wrapping);
    EXPECT_EQ(gridhfl::component_partition(w).component_count(), gridhfl::grid_component_count(g));
  }
  EXPECT_GT(read, 400);
}

TEST(Registry, Lookups) {
  const auto& w1 = gridhfl::find_example("mm_w1");
  ASSERT_TRUE(w1.word);
  EXPECT_EQ(w1.word->strands(), 8);
  EXPECT_EQ(gridhfl::algebraic_length(*w1.word), 11);
  EXPECT_EQ(*gridhfl::find_example("trivial_I3").word, BraidWord(3));
  EXPECT_EQ(*gridhfl::find_example("mm_h").word, BraidWord(8, {6, 5, 6, 4, 5, 6}));
  EXPECT_EQ(gridhfl::find_example("unknot2").diagram().size, 2);
  EXPECT_THROW(gridhfl::find_example("no_such_knot"), InputError);
  std::set<std::string> names;
  for (const auto& e : gridhfl::named_examples()) names.insert(e.name);
  for (const char* n : {"unknot2", "trefoil_b2", "trefoil_b3", "trivial_I1", "trivial_I2", "trivial_I3", "trivial_I4",
                        "mm_w1", "mm_w2", "mm_h", "mm_a", "mm_b", "mm_c"}) {
    EXPECT_TRUE(names.count(n)) << n;
  }
}

}  // namespace
