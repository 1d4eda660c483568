#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "gridhfl/braid.hpp"
#include "gridhfl/grid.hpp"
#include "gridhfl/transverse.hpp"
#include "oracle.hpp"

namespace {

using gridhfl::BraidWord;

BraidWord P(const char* text) { return gridhfl::parse_braid(text); }

/// z+ is a boundary iff appending it as a column leaves the dense rank unchanged.
bool oracle_vanishes(const gridhfl::GridDiagram& g) {
  const auto d = oracle::dense_tilde(g);
  gridhfl::DenseBitMatrix ext(d.rows(), d.cols() + 1);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) ext.set(i, j, d.get(i, j));
  }
  ext.set(gridhfl::state_id(gridhfl::z_plus(g)), d.cols(), true);
  return ext.rank() == d.rank();
}

TEST(Theta, Examples) {
  EXPECT_FALSE(gridhfl::theta(BraidWord(1)).vanishes);
  EXPECT_TRUE(gridhfl::theta(P("2: -1")).vanishes);
  EXPECT_FALSE(gridhfl::theta(P("2: 1 1 1")).vanishes);
}

TEST(Theta, TrivialBraidsDoNotVanish) {
  for (int n = 1; n <= 4; ++n) {
    const auto c = gridhfl::theta(BraidWord(n));
    EXPECT_TRUE(c.is_cycle);
    EXPECT_FALSE(c.vanishes) << n;
  }
}

TEST(Theta, AgreesWithDenseOracle) {
  for (const auto* text : {"1:", "2:", "2: 1", "2: -1", "2: 1 1", "2: 1 -1", "2: -1 -1", "2: 1 1 1", "3: 1 2",
                           "3: 1 -2", "3: -1 -2", "3: 2 1 -2"}) {
    const auto w = P(text);
    const auto g = gridhfl::braid_to_grid(w);
    if (g.size > 6) continue;
    EXPECT_EQ(gridhfl::theta_of_grid(w, g).vanishes, oracle_vanishes(g)) << text;
  }
}

TEST(Theta, CertificatesReverify) {
  for (const auto* text : {"2: -1", "2: 1 1 1", "3: 1 -2 -2", "3: -1 2 -1"}) {
    auto c = gridhfl::theta(P(text));
    EXPECT_TRUE(gridhfl::certificate_checks_out(c)) << text;
    if (c.vanishes) {
      ASSERT_FALSE(c.witness.empty());
      c.witness.pop_back();
      EXPECT_FALSE(gridhfl::certificate_checks_out(c)) << text;
    }
  }
}

TEST(Theta, CapSurfacesGridNumber) {
  gridhfl::ResourceCaps caps;
  caps.boundary_k = 4;
  try {
    gridhfl::theta(P("2: 1 1 1"), caps);
    FAIL() << "expected a cap error";
  } catch (const gridhfl::ResourceCapError& e) {
    EXPECT_GT(e.grid_number(), 4);
    EXPECT_EQ(e.cap(), 4);
  }
}

TEST(NegativeStabilization, Examples) {
  EXPECT_TRUE(gridhfl::check_negative_stabilization(BraidWord(1)).holds());
  EXPECT_TRUE(gridhfl::check_negative_stabilization(P("2: 1")).holds());
  const auto r = gridhfl::check_negative_stabilization(P("2: 1 1 1"));
  EXPECT_FALSE(r.original.vanishes);
  EXPECT_TRUE(r.stabilized.vanishes);
  EXPECT_TRUE(r.holds());
}

TEST(NegativeStabilization, AlwaysVanishes) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<int> letters;
    for (int i = static_cast<int>(rng() % 4); i > 0 && n > 1; --i) {
      const int s = 1 + static_cast<int>(rng() % (n - 1));
      letters.push_back(rng() % 2 ? s : -s);
    }
    const auto st = gridhfl::stabilize(BraidWord(n, letters), -1);
    if (gridhfl::grid_number_for(st) > 9) continue;
    EXPECT_TRUE(gridhfl::theta(st).vanishes) << gridhfl::format_braid(st);
  }
}

TEST(Propagation, Examples) {
  const auto a = gridhfl::check_nonzero_propagation(P("2: 1"), P("2: 1"));
  EXPECT_TRUE(a.hypothesis());
  EXPECT_FALSE(a.hg.vanishes);
  const auto b = gridhfl::check_nonzero_propagation(P("2: 1"), BraidWord(2));
  EXPECT_TRUE(b.holds());
  EXPECT_FALSE(b.hg.vanishes);
  const auto c = gridhfl::check_nonzero_propagation(P("3: 1 2"), P("3: 2 1"));
  EXPECT_TRUE(c.hypothesis());
  EXPECT_FALSE(c.hg.vanishes);
  EXPECT_THROW(gridhfl::check_nonzero_propagation(P("2: 1"), P("3: 1")), gridhfl::InputError);
}

TEST(Alexander, Examples) {
  const auto t = gridhfl::theta_alexander_consistency(P("2: 1 1 1"));
  EXPECT_EQ(t.alexander2, 2);
  EXPECT_TRUE(t.holds());
  EXPECT_EQ(gridhfl::theta_alexander_consistency(BraidWord(1)).alexander2, 0);
  EXPECT_EQ(gridhfl::theta_alexander_consistency(P("2: -1")).alexander2, -2);
  EXPECT_THROW(gridhfl::theta_alexander_consistency(P("2: 1 1")), gridhfl::InputError);
}

TEST(Alexander, HoldsOnKnotsUpToLengthFive) {
  int knots = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<int>> layer{{}};
    for (int len = 0; len <= 5; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& l : layer) {
        const BraidWord w(n, l);
        if (gridhfl::component_partition(w).component_count() == 1) {
          EXPECT_TRUE(gridhfl::theta_alexander_consistency(w).holds()) << gridhfl::format_braid(w);
          ++knots;
        }
        for (int i = 1; i < n; ++i) {
          for (int s : {i, -i}) {
            auto v = l;
            v.push_back(s);
            next.push_back(v);
          }
        }
      }
      layer = std::move(next);
    }
  }
  EXPECT_GT(knots, 100);
}

TEST(Invariance, ConjugationAndPositiveStabilization) {
  for (const auto* text : {"2: 1 1 1", "2: -1", "3: 1 -2", "3: -1 -2 1", "3: 1 2 2", "3: 1 1 -2"}) {
    const auto w = P(text);
    const bool v = gridhfl::theta(w).vanishes;
    for (std::size_t s = 1; s < w.length(); ++s) {
      const auto r = gridhfl::rotate_letters(w, static_cast<int>(s));
      EXPECT_EQ(gridhfl::theta(r).vanishes, v) << gridhfl::format_braid(r);
    }
    for (int i = 1; i < w.strands(); ++i) {
      for (int s : {i, -i}) {
        const auto c = gridhfl::conjugate(w, BraidWord(w.strands(), {s}));
        if (gridhfl::grid_number_for(c) <= 9) {
          EXPECT_EQ(gridhfl::theta(c).vanishes, v) << gridhfl::format_braid(c);
        }
      }
    }
    const auto st = gridhfl::stabilize(w, 1);
    if (gridhfl::grid_number_for(st) <= 9) {
      EXPECT_EQ(gridhfl::theta(st).vanishes, v) << gridhfl::format_braid(st);
    }
  }
}

TEST(Invariance, ExchangeMovesInB3) {
  // every word in s2^{+-1}, reduced or not
  std::vector<BraidWord> frags;
  for (int len = 0; len <= 4; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::vector<int> l;
      for (int i = 0; i < len; ++i) l.push_back((bits >> i) & 1 ? -2 : 2);
      frags.emplace_back(3, l);
    }
  }
  int triples = 0;
  for (const auto& a : frags) {
    for (const auto& b : frags) {
      for (const auto& c : frags) {
        if (a.length() + b.length() + c.length() > 4) continue;
        const auto [x, y] = gridhfl::exchange_move(a, b, c);
        ASSERT_EQ(gridhfl::theta(x).vanishes, gridhfl::theta(y).vanishes)
            << gridhfl::format_braid(x) << " / " << gridhfl::format_braid(y);
        ++triples;
      }
    }
  }
  EXPECT_EQ(triples, 351);
}

TEST(Quasipositive, NeverVanishes) {
  std::mt19937_64 rng(9);
  int tested = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<gridhfl::QuasipositiveFactor> factors;
    for (int f = 1 + static_cast<int>(rng() % 2); f > 0; --f) {
      std::vector<int> u;
      for (int i = static_cast<int>(rng() % 2); i > 0; --i) {
        const int s = 1 + static_cast<int>(rng() % (n - 1));
        u.push_back(rng() % 2 ? s : -s);
      }
      factors.push_back({BraidWord(n, u), 1 + static_cast<int>(rng() % (n - 1))});
    }
    const auto w = gridhfl::quasipositive_witness(n, factors);
    if (gridhfl::grid_number_for(w) > 9) continue;
    EXPECT_FALSE(gridhfl::theta(w).vanishes) << gridhfl::format_braid(w);
    ++tested;
  }
  EXPECT_GT(tested, 30);
}

}  // namespace
