#pragma once

// Search over small negative flype families a s1^m b s1^-1 c / a s1^-1 b s1^m c
// for pairs whose theta invariants split.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gridhfl/braid.hpp"
#include "gridhfl/complex.hpp"
#include "gridhfl/errors.hpp"
#include "gridhfl/grid.hpp"
#include "gridhfl/transverse.hpp"

namespace gridhfl {

struct FlypeCandidate {
  std::size_t index = 0;
  BraidWord a, b, c;
  FlypePair pair;
  bool sl_data_equal = false;
  std::optional<bool> w1_vanishes;  // empty when skipped for the cap
  std::optional<bool> w2_vanishes;
  int k1 = 0;
  int k2 = 0;

  bool evaluated() const { return w1_vanishes.has_value() && w2_vanishes.has_value(); }
  bool split() const { return evaluated() && *w1_vanishes != *w2_vanishes; }
};

struct FlypeSearchResult {
  std::vector<FlypeCandidate> candidates;
  std::size_t skipped = 0;
};

/// Words in sigma_2 .. sigma_{n-1} (and inverses) of length at most max_len.
inline std::vector<BraidWord> flype_fragments(int n, int max_len) {
  std::vector<BraidWord> out{BraidWord(n)};
  if (n < 3) return out;
  std::vector<std::vector<int>> layer{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int i = 2; i < n; ++i) {
        for (int s : {1, -1}) {
          auto v = w;
          v.push_back(s * i);
          if (v.size() >= 2 && v[v.size() - 2] == -v.back()) continue;  // skip unreduced words
          out.emplace_back(n, v);
          next.push_back(std::move(v));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Evaluates every fragment triple. Candidates whose grids exceed
/// `max_k` are kept with empty theta fields and counted as skipped.
/// n = 2 has no fragments beyond the empty word and yields no candidates.
inline FlypeSearchResult flype_search(int n, int max_len, int m, int max_k,
                                      const std::function<void(const std::string&)>& log = {}) {
  if (n < 2) throw InputError("flype search needs at least 2 strands");
  if (m < 1) throw InputError("flype exponent must be >= 1");
  FlypeSearchResult res;
  if (n < 3) return res;
  const auto frags = flype_fragments(n, max_len);
  ResourceCaps caps;
  caps.boundary_k = max_k;
  for (const auto& a : frags) {
    for (const auto& b : frags) {
      for (const auto& c : frags) {
        FlypeCandidate cand;
        cand.index = res.candidates.size();
        cand.a = a;
        cand.b = b;
        cand.c = c;
        cand.pair = negative_flype_pair(a, b, c, m);
        cand.sl_data_equal = self_linking_data(cand.pair.w1) == self_linking_data(cand.pair.w2);
        const auto g1 = braid_to_grid(cand.pair.w1);
        const auto g2 = braid_to_grid(cand.pair.w2);
        cand.k1 = g1.size;
        cand.k2 = g2.size;
        try {
          cand.w1_vanishes = theta_of_grid(cand.pair.w1, g1, caps).vanishes;
          cand.w2_vanishes = theta_of_grid(cand.pair.w2, g2, caps).vanishes;
        } catch (const ResourceCapError& e) {
          cand.w1_vanishes.reset();
          cand.w2_vanishes.reset();
          ++res.skipped;
          if (log) log("skip candidate " + std::to_string(cand.index) + ": " + e.what());
        }
        res.candidates.push_back(std::move(cand));
      }
    }
  }
  return res;
}

}  // namespace gridhfl
