#pragma once

// Brute-force reference computations shared by the tests. They enumerate
// rectangles from the definition and take dense ranks over all k! states,
// sharing nothing with the library's fast paths except state ids.

#include <cstdint>
#include <vector>

#include "gridhfl/complex.hpp"
#include "gridhfl/gf2.hpp"
#include "gridhfl/grid.hpp"

namespace oracle {

inline bool cyc_between(int lo, int v, int hi, int k) {
  // lo < v < hi walking upward from lo
  const int dv = ((v - lo) % k + k) % k;
  const int dh = ((hi - lo) % k + k) % k;
  return dv > 0 && dv < dh;
}

inline bool cyc_half_open(int lo, int v, int hi, int k) {
  const int dv = ((v - lo) % k + k) % k;
  const int dh = ((hi - lo) % k + k) % k;
  return dv < dh;
}

/// Number of empty rectangles from x to y, counting from the corner rule:
/// lower left and upper right corners in x.
inline int count_empty(const gridhfl::GridDiagram& g, const std::vector<int>& x, const std::vector<int>& y,
                       bool forbid_o) {
  const int k = g.size;
  std::vector<int> diff;
  for (int v = 0; v < k; ++v) {
    if (x[v] != y[v]) diff.push_back(v);
  }
  if (diff.size() != 2) return 0;
  const int i = diff[0], j = diff[1];
  if (x[i] != y[j] || x[j] != y[i]) return 0;
  int n = 0;
  for (auto [l, r] : {std::pair{i, j}, std::pair{j, i}}) {
    const int bottom = x[l], top = x[r];
    bool empty = true;
    for (int c = 0; c < k && empty; ++c) {
      if (!cyc_half_open(l, c, r, k)) continue;
      if (cyc_half_open(bottom, g.x_rows[c], top, k)) empty = false;
      if (forbid_o && cyc_half_open(bottom, g.o_rows[c], top, k)) empty = false;
    }
    for (int v = 0; v < k && empty; ++v) {
      if (cyc_between(l, v, r, k) && cyc_between(bottom, x[v], top, k)) empty = false;
    }
    n += empty;
  }
  return n;
}

inline std::vector<std::vector<int>> all_states(int k) {
  std::vector<std::vector<int>> out;
  gridhfl::enumerate_states(k, [&](gridhfl::StateId, const gridhfl::GridState& s) { out.push_back(s.rows); });
  return out;
}

/// Dense tilde differential, entry (y, x) = parity of the rectangle count.
inline gridhfl::DenseBitMatrix dense_tilde(const gridhfl::GridDiagram& g) {
  const auto states = all_states(g.size);
  gridhfl::DenseBitMatrix m(states.size(), states.size());
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < states.size(); ++b) {
      if (count_empty(g, states[a], states[b], true) % 2) m.set(b, a, true);
    }
  }
  return m;
}

/// Total rank of the tilde homology: dim C - 2 rank(d).
inline std::uint64_t tilde_total(const gridhfl::GridDiagram& g) {
  const auto d = dense_tilde(g);
  return d.cols() - 2 * d.rank();
}

}  // namespace oracle
