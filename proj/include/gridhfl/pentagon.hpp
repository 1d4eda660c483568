#pragma once

// The pentagon chain map resolving a positive crossing.
//
// G_beta is the grid of w with the resolved letter laid out as a band (see
// ResolutionBand). G_gamma keeps every marking in place and replaces the
// horizontal circle beta between the two band rows by a curve gamma that
// dips below the X of the lower row and rises above the X of the upper row;
// straightened, G_gamma is G_beta with those two X's exchanged between rows,
// and it reads w with the letter deleted.
//
// Geometry is done in quarter units: vertical circle v at 4v, horizontal
// circle h at 4h, the marking of square (c, r) at (4c + 2, 4r + 2). beta
// sits at height 4r. gamma runs at 4r - 3 on the open arc (a, b) and at
// 4r + 3 elsewhere, where a = 4 D + 5 and b = 4 N + 5 (D = band.shift_to,
// N = band.mover_to). b is where gamma climbs over beta going rightwards.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridhfl/braid.hpp"
#include "gridhfl/complex.hpp"
#include "gridhfl/errors.hpp"
#include "gridhfl/gf2.hpp"
#include "gridhfl/grid.hpp"
#include "gridhfl/transverse.hpp"

namespace gridhfl {

struct ResolutionPair {
  BraidWord word_beta;   // the word containing the resolved letter
  BraidWord word_gamma;  // the same word with that letter deleted
  GridDiagram g_beta;
  GridDiagram g_gamma;
  ResolutionBand band;
  int special_circle = 0;  // horizontal circle where beta and gamma differ
  int a = 0;               // quarter-unit abscissa of the left crossing
  int b = 0;               // quarter-unit abscissa of the distinguished crossing
};

namespace detail {

inline GridDiagram swap_band_xs(GridDiagram g, const ResolutionBand& band) {
  // lower row: X moves from mover_to to shift_to; upper row the other way
  std::swap(g.x_rows[band.mover_to], g.x_rows[band.shift_to]);
  return g;
}

inline ResolutionPair make_pair(const BraidWord& w, const GridDiagram& g_beta, const ResolutionBand& band) {
  const int k = g_beta.size;
  ResolutionPair p;
  p.word_beta = w;
  std::vector<int> rest;
  for (std::size_t t = 0; t < w.length(); ++t) {
    if (t != band.letter_index) rest.push_back(w.letters()[t]);
  }
  p.word_gamma = BraidWord(w.strands(), std::move(rest));
  p.g_beta = g_beta;
  p.g_gamma = swap_band_xs(g_beta, band);
  p.band = band;
  p.special_circle = (band.lower_row + 1) % k;
  p.a = (4 * band.shift_to + 5) % (4 * k);
  p.b = (4 * band.mover_to + 5) % (4 * k);
  return p;
}

}  // namespace detail

/// Resolution of the positive letter at 0-based index `letter_index` of w.
inline ResolutionPair build_resolution(const BraidWord& w, std::size_t letter_index) {
  if (letter_index >= w.length()) throw InputError("letter index out of range");
  if (w.letters()[letter_index] <= 0) throw InputError("resolved letter must be a positive generator");
  const auto layout = braid_to_grid_layout(w, {letter_index});
  auto pair = detail::make_pair(w, layout.grid, layout.bands.at(0));
  if (!(grid_to_braid(pair.g_gamma) == pair.word_gamma)) {
    throw InvariantViolation("resolved grid does not read the resolved word");
  }
  return pair;
}

/// Resolution of the final letter, which must be positive.
inline ResolutionPair build_resolution_last(const BraidWord& w) {
  if (w.empty()) throw InputError("cannot resolve a letter of the empty word");
  return build_resolution(w, w.length() - 1);
}

/// A pentagon from x (on G_beta) to y (on G_gamma). x meets beta on vertical
/// circle `beta_line`; y meets gamma on `gamma_line`; `height` is the
/// horizontal circle x meets on gamma_line. When `through_left` is set the
/// region spans the columns from beta_line rightwards to gamma_line and lies
/// above beta and gamma; otherwise it spans gamma_line rightwards to
/// beta_line and lies below them.
struct Pentagon {
  StateId start = 0;
  StateId end = 0;
  int beta_line = 0;
  int gamma_line = 0;
  int height = 0;
  bool through_left = false;
};

namespace detail {

class PentagonGeometry {
 public:
  explicit PentagonGeometry(const ResolutionPair& p)
      : g_(p.g_beta), k_(p.g_beta.size), period_(4 * p.g_beta.size), r_(p.special_circle), a_(p.a), b_(p.b) {}

  int fwd(int base, int v) const { return ((v - base) % period_ + period_) % period_; }

  int gamma_height(int xpos) const {
    const int da = fwd(a_, xpos);
    return (da > 0 && da < fwd(a_, b_)) ? 4 * r_ - 3 : 4 * r_ + 3;
  }

  /// The pentagon with corners x ∩ beta on v1 and x on v2, if one exists.
  Pentagon shape(const std::vector<int>& x, int v1, int v2) const {
    Pentagon pg;
    pg.beta_line = v1;
    pg.gamma_line = v2;
    pg.height = x[v2];
    const int span = fwd(4 * v1, 4 * v2);
    pg.through_left = fwd(4 * v1, b_) < span;
    return pg;
  }

  /// Quarter-unit curve height at xpos: beta on one side of b, gamma on the other.
  int curve_height(const Pentagon& pg, int xpos) const {
    const int left = pg.through_left ? 4 * pg.beta_line : 4 * pg.gamma_line;
    const bool before_b = fwd(left, xpos) < fwd(left, b_);
    if (pg.through_left) return before_b ? 4 * r_ : gamma_height(xpos);
    return before_b ? gamma_height(xpos) : 4 * r_;
  }

  bool inside(const Pentagon& pg, int xpos, int ypos) const {
    const int curve = ((curve_height(pg, xpos) % period_) + period_) % period_;
    const int line = 4 * pg.height;
    if (pg.through_left) {
      const int d = fwd(curve, ypos);
      return d > 0 && d < fwd(curve, line);
    }
    const int d = fwd(line, ypos);
    return d > 0 && d < fwd(line, curve);
  }

  bool is_empty(const Pentagon& pg, const std::vector<int>& x, bool forbid_o) const {
    const int left = pg.through_left ? pg.beta_line : pg.gamma_line;
    const int right = pg.through_left ? pg.gamma_line : pg.beta_line;
    const int width = fwd(4 * left, 4 * right) / 4;
    for (int s = 1; s < width; ++s) {
      const int v = (left + s) % k_;
      if (inside(pg, 4 * v, 4 * x[v])) return false;
    }
    for (int s = 0; s < width; ++s) {
      const int c = (left + s) % k_;
      const int xpos = 4 * c + 2;
      if (inside(pg, xpos, 4 * g_.x_rows[c] + 2)) return false;
      if (forbid_o && inside(pg, xpos, 4 * g_.o_rows[c] + 2)) return false;
    }
    return true;
  }

  int size() const { return k_; }
  int special() const { return r_; }

 private:
  const GridDiagram& g_;
  int k_;
  int period_;
  int r_;
  int a_;
  int b_;
};

}  // namespace detail

/// Empty pentagons from x to y.
inline std::vector<Pentagon> pentagons(const ResolutionPair& pair, const GridState& x, const GridState& y,
                                       bool forbid_o) {
  const int k = pair.g_beta.size;
  const int r = pair.special_circle;
  int v1 = -1;
  std::vector<int> diff;
  for (int v = 0; v < k; ++v) {
    if (x.rows[v] == r) v1 = v;
    if (x.rows[v] != y.rows[v]) diff.push_back(v);
  }
  if (diff.size() != 2 || v1 < 0) return {};
  const int v2 = diff[0] == v1 ? diff[1] : diff[0];
  if (diff[0] != v1 && diff[1] != v1) return {};
  if (y.rows[v2] != r || y.rows[v1] != x.rows[v2]) return {};
  const detail::PentagonGeometry geo(pair);
  auto pg = geo.shape(x.rows, v1, v2);
  if (!geo.is_empty(pg, x.rows, forbid_o)) return {};
  pg.start = state_id(x);
  pg.end = state_id(y);
  return {pg};
}

/// Calls f(target) for every empty pentagon out of x.
template <class F>
void for_each_pentagon(const ResolutionPair& pair, const detail::PentagonGeometry& geo, const std::vector<int>& x,
                       bool forbid_o, F&& f) {
  const int k = pair.g_beta.size;
  const int r = pair.special_circle;
  int v1 = 0;
  while (x[v1] != r) ++v1;
  std::vector<int> y;
  for (int v2 = 0; v2 < k; ++v2) {
    if (v2 == v1) continue;
    const auto pg = geo.shape(x, v1, v2);
    if (!geo.is_empty(pg, x, forbid_o)) continue;
    y = x;
    y[v1] = x[v2];
    y[v2] = r;
    f(y);
  }
}

/// The tilde pentagon map C̃(G_beta) -> C̃(G_gamma).
inline SparseBitMatrix phi_tilde(const ResolutionPair& pair, const ResourceCaps& caps = {}) {
  check_cap(pair.g_beta.size, caps.homology_k, "pentagon map");
  const int k = pair.g_beta.size;
  const std::uint64_t n = state_count(k);
  const detail::PentagonGeometry geo(pair);
  SparseBitMatrix phi(n, n);
  enumerate_states(k, [&](StateId id, const GridState& x) {
    std::vector<std::uint32_t> col;
    for_each_pentagon(pair, geo, x.rows, true,
                      [&](const std::vector<int>& y) { col.push_back(static_cast<std::uint32_t>(permutation_rank(y))); });
    phi.set_column(id, std::move(col));
  });
  return phi;
}

inline SparseVector apply_phi_tilde(const ResolutionPair& pair, const SparseVector& chain) {
  const detail::PentagonGeometry geo(pair);
  std::vector<std::uint32_t> acc;
  for (auto id : chain) {
    const auto x = state_at(pair.g_beta.size, id);
    for_each_pentagon(pair, geo, x.rows, true,
                      [&](const std::vector<int>& y) { acc.push_back(static_cast<std::uint32_t>(permutation_rank(y))); });
  }
  return parity_normalize(std::move(acc));
}

struct PentagonReport {
  int k = 0;
  std::size_t pentagons_to_z_plus = 0;       // empty pentagons z+(beta) -> z+(gamma), X's forbidden
  std::size_t other_targets = 0;             // other states reached from z+(beta)
  bool chain_map = false;                    // ∂̃_gamma φ̃ = φ̃ ∂̃_beta
  bool theta_maps_to_theta = false;          // φ̃(z+(beta)) = z+(gamma)
  bool passed() const { return pentagons_to_z_plus == 1 && other_targets == 0 && chain_map && theta_maps_to_theta; }
};

/// Checks the pentagon facts about z+ and the chain map identity.
inline PentagonReport verify_theta_pentagon(const ResolutionPair& pair, const ResourceCaps& caps = {}) {
  validate(pair.g_beta);
  validate(pair.g_gamma);
  PentagonReport rep;
  rep.k = pair.g_beta.size;
  const auto zb = z_plus(pair.g_beta);
  const auto zg = z_plus(pair.g_gamma);
  const detail::PentagonGeometry geo(pair);
  for_each_pentagon(pair, geo, zb.rows, false, [&](const std::vector<int>& y) {
    if (y == zg.rows) {
      ++rep.pentagons_to_z_plus;
    } else {
      ++rep.other_targets;
    }
  });
  const auto phi = phi_tilde(pair, caps);
  const auto db = tilde_differential(pair.g_beta, caps);
  const auto dg = tilde_differential(pair.g_gamma, caps);
  rep.chain_map = (dg * phi) == (phi * db);
  rep.theta_maps_to_theta = phi.apply({static_cast<std::uint32_t>(state_id(zb))}) ==
                            SparseVector{static_cast<std::uint32_t>(state_id(zg))};
  return rep;
}

struct CompositeResolution {
  BraidWord start;
  BraidWord final_word;
  std::vector<GridDiagram> grids;  // grids[0] for start, one per stage after
  SparseBitMatrix composite;
  bool chain_map = false;
  bool theta_maps_to_theta = false;
};

/// Resolves the positive letters at `positions` (0-based indices into w) one
/// after another on a single grid carrying one band per letter, and
/// multiplies the stage maps.
inline CompositeResolution compose_resolutions(const BraidWord& w, const std::vector<std::size_t>& positions,
                                               const ResourceCaps& caps = {}) {
  for (std::size_t s = 0; s < positions.size(); ++s) {
    if (positions[s] >= w.length()) throw InputError("resolution position out of range");
    if (w.letters()[positions[s]] <= 0) throw InputError("resolved letters must be positive");
    for (std::size_t t = 0; t < s; ++t) {
      if (positions[t] == positions[s]) throw InputError("a letter can be resolved only once");
    }
  }
  const auto layout = braid_to_grid_layout(w, positions);
  CompositeResolution out;
  out.start = w;
  out.grids.push_back(layout.grid);
  check_cap(layout.grid.size, caps.homology_k, "composite resolution");
  const std::uint64_t n = state_count(layout.grid.size);
  out.composite = SparseBitMatrix::identity(n);

  std::vector<bool> removed(w.length(), false);
  GridDiagram current = layout.grid;
  for (auto pos : positions) {
    const auto it = std::find_if(layout.bands.begin(), layout.bands.end(),
                                 [&](const ResolutionBand& b) { return b.letter_index == pos; });
    if (it == layout.bands.end()) throw InvariantViolation("missing resolution band");
    std::vector<int> cur_letters;
    for (std::size_t t = 0; t < w.length(); ++t) {
      if (!removed[t]) cur_letters.push_back(w.letters()[t]);
    }
    auto pair = detail::make_pair(w, current, *it);
    removed[pos] = true;
    std::vector<int> rest;
    for (std::size_t t = 0; t < w.length(); ++t) {
      if (!removed[t]) rest.push_back(w.letters()[t]);
    }
    pair.word_beta = BraidWord(w.strands(), std::move(cur_letters));
    pair.word_gamma = BraidWord(w.strands(), std::move(rest));
    if (!(grid_to_braid(pair.g_gamma) == pair.word_gamma)) {
      throw InvariantViolation("stage grid does not read the partially resolved word");
    }
    out.composite = phi_tilde(pair, caps) * out.composite;
    current = pair.g_gamma;
    out.grids.push_back(current);
    out.final_word = pair.word_gamma;
  }
  if (positions.empty()) out.final_word = w;
  const auto d0 = tilde_differential(out.grids.front(), caps);
  const auto d1 = tilde_differential(out.grids.back(), caps);
  out.chain_map = (d1 * out.composite) == (out.composite * d0);
  out.theta_maps_to_theta =
      out.composite.apply({static_cast<std::uint32_t>(state_id(z_plus(out.grids.front())))}) ==
      SparseVector{static_cast<std::uint32_t>(state_id(z_plus(out.grids.back())))};
  return out;
}

struct ComultiplicationReport {
  ThetaCertificate product;      // T_{hg}
  ThetaCertificate connected;    // T_g # T_h
  bool holds() const { return connected.vanishes || !product.vanishes; }
};

/// theta(g # h) nonzero should force theta(h g) nonzero.
inline ComultiplicationReport comultiplication_check(const BraidWord& g, const BraidWord& h,
                                                     const ResourceCaps& caps = {}) {
  if (g.strands() != h.strands()) throw InputError("braids must have the same strand count");
  return {theta(h * g, caps), theta(connected_sum_word(g, h), caps)};
}

}  // namespace gridhfl
