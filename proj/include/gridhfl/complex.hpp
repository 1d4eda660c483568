#pragma once

// Grid chain complexes over F2. Generators are permutations ranked by their
// Lehmer code; a state id is that rank.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridhfl/errors.hpp"
#include "gridhfl/gf2.hpp"
#include "gridhfl/grid.hpp"
#include "gridhfl/permutation.hpp"

namespace gridhfl {

using StateId = std::uint64_t;

struct ResourceCaps {
  int homology_k = 10;  // full complex and homology
  int boundary_k = 12;  // single-bucket boundary solve
  int minus_k = 5;      // minus differential with monomials
};

/// State ids are stored in 32 bits, which holds 12! but not 13!.
inline constexpr int kMaxSupportedGrid = 12;

/// Throws ResourceCapError when k exceeds cap; the estimate is k!.
inline void check_cap(int k, int cap, const std::string& what) {
  cap = std::min(cap, kMaxSupportedGrid);
  if (k <= cap) return;
  const double estimate = std::tgamma(static_cast<double>(k) + 1.0);
  throw ResourceCapError(what + ": grid number " + std::to_string(k) + " exceeds cap " + std::to_string(cap) +
                             " (about " + std::to_string(static_cast<long double>(estimate)) + " generators)",
                         k, cap, estimate);
}

inline std::uint64_t state_count(int k) { return factorial(k); }
inline StateId state_id(const GridState& x) { return permutation_rank(x.rows); }
inline GridState state_at(int k, StateId id) { return GridState{permutation_unrank(id, k)}; }

/// Calls f(id, state) for every generator in id order.
template <class F>
void enumerate_states(int k, F&& f) {
  GridState x{std::vector<int>(k)};
  for (int i = 0; i < k; ++i) x.rows[i] = i;
  StateId id = 0;
  do {
    f(id++, static_cast<const GridState&>(x));
  } while (std::next_permutation(x.rows.begin(), x.rows.end()));
}

/// A rectangle on the torus: the columns from vertical line `left` rightward
/// to line `right` and rows from horizontal line `bottom` upward to `top`,
/// all cyclic. Its lower left and upper right corners lie in start.
struct Rect {
  StateId start = 0;
  StateId end = 0;
  int left = 0;
  int right = 0;
  int bottom = 0;
  int top = 0;

  friend bool operator==(const Rect&, const Rect&) = default;
};

namespace detail {

/// Offset of a from base going forward around a circle of length k.
inline int forward(int base, int a, int k) { return ((a - base) % k + k) % k; }

inline bool square_in_rect(const Rect& r, int col, int row, int k) {
  return forward(r.left, col, k) < forward(r.left, r.right, k) &&
         forward(r.bottom, row, k) < forward(r.bottom, r.top, k);
}

inline bool point_strictly_inside(const Rect& r, int line_v, int line_h, int k) {
  const int dv = forward(r.left, line_v, k);
  const int dh = forward(r.bottom, line_h, k);
  return dv > 0 && dv < forward(r.left, r.right, k) && dh > 0 && dh < forward(r.bottom, r.top, k);
}

}  // namespace detail

/// Rect(x, y): empty unless x and y differ at exactly two vertical lines,
/// otherwise the two complementary rectangles.
inline std::vector<Rect> rectangles(const GridDiagram& g, const GridState& x, const GridState& y) {
  const int k = g.size;
  std::vector<int> diff;
  for (int v = 0; v < k; ++v) {
    if (x.rows[v] != y.rows[v]) diff.push_back(v);
  }
  if (diff.size() != 2) return {};
  const int i = diff[0];
  const int j = diff[1];
  if (x.rows[i] != y.rows[j] || x.rows[j] != y.rows[i]) return {};
  const StateId sx = state_id(x);
  const StateId sy = state_id(y);
  return {Rect{sx, sy, i, j, x.rows[i], x.rows[j]}, Rect{sx, sy, j, i, x.rows[j], x.rows[i]}};
}

inline bool rect_is_empty(const GridDiagram& g, const GridState& x, const Rect& r, bool forbid_o) {
  const int k = g.size;
  for (int v = 0; v < k; ++v) {
    if (detail::point_strictly_inside(r, v, x.rows[v], k)) return false;
  }
  for (int c = 0; c < k; ++c) {
    if (detail::square_in_rect(r, c, g.x_rows[c], k)) return false;
    if (forbid_o && detail::square_in_rect(r, c, g.o_rows[c], k)) return false;
  }
  return true;
}

inline std::vector<Rect> empty_rectangles(const GridDiagram& g, const GridState& x, const GridState& y,
                                          bool forbid_o) {
  auto rs = rectangles(g, x, y);
  std::erase_if(rs, [&](const Rect& r) { return !rect_is_empty(g, x, r, forbid_o); });
  return rs;
}

/// Number of O markings inside r, per column of the O.
inline std::vector<int> o_counts(const GridDiagram& g, const Rect& r) {
  std::vector<int> out(g.size, 0);
  for (int c = 0; c < g.size; ++c) {
    if (detail::square_in_rect(r, c, g.o_rows[c], g.size)) out[c] = 1;
  }
  return out;
}

/// Calls f(left, right) for every rectangle out of x that avoids all
/// markings and x points. Scans right edges for each left edge, keeping the
/// tallest height still allowed.
template <class F>
void for_each_tilde_rectangle(const GridDiagram& g, const std::vector<int>& x, F&& f) {
  const int k = g.size;
  for (int left = 0; left < k; ++left) {
    const int bottom = x[left];
    auto height = [&](int row) { return row >= bottom ? row - bottom : row - bottom + k; };
    int bound = std::min(height(g.x_rows[left]), height(g.o_rows[left]));
    for (int step = 1; step < k && bound > 0; ++step) {
      int right = left + step;
      if (right >= k) right -= k;
      const int h = height(x[right]);
      if (h <= bound) f(left, right);
      bound = std::min({bound, h, height(g.x_rows[right]), height(g.o_rows[right])});
    }
  }
}

/// The differential with every U set to zero, as a k! x k! matrix.
inline SparseBitMatrix tilde_differential(const GridDiagram& g, const ResourceCaps& caps = {}) {
  validate(g);
  check_cap(g.size, caps.homology_k, "tilde differential");
  const std::uint64_t n = state_count(g.size);
  SparseBitMatrix d(n, n);
  std::vector<int> y;
  enumerate_states(g.size, [&](StateId id, const GridState& x) {
    std::vector<std::uint32_t> col;
    for_each_tilde_rectangle(g, x.rows, [&](int l, int r) {
      y = x.rows;
      std::swap(y[l], y[r]);
      col.push_back(static_cast<std::uint32_t>(permutation_rank(y)));
    });
    d.set_column(id, std::move(col));
  });
  return d;
}

/// ∂̃ applied to a chain given as sorted state ids.
inline SparseVector apply_tilde_differential(const GridDiagram& g, const SparseVector& chain) {
  std::vector<std::uint32_t> acc;
  std::vector<int> y;
  for (auto id : chain) {
    const auto x = state_at(g.size, id);
    for_each_tilde_rectangle(g, x.rows, [&](int l, int r) {
      y = x.rows;
      std::swap(y[l], y[r]);
      acc.push_back(static_cast<std::uint32_t>(permutation_rank(y)));
    });
  }
  return parity_normalize(std::move(acc));
}

// ---------------------------------------------------------------------------
// Minus flavor

struct UMonomial {
  std::vector<int> exponents;

  int degree() const {
    int s = 0;
    for (int e : exponents) s += e;
    return s;
  }
  friend auto operator<=>(const UMonomial&, const UMonomial&) = default;
};

inline UMonomial operator*(const UMonomial& a, const UMonomial& b) {
  UMonomial out = a;
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

/// An F2 combination of monomials; adding a present monomial removes it.
using UPolynomial = std::set<UMonomial>;

inline void toggle(UPolynomial& p, const UMonomial& m) {
  if (auto it = p.find(m); it != p.end()) {
    p.erase(it);
  } else {
    p.insert(m);
  }
}

struct MinusDifferential {
  int k = 0;
  std::map<std::pair<StateId, StateId>, UPolynomial> entries;  // (target, source)

  const UPolynomial* entry(StateId target, StateId source) const {
    auto it = entries.find({target, source});
    return it == entries.end() ? nullptr : &it->second;
  }
};

inline MinusDifferential minus_differential(const GridDiagram& g, const ResourceCaps& caps = {}) {
  validate(g);
  check_cap(g.size, caps.minus_k, "minus differential");
  MinusDifferential d{g.size, {}};
  enumerate_states(g.size, [&](StateId sx, const GridState& x) {
    for (int i = 0; i < g.size; ++i) {
      for (int j = i + 1; j < g.size; ++j) {
        GridState y = x;
        std::swap(y.rows[i], y.rows[j]);
        for (const auto& r : empty_rectangles(g, x, y, false)) {
          auto& e = d.entries[{r.end, sx}];
          toggle(e, UMonomial{o_counts(g, r)});
        }
      }
    }
  });
  std::erase_if(d.entries, [](const auto& kv) { return kv.second.empty(); });
  return d;
}

/// Entries of (∂⁻)², nonzero ones only.
inline std::map<std::pair<StateId, StateId>, UPolynomial> minus_square(const MinusDifferential& d) {
  std::map<StateId, std::vector<std::pair<StateId, const UPolynomial*>>> out_of;
  for (const auto& [key, poly] : d.entries) out_of[key.second].emplace_back(key.first, &poly);
  std::map<std::pair<StateId, StateId>, UPolynomial> sq;
  for (const auto& [x, targets] : out_of) {
    for (const auto& [y, p1] : targets) {
      auto it = out_of.find(y);
      if (it == out_of.end()) continue;
      for (const auto& [z, p2] : it->second) {
        auto& e = sq[{z, x}];
        for (const auto& a : *p1) {
          for (const auto& b : *p2) toggle(e, a * b);
        }
      }
    }
  }
  std::erase_if(sq, [](const auto& kv) { return kv.second.empty(); });
  return sq;
}

/// Keeps only the constant monomials: the specialization U = 0.
inline SparseBitMatrix specialize_u_zero(const MinusDifferential& d) {
  const std::uint64_t n = state_count(d.k);
  std::vector<std::vector<std::uint32_t>> cols(n);
  for (const auto& [key, poly] : d.entries) {
    for (const auto& m : poly) {
      if (m.degree() == 0) cols[key.second].push_back(static_cast<std::uint32_t>(key.first));
    }
  }
  SparseBitMatrix out(n, n);
  for (std::uint64_t j = 0; j < n; ++j) out.set_column(j, std::move(cols[j]));
  return out;
}

// ---------------------------------------------------------------------------
// Gradings

/// Maslov grading and twice the Alexander grading of each component.
struct Bigrading {
  int maslov = 0;
  std::vector<int> alexander2;

  int alexander2_total() const {
    int s = 0;
    for (int a : alexander2) s += a;
    return s;
  }
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

/// "p/2" for odd p, the integer otherwise.
inline std::string format_half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

/// Precomputed marking counts for fast grading evaluation.
///
/// Lattice points sit at integer coordinates and markings at half-integer
/// centers. With I(P, Q) the number of pairs p in P, q in Q with p below
/// and left of q, and K(P, Q) = I(P, Q) + I(Q, P):
///   M(x)    = I(x, x) - K(x, O) + I(O, O) + 1
///   4 A_i(x) = 2 (K(x, X_i) - K(x, O_i)) - (K(X + O, X_i) - K(X + O, O_i)) - 2 (n_i - 1)
/// where n_i is the number of columns in component i. These are the
/// standard formulas; M(x) changes by exactly 1 along each empty rectangle.
class GradingTable {
 public:
  explicit GradingTable(const GridDiagram& g) : k_(g.size), labels_(grid_components(g)) {
    validate(g);
    l_ = grid_component_count(g);
    o_table_.assign(k_ * k_, 0);
    comp_table_.assign(l_, std::vector<int>(k_ * k_, 0));
    // marking centers doubled: column c -> 2c + 1
    for (int c = 0; c < k_; ++c) {
      for (int r = 0; r < k_; ++r) {
        for (int m = 0; m < k_; ++m) {
          const int o = lattice_vs_marking(c, r, m, g.o_rows[m]);
          const int xk = lattice_vs_marking(c, r, m, g.x_rows[m]);
          o_table_[c * k_ + r] += o;
          comp_table_[labels_[m]][c * k_ + r] += xk - o;
        }
      }
    }
    std::vector<std::pair<int, int>> o_pts, all_pts;
    std::vector<std::vector<std::pair<int, int>>> xi(l_), oi(l_);
    for (int c = 0; c < k_; ++c) {
      o_pts.emplace_back(2 * c + 1, 2 * g.o_rows[c] + 1);
      all_pts.emplace_back(2 * c + 1, 2 * g.o_rows[c] + 1);
      all_pts.emplace_back(2 * c + 1, 2 * g.x_rows[c] + 1);
      xi[labels_[c]].emplace_back(2 * c + 1, 2 * g.x_rows[c] + 1);
      oi[labels_[c]].emplace_back(2 * c + 1, 2 * g.o_rows[c] + 1);
    }
    maslov_const_ = count_i(o_pts, o_pts) + 1;
    alex_const_.resize(l_);
    for (int i = 0; i < l_; ++i) {
      const int n_i = static_cast<int>(xi[i].size());
      alex_const_[i] = -(count_k(all_pts, xi[i]) - count_k(all_pts, oi[i])) - 2 * (n_i - 1);
    }
  }

  int size() const noexcept { return k_; }
  int component_count() const noexcept { return l_; }
  const std::vector<int>& component_labels() const noexcept { return labels_; }

  Bigrading operator()(const std::vector<int>& x) const {
    Bigrading out;
    out.maslov = maslov_const_;
    std::vector<int> a4(alex_const_);
    for (int c = 0; c < k_; ++c) {
      for (int d = c + 1; d < k_; ++d) {
        if (x[c] < x[d]) ++out.maslov;
      }
      const int cell = c * k_ + x[c];
      out.maslov -= o_table_[cell];
      for (int i = 0; i < l_; ++i) a4[i] += 2 * comp_table_[i][cell];
    }
    out.alexander2.resize(l_);
    for (int i = 0; i < l_; ++i) {
      if (a4[i] % 2 != 0) throw InvariantViolation("Alexander grading not a half-integer");
      out.alexander2[i] = a4[i] / 2;
    }
    return out;
  }

  Bigrading operator()(const GridState& x) const { return (*this)(x.rows); }

 private:
  // contribution of lattice point (c, r) and marking in column m, row mr to K
  static int lattice_vs_marking(int c, int r, int m, int mr) {
    const bool below_left = 2 * c < 2 * m + 1 && 2 * r < 2 * mr + 1;
    const bool above_right = 2 * c > 2 * m + 1 && 2 * r > 2 * mr + 1;
    return (below_left ? 1 : 0) + (above_right ? 1 : 0);
  }

  static int count_i(const std::vector<std::pair<int, int>>& p, const std::vector<std::pair<int, int>>& q) {
    int n = 0;
    for (const auto& a : p) {
      for (const auto& b : q) {
        if (a.first < b.first && a.second < b.second) ++n;
      }
    }
    return n;
  }

  static int count_k(const std::vector<std::pair<int, int>>& p, const std::vector<std::pair<int, int>>& q) {
    return count_i(p, q) + count_i(q, p);
  }

  int k_;
  int l_ = 0;
  std::vector<int> labels_;
  std::vector<int> o_table_;                 // K((c, r), O)
  std::vector<std::vector<int>> comp_table_;  // K((c, r), X_i) - K((c, r), O_i)
  int maslov_const_ = 0;
  std::vector<int> alex_const_;
};

inline Bigrading gradings(const GridDiagram& g, const GridState& x) { return GradingTable(g)(x); }

// ---------------------------------------------------------------------------
// Homology

struct BucketRank {
  Bigrading grading;
  std::uint64_t rank = 0;
};

struct HomologyResult {
  int k = 0;
  int components = 0;
  std::vector<BucketRank> buckets;      // tilde homology, nonzero buckets only
  std::vector<BucketRank> hat_buckets;  // after dividing out the extra O's
  std::uint64_t total = 0;
  std::uint64_t hat_total = 0;
};

namespace detail {

/// Buckets ordered by (Alexander lexicographic, Maslov descending).
struct BucketOrder {
  bool operator()(const Bigrading& a, const Bigrading& b) const {
    if (a.alexander2 != b.alexander2) return a.alexander2 < b.alexander2;
    return a.maslov > b.maslov;
  }
};

using Poly = std::map<Bigrading, std::int64_t, BucketOrder>;

/// Divides p by (1 + t) where t lowers Maslov by 1 and twice the Alexander
/// grading of `component` by 2. Returns nullopt if the division is inexact.
inline std::optional<Poly> divide_by_v(const Poly& p, int component) {
  // ordered by decreasing Maslov so the quotient is solved top down
  std::vector<std::pair<Bigrading, std::int64_t>> terms(p.begin(), p.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.maslov != b.first.maslov) return a.first.maslov > b.first.maslov;
    return a.first.alexander2 < b.first.alexander2;
  });
  Poly q;
  auto lookup = [](const Poly& m, const Bigrading& key) -> std::int64_t {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
  };
  std::set<Bigrading, BucketOrder> keys;
  for (const auto& [b, c] : terms) {
    keys.insert(b);
    Bigrading lower = b;
    lower.maslov -= 1;
    lower.alexander2[component] -= 2;
    keys.insert(lower);
  }
  std::vector<Bigrading> ordered(keys.begin(), keys.end());
  std::sort(ordered.begin(), ordered.end(), [](const Bigrading& a, const Bigrading& b) {
    if (a.maslov != b.maslov) return a.maslov > b.maslov;
    return a.alexander2 < b.alexander2;
  });
  for (const auto& b : ordered) {
    Bigrading upper = b;
    upper.maslov += 1;
    upper.alexander2[component] += 2;
    const std::int64_t c = lookup(p, b) - lookup(q, upper);
    if (c < 0) return std::nullopt;
    if (c > 0) q[b] = c;
  }
  // verify q (1 + t) == p
  Poly back;
  for (const auto& [b, c] : q) {
    back[b] += c;
    Bigrading lower = b;
    lower.maslov -= 1;
    lower.alexander2[component] -= 2;
    back[lower] += c;
  }
  if (back != p) return std::nullopt;
  return q;
}

}  // namespace detail

/// Ranks of H(C̃(G)) per bigrading. The hat ranks come from the relation
/// C̃ = Ĉ ⊗ V^(k - l), one V factor per extra O on each component.
inline HomologyResult homology_ranks(const GridDiagram& g, const ResourceCaps& caps = {}) {
  validate(g);
  check_cap(g.size, caps.homology_k, "homology");
  const int k = g.size;
  const GradingTable grade(g);
  const std::uint64_t n = state_count(k);

  std::map<Bigrading, std::uint32_t, detail::BucketOrder> bucket_of;
  std::vector<Bigrading> bucket_grading;
  std::vector<std::uint32_t> state_bucket(n);
  std::vector<std::uint32_t> local(n);
  std::vector<std::uint32_t> bucket_size;
  enumerate_states(k, [&](StateId id, const GridState& x) {
    auto gr = grade(x);
    auto [it, fresh] = bucket_of.emplace(gr, static_cast<std::uint32_t>(bucket_grading.size()));
    if (fresh) {
      bucket_grading.push_back(gr);
      bucket_size.push_back(0);
    }
    state_bucket[id] = it->second;
    local[id] = bucket_size[it->second]++;
  });

  const std::size_t nb = bucket_grading.size();
  std::vector<std::vector<std::vector<std::uint32_t>>> columns(nb);
  for (std::size_t b = 0; b < nb; ++b) columns[b].resize(bucket_size[b]);
  std::vector<std::int64_t> target_bucket(nb, -1);
  for (std::size_t b = 0; b < nb; ++b) {
    Bigrading t = bucket_grading[b];
    t.maslov -= 1;
    if (auto it = bucket_of.find(t); it != bucket_of.end()) target_bucket[b] = it->second;
  }

  std::vector<int> y;
  enumerate_states(k, [&](StateId id, const GridState& x) {
    const auto b = state_bucket[id];
    auto& col = columns[b][local[id]];
    for_each_tilde_rectangle(g, x.rows, [&](int l, int r) {
      y = x.rows;
      std::swap(y[l], y[r]);
      const auto yid = permutation_rank(y);
      if (static_cast<std::int64_t>(state_bucket[yid]) != target_bucket[b]) {
        throw InvariantViolation("differential does not drop Maslov by one within an Alexander grading");
      }
      col.push_back(local[yid]);
    });
  });
  state_bucket.clear();
  state_bucket.shrink_to_fit();
  local.clear();
  local.shrink_to_fit();

  std::vector<std::uint64_t> out_rank(nb, 0);
  for (std::size_t b = 0; b < nb; ++b) {
    if (target_bucket[b] < 0) continue;
    SparseBitMatrix m(bucket_size[target_bucket[b]], bucket_size[b]);
    for (std::size_t j = 0; j < columns[b].size(); ++j) m.set_column(j, std::move(columns[b][j]));
    columns[b].clear();
    out_rank[b] = rank(m);
  }

  HomologyResult res;
  res.k = k;
  res.components = grade.component_count();
  detail::Poly tilde;
  for (const auto& [gr, b] : bucket_of) {
    std::uint64_t in_rank = 0;
    Bigrading up = gr;
    up.maslov += 1;
    if (auto it = bucket_of.find(up); it != bucket_of.end()) in_rank = out_rank[it->second];
    const std::uint64_t h = bucket_size[b] - out_rank[b] - in_rank;
    if (h > 0) {
      res.buckets.push_back({gr, h});
      tilde[gr] = static_cast<std::int64_t>(h);
    }
    res.total += h;
  }
  const int extra = k - res.components;
  if (res.total % (std::uint64_t{1} << extra) != 0) {
    throw InvariantViolation("tilde rank " + std::to_string(res.total) + " not divisible by 2^" +
                             std::to_string(extra));
  }
  res.hat_total = res.total >> extra;

  std::vector<int> per_component(res.components, 0);
  for (int c = 0; c < k; ++c) ++per_component[grade.component_labels()[c]];
  detail::Poly hat = tilde;
  for (int i = 0; i < res.components; ++i) {
    for (int t = 1; t < per_component[i]; ++t) {
      auto q = detail::divide_by_v(hat, i);
      if (!q) throw InvariantViolation("tilde homology does not factor through the V tensor relation");
      hat = std::move(*q);
    }
  }
  for (const auto& [gr, c] : hat) res.hat_buckets.push_back({gr, static_cast<std::uint64_t>(c)});
  return res;
}

// ---------------------------------------------------------------------------
// Boundary membership

struct BoundaryResult {
  bool is_boundary = false;
  SparseVector witness;  // state ids v with ∂̃ v = chain, when is_boundary
};

/// Decides whether a ∂̃-cycle (sorted state ids) is a boundary. Each
/// homogeneous piece is solved inside the bucket one Maslov grading above.
inline BoundaryResult is_boundary(const GridDiagram& g, const SparseVector& chain, const ResourceCaps& caps = {}) {
  validate(g);
  check_cap(g.size, caps.boundary_k, "boundary solve");
  const int k = g.size;
  const std::uint64_t n = state_count(k);
  for (auto id : chain) {
    if (id >= n) throw InputError("state id out of range");
  }
  if (!std::is_sorted(chain.begin(), chain.end()) ||
      std::adjacent_find(chain.begin(), chain.end()) != chain.end()) {
    throw InputError("chain must be sorted without repeats");
  }
  if (!apply_tilde_differential(g, chain).empty()) throw InputError("chain is not a cycle");
  BoundaryResult res{true, {}};
  if (chain.empty()) return res;

  const GradingTable grade(g);
  std::map<Bigrading, SparseVector> pieces;
  for (auto id : chain) pieces[grade(state_at(k, id))].push_back(id);

  std::map<Bigrading, std::vector<StateId>> sources;
  for (const auto& [gr, piece] : pieces) {
    Bigrading up = gr;
    up.maslov += 1;
    sources[up];
  }
  enumerate_states(k, [&](StateId id, const GridState& x) {
    auto it = sources.find(grade(x));
    if (it != sources.end()) it->second.push_back(id);
  });

  std::vector<int> y;
  std::vector<std::uint32_t> acc;
  for (const auto& [gr, piece] : pieces) {
    Bigrading up = gr;
    up.maslov += 1;
    const auto& src = sources[up];
    // rows: target states indexed on first sight
    std::unordered_map<StateId, std::uint32_t> row_of;
    auto row = [&](StateId s) {
      auto [it, fresh] = row_of.emplace(s, static_cast<std::uint32_t>(row_of.size()));
      return it->second;
    };
    SparseVector target;
    for (auto id : piece) target.push_back(row(id));
    std::vector<std::vector<std::uint32_t>> cols(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
      const auto x = state_at(k, src[j]);
      for_each_tilde_rectangle(g, x.rows, [&](int l, int r) {
        y = x.rows;
        std::swap(y[l], y[r]);
        cols[j].push_back(row(permutation_rank(y)));
      });
    }
    SparseBitMatrix m(row_of.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) m.set_column(j, std::move(cols[j]));
    auto sol = sparse_solve(m, parity_normalize(std::move(target)));
    if (!sol) return BoundaryResult{false, {}};
    for (auto j : *sol) acc.push_back(static_cast<std::uint32_t>(src[j]));
  }
  res.witness = parity_normalize(std::move(acc));
  return res;
}

}  // namespace gridhfl
