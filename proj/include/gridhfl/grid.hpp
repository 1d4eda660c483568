#pragma once

// Toroidal grid diagrams. Columns and rows are 0-indexed from the bottom
// left; markings sit in squares; the k vertical (resp. horizontal) grid
// circles are indexed so that square (c, r) has its upper right corner at
// lines ((c + 1) mod k, (r + 1) mod k).

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridhfl/braid.hpp"
#include "gridhfl/errors.hpp"

namespace gridhfl {

struct GridDiagram {
  int size = 0;
  std::vector<int> x_rows;  // row of the X in each column
  std::vector<int> o_rows;  // row of the O in each column

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;
};

/// A generator of the grid complex: rows[v] is the horizontal circle met on
/// vertical circle v.
struct GridState {
  std::vector<int> rows;

  int size() const noexcept { return static_cast<int>(rows.size()); }
  friend bool operator==(const GridState&, const GridState&) = default;
  friend auto operator<=>(const GridState&, const GridState&) = default;
};

namespace detail {

inline std::optional<std::string> permutation_problem(const std::vector<int>& v, int k) {
  if (static_cast<int>(v.size()) != k) return "wrong length";
  std::vector<bool> seen(k, false);
  for (int r : v) {
    if (r < 0 || r >= k) return "entry out of range";
    if (seen[r]) return "not a bijection";
    seen[r] = true;
  }
  return std::nullopt;
}

}  // namespace detail

/// Throws InputError naming the first violated invariant.
inline void validate(const GridDiagram& g) {
  if (g.size < 1) throw InputError("grid size must be positive");
  if (auto p = detail::permutation_problem(g.x_rows, g.size)) throw InputError("x_rows " + *p);
  if (auto p = detail::permutation_problem(g.o_rows, g.size)) throw InputError("o_rows " + *p);
  for (int c = 0; c < g.size; ++c) {
    if (g.x_rows[c] == g.o_rows[c]) throw InputError("shared square in column " + std::to_string(c));
  }
}

inline bool is_valid_state(const GridState& s) { return !detail::permutation_problem(s.rows, s.size()); }

/// Column holding the X (resp. O) in each row.
inline std::vector<int> x_column_of_row(const GridDiagram& g) {
  std::vector<int> out(g.size);
  for (int c = 0; c < g.size; ++c) out[g.x_rows[c]] = c;
  return out;
}

inline std::vector<int> o_column_of_row(const GridDiagram& g) {
  std::vector<int> out(g.size);
  for (int c = 0; c < g.size; ++c) out[g.o_rows[c]] = c;
  return out;
}

/// Upper right corners of the X squares.
inline GridState z_plus(const GridDiagram& g) {
  GridState s{std::vector<int>(g.size)};
  for (int c = 0; c < g.size; ++c) s.rows[(c + 1) % g.size] = (g.x_rows[c] + 1) % g.size;
  return s;
}

/// Link components of the grid: component[c] is the label of column c.
/// Labels are ordered by least column index.
inline std::vector<int> grid_components(const GridDiagram& g) {
  const auto xcol = x_column_of_row(g);
  std::vector<int> label(g.size, -1);
  int next = 0;
  for (int c = 0; c < g.size; ++c) {
    if (label[c] >= 0) continue;
    for (int d = c; label[d] < 0; d = xcol[g.o_rows[d]]) label[d] = next;
    ++next;
  }
  return label;
}

inline int grid_component_count(const GridDiagram& g) {
  const auto label = grid_components(g);
  return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

/// Reads w(G) bottom-up: ascending verticals, columns with the X above the O
/// wrap through the top, horizontal segments pass over vertical ones.
inline BraidWord grid_to_braid(const GridDiagram& g) {
  validate(g);
  const int k = g.size;
  std::vector<int> active;
  for (int c = 0; c < k; ++c) {
    if (g.x_rows[c] > g.o_rows[c]) active.push_back(c);
  }
  if (active.empty()) throw InputError("grid has no wrapping column; braid reading undefined");
  const std::vector<int> bottom = active;
  const auto xcol = x_column_of_row(g);
  const auto ocol = o_column_of_row(g);
  std::vector<int> letters;
  for (int r = 0; r < k; ++r) {
    const int from = ocol[r];
    const int to = xcol[r];
    const auto it = std::find(active.begin(), active.end(), from);
    if (it == active.end()) throw InvariantViolation("O marking on an inactive column");
    const int p = static_cast<int>(it - active.begin());
    active.erase(it);
    const auto lo = std::min(from, to);
    const auto hi = std::max(from, to);
    const int between = static_cast<int>(
        std::count_if(active.begin(), active.end(), [&](int c) { return c > lo && c < hi; }));
    if (to > from) {
      for (int t = 0; t < between; ++t) letters.push_back(p + t + 1);
      active.insert(active.begin() + p + between, to);
    } else {
      for (int t = 0; t < between; ++t) letters.push_back(-(p - t));
      active.insert(active.begin() + p - between, to);
    }
    if (!std::is_sorted(active.begin(), active.end())) throw InvariantViolation("active columns out of order");
  }
  if (active != bottom) throw InvariantViolation("braid reading does not close up");
  return BraidWord(static_cast<int>(bottom.size()), std::move(letters));
}

/// Text form: `k=<int>` / `X: r0 ... r(k-1)` / `O: r0 ... r(k-1)`.
inline std::string format_grid(const GridDiagram& g) {
  std::ostringstream os;
  os << "k=" << g.size << "\nX:";
  for (int r : g.x_rows) os << ' ' << r;
  os << "\nO:";
  for (int r : g.o_rows) os << ' ' << r;
  os << '\n';
  return os.str();
}

inline GridDiagram parse_grid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw InputError("grid text ended early");
  };
  GridDiagram g;
  {
    const std::string head = next_line();
    if (head.rfind("k=", 0) != 0) throw InputError("grid text must start with 'k=<int>'");
    std::size_t used = 0;
    try {
      g.size = std::stoi(head.substr(2), &used);
    } catch (const std::exception&) {
      throw InputError("bad grid size");
    }
    if (used != head.size() - 2) throw InputError("bad grid size");
  }
  auto read_row = [&](const char* tag) {
    const std::string row = next_line();
    const std::string prefix = std::string(tag) + ":";
    if (row.rfind(prefix, 0) != 0) throw InputError(std::string("expected line starting with '") + prefix + "'");
    std::istringstream is(row.substr(prefix.size()));
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw InputError("bad grid entry '" + tok + "'");
      }
      if (used != tok.size()) throw InputError("bad grid entry '" + tok + "'");
      out.push_back(v);
    }
    return out;
  };
  g.x_rows = read_row("X");
  g.o_rows = read_row("O");
  validate(g);
  return g;
}

// ---------------------------------------------------------------------------
// Braid -> grid.
//
// The grid is assembled as a sequence of "moves", one per row: a strand
// leaves its column at the row's O and continues up a freshly created column
// starting at the row's X. A run of letters s_p s_{p+1} ... (or
// s_p^-1 s_{p-1}^-1 ...) is a single move over several strands. Closure
// moves and shift moves carry a strand into an adjacent new column without
// crossing anything. Columns alive at the top are identified with the
// columns alive at the bottom, and a global left-to-right order of all
// columns is recovered by topologically sorting the order relations of each
// horizontal slice.

/// Columns taking part in the X swap that resolves one positive letter.
/// Rows `lower_row` (move of the over-strand) and `lower_row + 1` (shift of
/// the under-strand) satisfy: the lower row has O in `mover_from` and X in
/// `mover_to`; the upper row has O in `shift_from` and X in `shift_to`, with
/// mover_from < shift_to < shift_from < mover_to.
struct ResolutionBand {
  std::size_t letter_index = 0;  // 0-based index in the word
  int lower_row = 0;
  int mover_from = 0;
  int mover_to = 0;
  int shift_from = 0;
  int shift_to = 0;
};

struct GridLayout {
  GridDiagram grid;
  std::vector<ResolutionBand> bands;
};

namespace detail {

class GridAssembler {
 public:
  struct Row {
    int o_col;
    int x_col;
  };

  explicit GridAssembler(int strands) : slice_(strands) {
    std::iota(slice_.begin(), slice_.end(), 0);
    birth_.assign(strands, -1);
    death_.assign(strands, -1);
    record_slice();
  }

  int strands() const { return static_cast<int>(slice_.size()); }
  int rows() const { return static_cast<int>(rows_.size()); }
  int column_at(int pos) const { return slice_[pos]; }
  int birth(int col) const { return birth_[col]; }
  int death(int col) const { return death_[col]; }

  /// Moves the strand at position `from` to position `to`; returns the new column.
  int move(int from, int to) {
    const int old_col = slice_[from];
    const int new_col = static_cast<int>(birth_.size());
    birth_.push_back(rows());
    death_.push_back(-1);
    death_[old_col] = rows();
    rows_.push_back({old_col, new_col});
    slice_.erase(slice_.begin() + from);
    slice_.insert(slice_.begin() + to, new_col);
    record_slice();
    return new_col;
  }

  void require_order(int left, int right) { edges_.emplace_back(left, right); }

  /// Identifies top position p with bottom column p, then sorts columns.
  /// Returns std::nullopt if the identification or the ordering is inconsistent.
  std::optional<std::pair<GridDiagram, std::vector<int>>> finish() const {
    const int n = strands();
    const int total = static_cast<int>(birth_.size());
    std::vector<int> cls(total);
    std::iota(cls.begin(), cls.end(), 0);
    for (int p = 0; p < n; ++p) {
      const int top = slice_[p];
      if (birth_[top] < 0 || death_[p] < 0 || death_[p] >= birth_[top]) return std::nullopt;
      cls[top] = p;
    }
    // compact class ids
    std::vector<int> id(total, -1);
    int k = 0;
    for (int c = 0; c < total; ++c) {
      if (cls[c] == c) id[c] = k++;
    }
    for (int c = 0; c < total; ++c) id[c] = id[cls[c]];
    if (k != rows()) return std::nullopt;

    std::vector<std::vector<int>> out(k);
    std::vector<int> indeg(k, 0);
    auto add_edge = [&](int a, int b) {
      out[id[a]].push_back(id[b]);
      ++indeg[id[b]];
    };
    for (const auto& s : slices_) {
      for (std::size_t i = 1; i < s.size(); ++i) add_edge(s[i - 1], s[i]);
    }
    for (auto [a, b] : edges_) add_edge(a, b);

    // Kahn's algorithm, smallest class id first
    std::vector<int> order;
    std::vector<int> ready;
    for (int c = 0; c < k; ++c) {
      if (indeg[c] == 0) ready.push_back(c);
    }
    while (!ready.empty()) {
      auto it = std::min_element(ready.begin(), ready.end());
      const int c = *it;
      ready.erase(it);
      order.push_back(c);
      for (int d : out[c]) {
        if (--indeg[d] == 0) ready.push_back(d);
      }
    }
    if (static_cast<int>(order.size()) != k) return std::nullopt;
    std::vector<int> position(k);
    for (int i = 0; i < k; ++i) position[order[i]] = i;

    GridDiagram g{k, std::vector<int>(k, -1), std::vector<int>(k, -1)};
    for (int r = 0; r < rows(); ++r) {
      const int oc = position[id[rows_[r].o_col]];
      const int xc = position[id[rows_[r].x_col]];
      if (g.o_rows[oc] >= 0 || g.x_rows[xc] >= 0) return std::nullopt;
      g.o_rows[oc] = r;
      g.x_rows[xc] = r;
    }
    std::vector<int> column_of(total);
    for (int c = 0; c < total; ++c) column_of[c] = position[id[c]];
    return std::make_pair(std::move(g), std::move(column_of));
  }

 private:
  void record_slice() { slices_.push_back(slice_); }

  std::vector<int> slice_;
  std::vector<int> birth_;
  std::vector<int> death_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> slices_;
  std::vector<std::pair<int, int>> edges_;
};

struct MoveSpec {
  int from = 0;
  int to = 0;
  bool band = false;
  std::size_t letter_index = 0;
};

/// Splits the word into moves. Letters flagged in `band_letters` become a
/// stand-alone over-strand move followed by a shift of the under-strand.
inline std::vector<MoveSpec> plan_moves(const BraidWord& w, const std::vector<bool>& band_letters) {
  std::vector<MoveSpec> moves;
  const auto& L = w.letters();
  std::size_t t = 0;
  while (t < L.size()) {
    const int e = L[t];
    const int i = std::abs(e);  // crossing between 0-based positions i-1 and i
    if (band_letters[t]) {
      moves.push_back({i - 1, i, true, t});
      ++t;
      continue;
    }
    MoveSpec m{};
    if (e > 0) {
      m.from = i - 1;
      m.to = i;
      ++t;
      while (t < L.size() && !band_letters[t] && L[t] == m.to + 1) {
        ++m.to;
        ++t;
      }
    } else {
      m.from = i;
      m.to = i - 1;
      ++t;
      while (t < L.size() && !band_letters[t] && L[t] == -m.to) {
        --m.to;
        ++t;
      }
    }
    moves.push_back(m);
  }
  return moves;
}

struct AssemblyPlan {
  std::vector<int> shift_first;    // positions shifted before any letter
  std::vector<int> closure_order;  // top positions closed, in order
};

inline std::optional<GridLayout> assemble(const BraidWord& w, const std::vector<MoveSpec>& moves,
                                          const AssemblyPlan& plan) {
  GridAssembler a(w.strands());
  for (int p : plan.shift_first) a.move(p, p);
  struct PendingBand {
    std::size_t letter;
    int lower_row, mover_from, mover_to, shift_from, shift_to;
  };
  std::vector<PendingBand> pending;
  for (const auto& m : moves) {
    if (!m.band) {
      a.move(m.from, m.to);
      continue;
    }
    const int row = a.rows();
    const int mover_from = a.column_at(m.from);
    const int under = a.column_at(m.to);
    const int mover_to = a.move(m.from, m.to);
    // the under-strand now sits at position m.from; shift it left of its column
    const int shift_to = a.move(m.from, m.from);
    a.require_order(mover_from, shift_to);
    a.require_order(shift_to, under);
    pending.push_back({m.letter_index, row, mover_from, mover_to, under, shift_to});
  }
  for (int p : plan.closure_order) a.move(p, p);
  auto done = a.finish();
  if (!done) return std::nullopt;
  GridLayout out{std::move(done->first), {}};
  const auto& col = done->second;
  for (const auto& b : pending) {
    out.bands.push_back({b.letter, b.lower_row, col[b.mover_from], col[b.mover_to], col[b.shift_from],
                         col[b.shift_to]});
  }
  return out;
}

/// Simulates the body to decide which top positions need a closure move.
inline std::optional<GridLayout> search_layout(const BraidWord& w, const std::vector<MoveSpec>& moves) {
  const int n = w.strands();
  // A strand whose column survives untouched at its own position needs a shift.
  GridAssembler dry(n);
  for (const auto& m : moves) {
    dry.move(m.from, m.to);
    if (m.band) dry.move(m.from, m.from);
  }
  std::vector<int> shifts;
  for (int p = n - 1; p >= 0; --p) {
    if (dry.column_at(p) == p) shifts.push_back(p);
  }

  // Subsets of closed positions by increasing size, then orders.
  std::vector<unsigned> masks(1u << n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });
  const std::size_t max_orders = n <= 5 ? 200000 : 1;
  for (unsigned mask : masks) {
    std::vector<int> closed;
    for (int p = 0; p < n; ++p) {
      if (mask & (1u << p)) closed.push_back(p);
    }
    std::size_t tried = 0;
    do {
      auto layout = assemble(w, moves, {shifts, closed});
      if (layout) return layout;
    } while (++tried < max_orders && std::next_permutation(closed.begin(), closed.end()));
    if (n > 5 && closed.size() > 1) {
      // also try the reverse order once
      std::reverse(closed.begin(), closed.end());
      auto layout = assemble(w, moves, {shifts, closed});
      if (layout) return layout;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Grid for w with the letters at `band_letters` (0-based, each positive)
/// laid out as resolution bands. Deterministic.
inline GridLayout braid_to_grid_layout(const BraidWord& w, const std::vector<std::size_t>& band_letters = {}) {
  std::vector<bool> flags(w.length(), false);
  for (auto t : band_letters) {
    if (t >= w.length()) throw InputError("band letter index out of range");
    if (w.letters()[t] < 0) throw InputError("only positive letters can be resolved");
    flags[t] = true;
  }
  const auto moves = detail::plan_moves(w, flags);
  std::optional<GridLayout> layout;
  if (w.strands() <= 12) layout = detail::search_layout(w, moves);
  if (!layout) {
    // Shift every strand first and close every strand last: always consistent.
    const int n = w.strands();
    detail::AssemblyPlan plan;
    for (int p = n - 1; p >= 0; --p) plan.shift_first.push_back(p);
    for (int p = 0; p < n; ++p) plan.closure_order.push_back(p);
    layout = detail::assemble(w, moves, plan);
  }
  if (!layout) throw InvariantViolation("braid_to_grid: no consistent column order");
  const auto back = grid_to_braid(layout->grid);
  if (!(back == w)) throw InvariantViolation("braid_to_grid: reading does not reproduce the word");
  return *layout;
}

inline GridDiagram braid_to_grid(const BraidWord& w) { return braid_to_grid_layout(w).grid; }

/// Grid number braid_to_grid would produce, without building the complex.
inline int grid_number_for(const BraidWord& w) { return braid_to_grid(w).size; }

}  // namespace gridhfl
