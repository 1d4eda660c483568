#pragma once

// Linear algebra over F2. SparseBitMatrix stores each column as a sorted
// list of row indices; DenseBitMatrix stores bit-packed rows. Both provide a
// rank, and the two eliminations are independent of each other.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridhfl/errors.hpp"

namespace gridhfl {

using SparseVector = std::vector<std::uint32_t>;  // sorted, no duplicates

/// a ^= b for sorted index vectors.
inline void xor_into(SparseVector& a, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  a.swap(out);
}

/// Sorts and cancels repeated indices in pairs.
inline SparseVector parity_normalize(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  SparseVector out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  return out;
}

class SparseBitMatrix {
 public:
  SparseBitMatrix() = default;
  SparseBitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const SparseVector& column(std::size_t j) const { return columns_[j]; }

  /// Replaces column j; entries are reduced mod 2.
  void set_column(std::size_t j, std::vector<std::uint32_t> entries) {
    auto v = parity_normalize(std::move(entries));
    if (!v.empty() && v.back() >= rows_) throw InvariantViolation("matrix entry outside declared rows");
    columns_[j] = std::move(v);
  }

  bool get(std::size_t i, std::size_t j) const {
    const auto& c = columns_[j];
    return std::binary_search(c.begin(), c.end(), static_cast<std::uint32_t>(i));
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
  }

  SparseVector apply(const SparseVector& v) const {
    std::vector<std::uint32_t> acc;
    for (auto j : v) acc.insert(acc.end(), columns_[j].begin(), columns_[j].end());
    return parity_normalize(std::move(acc));
  }

  /// this * rhs over F2.
  SparseBitMatrix operator*(const SparseBitMatrix& rhs) const {
    if (cols() != rhs.rows()) throw InvariantViolation("matrix product dimension mismatch");
    SparseBitMatrix out(rows_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) out.columns_[j] = apply(rhs.columns_[j]);
    return out;
  }

  SparseBitMatrix operator+(const SparseBitMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw InvariantViolation("matrix sum dimension mismatch");
    SparseBitMatrix out = *this;
    for (std::size_t j = 0; j < cols(); ++j) xor_into(out.columns_[j], rhs.columns_[j]);
    return out;
  }

  static SparseBitMatrix identity(std::size_t n) {
    SparseBitMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) out.columns_[j] = {static_cast<std::uint32_t>(j)};
    return out;
  }

  friend bool operator==(const SparseBitMatrix&, const SparseBitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Column reduction keyed on the largest row index of each column.
inline std::size_t sparse_rank(const SparseBitMatrix& m) {
  std::unordered_map<std::uint32_t, SparseVector> pivots;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVector col = m.column(j);
    while (!col.empty()) {
      auto it = pivots.find(col.back());
      if (it == pivots.end()) break;
      xor_into(col, it->second);
    }
    if (!col.empty()) {
      const auto low = col.back();
      pivots.emplace(low, std::move(col));
      ++rank;
    }
  }
  return rank;
}

/// Solves m * x = target. Returns the set of columns x, or nullopt if the
/// target is not in the column space.
inline std::optional<SparseVector> sparse_solve(const SparseBitMatrix& m, SparseVector target) {
  struct Pivot {
    SparseVector reduced;
    SparseVector combo;  // original columns summing to `reduced`
  };
  std::unordered_map<std::uint32_t, Pivot> pivots;
  auto reduce = [&](SparseVector& v, SparseVector& combo) {
    while (!v.empty()) {
      auto it = pivots.find(v.back());
      if (it == pivots.end()) return;
      xor_into(v, it->second.reduced);
      xor_into(combo, it->second.combo);
    }
  };
  SparseVector combo;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    // reduce the target eagerly so we can stop as soon as it vanishes
    reduce(target, combo);
    if (target.empty()) return combo;
    SparseVector col = m.column(j);
    SparseVector col_combo{static_cast<std::uint32_t>(j)};
    reduce(col, col_combo);
    if (!col.empty()) {
      const auto low = col.back();
      pivots.emplace(low, Pivot{std::move(col), std::move(col_combo)});
    }
  }
  reduce(target, combo);
  if (target.empty()) return combo;
  return std::nullopt;
}

class DenseBitMatrix {
 public:
  DenseBitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  explicit DenseBitMatrix(const SparseBitMatrix& m) : DenseBitMatrix(m.rows(), m.cols()) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (auto i : m.column(j)) set(i, j, true);
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return (row(i)[j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j, bool v) {
    auto& w = row(i)[j / 64];
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    w = v ? (w | bit) : (w & ~bit);
  }

  /// Gaussian elimination on a copy.
  std::size_t rank() const {
    std::vector<std::uint64_t> a = bits_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      std::size_t p = r;
      while (p < rows_ && !(a[p * words_ + w] & bit)) ++p;
      if (p == rows_) continue;
      if (p != r) {
        std::swap_ranges(a.begin() + static_cast<long>(p * words_), a.begin() + static_cast<long>((p + 1) * words_),
                         a.begin() + static_cast<long>(r * words_));
      }
      for (std::size_t q = 0; q < rows_; ++q) {
        if (q != r && (a[q * words_ + w] & bit)) {
          for (std::size_t t = w; t < words_; ++t) a[q * words_ + t] ^= a[r * words_ + t];
        }
      }
      ++r;
    }
    return r;
  }

 private:
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Below this many rows and columns the bit-packed path is used.
inline constexpr std::size_t kDenseThreshold = 4096;

inline std::size_t rank(const SparseBitMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.rows() < kDenseThreshold && m.cols() < kDenseThreshold) return DenseBitMatrix(m).rank();
  return sparse_rank(m);
}

}  // namespace gridhfl
