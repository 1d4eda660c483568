#pragma once

// Lehmer-code ranking of permutations of {0..k-1}. Rank order coincides
// with lexicographic order, so std::next_permutation walks ranks 0, 1, 2, ...

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "gridhfl/errors.hpp"

namespace gridhfl {

inline constexpr int kMaxPermutationSize = 20;

inline std::uint64_t factorial(int k) {
  static constexpr auto table = [] {
    std::array<std::uint64_t, kMaxPermutationSize + 1> t{};
    t[0] = 1;
    for (int i = 1; i <= kMaxPermutationSize; ++i) t[i] = t[i - 1] * static_cast<std::uint64_t>(i);
    return t;
  }();
  if (k < 0 || k > kMaxPermutationSize) throw InputError("factorial out of range");
  return table[k];
}

inline std::uint64_t permutation_rank(std::span<const int> perm) {
  const int k = static_cast<int>(perm.size());
  std::uint32_t unused = k >= 32 ? ~0u : ((1u << k) - 1u);
  std::uint64_t rank = 0;
  for (int i = 0; i < k; ++i) {
    const auto v = static_cast<unsigned>(perm[i]);
    const int smaller = std::popcount(unused & ((1u << v) - 1u));
    rank += static_cast<std::uint64_t>(smaller) * factorial(k - 1 - i);
    unused &= ~(1u << v);
  }
  return rank;
}

inline void permutation_unrank(std::uint64_t rank, int k, std::span<int> out) {
  std::uint32_t unused = k >= 32 ? ~0u : ((1u << k) - 1u);
  for (int i = 0; i < k; ++i) {
    const std::uint64_t f = factorial(k - 1 - i);
    auto digit = static_cast<int>(rank / f);
    rank %= f;
    // select the digit-th unused value
    std::uint32_t m = unused;
    for (int d = 0; d < digit; ++d) m &= m - 1;
    const int v = std::countr_zero(m);
    out[i] = v;
    unused &= ~(1u << v);
  }
}

inline std::vector<int> permutation_unrank(std::uint64_t rank, int k) {
  std::vector<int> out(k);
  permutation_unrank(rank, k, out);
  return out;
}

}  // namespace gridhfl
