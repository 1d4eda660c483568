#pragma once

// Named braids and grids used by the tests and the CLI.

#include <optional>
#include <string>
#include <vector>

#include "gridhfl/braid.hpp"
#include "gridhfl/errors.hpp"
#include "gridhfl/grid.hpp"

namespace gridhfl {

struct NamedExample {
  std::string name;
  std::string description;
  std::optional<BraidWord> word;
  std::optional<GridDiagram> grid;

  /// The grid, building it from the word when needed.
  GridDiagram diagram() const { return grid ? *grid : braid_to_grid(*word); }
};

namespace examples {

// Fragments of the 8-strand flype pair: words in sigma_2 .. sigma_7.
inline BraidWord mm_a() {
  return BraidWord(8, {4, 3, 5, 6, 4, 5, 5, 6, 4, 5, 7, 6, -5, -4, -3, 2, 3, 3, 4, 5, -4, -3, -2});
}
inline BraidWord mm_b() {
  return BraidWord(8, {5, 6, 7, -6, -5, -4, -6, -5, -4, 3, 4, 5, 2, 3, 4, 4, 5, 6, -5, -4, -3, -2});
}
inline BraidWord mm_c() { return BraidWord(8, {-7, -6, -5}); }

/// a s1^2 b s1^-1 c
inline BraidWord mm_w1() { return negative_flype_pair(mm_a(), mm_b(), mm_c(), 2).w1; }
/// a s1^-1 b s1^2 c
inline BraidWord mm_w2() { return negative_flype_pair(mm_a(), mm_b(), mm_c(), 2).w2; }

/// The quasipositive 4-braid s3 s2 s3 s1 s2 s3 moved onto strands 4..7 of B_8.
inline BraidWord mm_g() { return BraidWord(4, {3, 2, 3, 1, 2, 3}); }
inline BraidWord mm_h() { return translate_psi(mm_g(), 4, 8, 3); }

}  // namespace examples

inline const std::vector<NamedExample>& named_examples() {
  static const std::vector<NamedExample> registry = [] {
    std::vector<NamedExample> r;
    r.push_back({"unknot2", "unknot on the 2x2 torus", std::nullopt, GridDiagram{2, {0, 1}, {1, 0}}});
    r.push_back({"trefoil_b2", "trefoil as s1^3", BraidWord(2, {1, 1, 1}), std::nullopt});
    r.push_back({"trefoil_b3", "trefoil as (s1 s2)^2", BraidWord(3, {1, 2, 1, 2}), std::nullopt});
    for (int n = 1; n <= 4; ++n) {
      r.push_back({"trivial_I" + std::to_string(n), "trivial braid on " + std::to_string(n) + " strands",
                   BraidWord(n), std::nullopt});
    }
    r.push_back({"mm_w1", "a s1^2 b s1^-1 c in B_8", examples::mm_w1(), std::nullopt});
    r.push_back({"mm_w2", "a s1^-1 b s1^2 c in B_8", examples::mm_w2(), std::nullopt});
    r.push_back({"mm_h", "psi_{4,8,3}(s3 s2 s3 s1 s2 s3)", examples::mm_h(), std::nullopt});
    r.push_back({"mm_a", "flype fragment a", examples::mm_a(), std::nullopt});
    r.push_back({"mm_b", "flype fragment b", examples::mm_b(), std::nullopt});
    r.push_back({"mm_c", "flype fragment c", examples::mm_c(), std::nullopt});
    return r;
  }();
  return registry;
}

inline const NamedExample& find_example(const std::string& name) {
  for (const auto& e : named_examples()) {
    if (e.name == name) return e;
  }
  throw InputError("unknown example '" + name + "'");
}

}  // namespace gridhfl
