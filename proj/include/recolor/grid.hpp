#pragma once

#include <array>
#include <cstdint>

#include "recolor/graph.hpp"
#include "recolor/schedule.hpp"

namespace recolor {

/// [[top-left, top-right], [bottom-left, bottom-right]].
using Tile = std::array<std::array<Color, 2>, 2>;

/// Literal membership in the two type-A tiles; no rotations or reflections.
bool tile_type_a(const Tile& t);
/// Literal membership in the fourteen type-B tiles.
bool tile_type_b(const Tile& t);

/// Tile anchored at (r, c): rows r, r + 1 and columns c, c + 1, wrapping.
Tile tile_at(const ToroidalGrid& grid, const Coloring& x, int r, int c);

struct TileCensus {
    int a_count = 0;
    int b_count = 0;
    bool a_odd = false;
    bool b_odd = false;
};

/// Counts over all h * w anchored tiles. Throws precondition on colors
/// outside [1, 4] or an improper coloring.
TileCensus census(const ToroidalGrid& grid, const Coloring& x);

struct ParityLemmaReport {
    std::int64_t patches = 0;          // proper colorings of the 3x3 patch
    std::int64_t moves = 0;            // legal center recolorings
    std::int64_t a_flips = 0;          // moves that flip the A-parity
    std::int64_t counterexamples = 0;  // A flips without B flipping or vice versa
};

/// Every proper coloring of a 3x3 grid patch with colors [1, palette] and
/// every legal recoloring of its center; compares the parity change of type-A
/// and type-B tiles among the four tiles that contain the center.
ParityLemmaReport check_ab_parity_lemma(int palette = 4);

/// 3 + 1 recoloring of the h x w torus is always possible exactly when both
/// sides are even or one side is 4.
bool feasibility_3plus1(int h, int w);

struct GridPair {
    Coloring s;
    Coloring t;
};

/// Proper 3-colorings with different A-parity, for dimensions where
/// feasibility_3plus1 is false. Throws precondition otherwise.
GridPair construct_counterexample(int h, int w);

/// Coloring of the w x h torus with (r, c) and (c, r) swapped.
Coloring transpose(const Coloring& x, int h, int w);

/// h = 4 or w = 4, k = 3, c >= 1. Sparse columns are chosen by a
/// distance-3 set on the cycle of columns; from each chosen column the
/// parked set alternates between rows {0, 2} and {1, 3} and leaves one column
/// empty where the alternation would clash. What remains are single nodes
/// and 4-cycles with pendant nodes, solved exactly with three colors.
Recoloring recolor_grid_4xw(const ToroidalGrid& grid, const RecoloringInstance& inst);

/// Both sides even: bipartite recoloring with the checkerboard. Side 4:
/// recolor_grid_4xw. Anything else throws infeasible.
Recoloring recolor_grid_3plus1(const ToroidalGrid& grid, const RecoloringInstance& inst);

} // namespace recolor
