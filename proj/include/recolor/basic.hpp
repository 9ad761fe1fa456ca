#pragma once

#include <span>
#include <string>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/schedule.hpp"

namespace recolor {

/// Zero-round recoloring with k-1 extra colors. Phase j < k sends input
/// class j to color k+j, phase k sends class k straight to its target, and
/// phase k+j sends class j from k+j to its target. Length <= 2k-1.
Recoloring recolor_trivial(const RecoloringInstance& inst);

/// V1 -> k+1, then V2 -> t, then V1 -> t. Always emits exactly three steps.
/// `v1` must be one side of a bipartition of g.
Recoloring recolor_bipartite(const RecoloringInstance& inst, std::span<const Node> v1);
/// Same, with V1 taken as the side of node 0's component that holds it.
Recoloring recolor_bipartite(const RecoloringInstance& inst);

/// Paths and cycles, k = 3, c >= 1: MIS from s to color 4, each remaining
/// component (at most two nodes) solved within [3] by exhaustive search,
/// MIS to t. Length <= 5.
Recoloring recolor_path_cycle_3plus1(const RecoloringInstance& inst);

struct TopColorElimination {
    Coloring reduced;
    Schedule step;  // at most one step from x to reduced
};

/// Nodes of color k move to the smallest color of [k-1] unused by their
/// neighbors. Requires k >= max_degree + 2 and max_degree >= g.max_degree().
TopColorElimination eliminate_top_color(const Graph& g, const Coloring& x, int k, int max_degree);

/// Max degree <= 3, k = 4, c >= 1. Length <= 9.
Recoloring recolor_subcubic_4plus1(const RecoloringInstance& inst);

/// Max degree <= 4 (toroidal grids), k = 4, c >= 2. Length <= 11.
Recoloring recolor_grid_4plus2(const RecoloringInstance& inst);

/// Max degree <= 4 (toroidal grids), k = 5, c >= 1. Length <= 13.
Recoloring recolor_grid_5plus1(const RecoloringInstance& inst);

/// Instance whose s admits no single-node move within [k].
struct FrozenFixture {
    std::string name;
    Graph g;
    Coloring s;
    Coloring t;
    int k = 0;
};

/// Fixtures a..j. t(v) = (s(v) mod k) + 1. Fixture c is a triangle colored
/// 1, 2, 3.
std::vector<FrozenFixture> fixtures_needsextra();
FrozenFixture fixture_needsextra(const std::string& name);

/// Path on n nodes colored 1, 2, 3, 1, 2, 3, ...; n must be a multiple of 3.
RecoloringInstance fixture_3pathslb(int n);

/// Balanced 3-regular tree in which every internal node sees all three other
/// colors of [4]; k = 4, c = 0.
RecoloringInstance fixture_4treelb(int depth);

} // namespace recolor
