#pragma once

#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// A node set or coloring together with the LOCAL rounds needed to compute it.
struct LocalColoring {
    Coloring colors;  // 0 for nodes outside the mask
    int rounds = 0;
};

struct LocalSet {
    std::vector<Node> nodes;  // ascending
    int rounds = 0;
};

/// Proper (d+1)-coloring of g[mask], d = max degree inside the mask.
/// Orients every edge towards the larger id, splits the out-edges into
/// forests, runs Cole-Vishkin in each forest, takes the product coloring
/// (or the ids, if fewer) and halves the palette repeatedly: blocks of 2(d+1)
/// colors fold their upper half into the lower half in d + 1 rounds.
LocalColoring deterministic_coloring(const Graph& g, const std::vector<char>& mask);

/// MIS of g[mask] by sweeping the classes of a proper coloring.
LocalSet mis_from_coloring(const Graph& g, const std::vector<char>& mask, const Coloring& colors, int palette);

/// MIS of g[mask] with deterministic_coloring as the symmetry breaker.
LocalSet local_mis(const Graph& g, const std::vector<char>& mask);

/// Masked nodes at pairwise distance >= 3, maximal with that property:
/// every masked node is within distance 2 of a member. Distances are taken
/// inside g[mask], or in g when `through_any` is set. Computed as an MIS of
/// the square graph, which costs two rounds per round.
LocalSet distance3_set(const Graph& g, const std::vector<char>& mask, bool through_any = false);

} // namespace recolor
