#pragma once

#include <vector>

#include "recolor/graph.hpp"
#include "recolor/schedule.hpp"

namespace recolor {

/// A node of degree <= 2, or a theta: three internally disjoint u-v paths.
struct Anchor {
    enum class Kind { low_degree, theta };
    Kind kind = Kind::low_degree;
    Node node = -1;                      // low_degree only
    Node u = -1;                         // theta endpoints
    Node v = -1;
    std::vector<std::vector<Node>> paths;  // each runs from u to v

    std::vector<Node> nodes() const;  // ascending, no duplicates
};

/// Structural check of an anchor against g.
bool is_valid_anchor(const Graph& g, const Anchor& a);

/// Closest degree-<=2 node within distance r of u, else the first theta
/// closed by two overlapping fundamental cycles of the BFS tree from u.
/// Throws precondition when the ball holds neither.
Anchor find_anchor(const Graph& g, Node u, int r);

/// Members pairwise at distance >= alpha and every node within beta of a
/// member. Greedy in ascending id order, so domination is alpha - 1.
std::vector<Node> ruling_set(const Graph& g, int alpha, int beta);

struct ForestDecomposition {
    std::vector<Node> S;                        // independent
    std::vector<Node> F;                        // induces a forest
    std::vector<std::vector<Node>> components;  // components of g[F]
    int max_radius = 0;
    int layers = 0;
    int anchors = 0;
    int widenings = 0;  // anchor searches that needed a larger ball
    int rounds = 0;
};

/// Independent set plus forest of radius O(log n) for subcubic graphs:
/// anchors of a ruling set are layer 0, nodes are layered by distance to
/// them and assigned top-down, anchors last.
ForestDecomposition stable_forest_decomposition(const Graph& g);

/// Assigns the nodes of each anchor to S or F given a partition of the other
/// nodes, keeping S independent and g[F] acyclic. `in_s` uses 1 for S, 0 for
/// F and -1 for unassigned; anchor nodes must be unassigned.
void extend_decomposition(const Graph& g, const std::vector<Anchor>& anchors, std::vector<int>& in_s);

/// Radius of a tree given as a connected node set of g.
int tree_radius(const Graph& g, const std::vector<Node>& nodes);

/// k = 3, c >= 1: S parks on color 4, the forest components are recolored
/// in parallel with lists {1, 2, 3}, S moves to t.
Recoloring recolor_subcubic_3plus1(const RecoloringInstance& inst);

} // namespace recolor
