#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "recolor/error.hpp"

namespace recolor {

using Node = int;
using Color = int;

/// Colors are 1-based; index v holds the color of node v.
using Coloring = std::vector<Color>;

/// Per-node allowed colors, each list sorted ascending and duplicate-free.
using ListAssignment = std::vector<std::vector<Color>>;

using Edge = std::pair<Node, Node>;

/// Undirected simple graph over nodes 0..n-1 with sorted adjacency lists.
///
/// Each node also carries a unique identifier (defaults to its index) that
/// distributed algorithms use for symmetry breaking.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Throws on self-loops, duplicate
    /// edges, or endpoints out of range.
    Graph(int n, std::span<const Edge> edges);

    int size() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return edge_count_; }

    std::span<const Node> neighbors(Node v) const { return adjacency_[v]; }
    int degree(Node v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const noexcept;
    bool adjacent(Node u, Node v) const;

    std::vector<Edge> edges() const;

    std::int64_t id(Node v) const { return ids_[v]; }
    std::span<const std::int64_t> ids() const { return ids_; }
    /// Replaces the identifiers; they must be pairwise distinct.
    void set_ids(std::vector<std::int64_t> ids);

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_;
    }

private:
    std::vector<std::vector<Node>> adjacency_;
    std::vector<std::int64_t> ids_;
    int edge_count_ = 0;
};

/// An h x w toroidal grid; node (r, c) has index r * w + c.
struct ToroidalGrid {
    int h = 0;
    int w = 0;
    Graph graph;

    Node node(int r, int c) const {
        return ((r % h + h) % h) * w + ((c % w + w) % w);
    }
};

/// Subgraph induced by `nodes`; `to_global[i]` is the original index of
/// local node i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Node> to_global;
};

// Generators. All throw ErrorKind::size_too_small on violated preconditions.
Graph build_path(int n);
Graph build_cycle(int n);
ToroidalGrid build_toroidal_grid(int h, int w);
Graph build_complete_bipartite(int a, int b);
Graph build_prism();
Graph build_complete(int n);

/// Balanced tree in which every internal node has degree 3 and all leaves
/// sit at distance `depth` from the root (node 0). Nodes are in BFS order.
Graph build_balanced_3regular_tree(int depth);

/// Uniform random labeled tree decoded from a seeded Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Random cubic graph (n even, n >= 4) obtained by a seeded double-edge-swap
/// chain started from the circular ladder. Odd n adds one degree-2 node by
/// subdividing an edge. `drop_fraction` of edges are then removed.
Graph random_subcubic(int n, std::uint64_t seed, double drop_fraction = 0.0);

/// Random proper coloring: greedy over BFS orders from random roots with a
/// shuffled palette (backtracking if greedy keeps failing), then 10n random
/// single-node recolorings. Throws infeasible when no coloring exists.
Coloring random_proper_coloring(const Graph& g, int k, std::uint64_t seed);

// Predicates.
bool is_proper(const Graph& g, const Coloring& x);
bool is_proper_list(const Graph& g, const Coloring& x, const ListAssignment& lists);
bool is_independent(const Graph& g, std::span<const Node> set);
bool is_maximal_independent(const Graph& g, std::span<const Node> set);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
int max_color(const Coloring& x);

/// Maximal independent set from a proper coloring: sweep color classes
/// 1..palette, adding each node with no neighbor already selected.
/// Returns nodes in ascending order.
std::vector<Node> greedy_mis_from_coloring(const Graph& g, const Coloring& x);

// Traversal helpers.
std::vector<int> bfs_distances(const Graph& g, std::span<const Node> sources);
std::vector<std::vector<Node>> connected_components(const Graph& g);
/// Components of the subgraph induced by nodes with mask[v] != 0.
std::vector<std::vector<Node>> components_of(const Graph& g, const std::vector<char>& mask);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Node> nodes);
/// Two-coloring of a bipartite graph as a 0/1 side per node; throws
/// precondition when an odd cycle exists.
std::vector<int> bipartition(const Graph& g);

/// Restricts a per-node vector to the nodes of an induced subgraph.
template <typename T>
std::vector<T> restrict_to(const std::vector<T>& values, std::span<const Node> to_global) {
    std::vector<T> out;
    out.reserve(to_global.size());
    for (Node v : to_global) {
        out.push_back(values[v]);
    }
    return out;
}

} // namespace recolor
