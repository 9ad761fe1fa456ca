#pragma once

#include <optional>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/schedule.hpp"
#include "recolor/symmetry.hpp"

namespace recolor {

/// Level labels 1..h from iterated rake-and-compress.
struct LightLabeling {
    std::vector<int> labels;
    int h = 0;
    int rounds = 0;
};

/// Each step removes every node of current degree <= 1 together with every
/// maximal run of at least three consecutive degree-2 nodes, and labels them
/// with the step index. Runs until the tree is empty.
LightLabeling light_labeling(const Graph& tree);

/// Both conditions of a light labeling:
///  1. a node labeled i has at most two neighbors labeled >= i, at most one
///     of them labeled >= i + 1;
///  2. no two adjacent nodes labeled i both have a neighbor labeled >= i + 1.
bool is_light(const Graph& g, const std::vector<int>& labels);

/// Proper 3-coloring: labels are processed from h down; the label-i nodes
/// form paths, which are colored by Cole-Vishkin and then pick, class by
/// class, the smallest color of {1, 2, 3} free among colored neighbors.
LocalColoring tree_3coloring(const Graph& tree);
LocalColoring tree_3coloring(const Graph& tree, const LightLabeling& labeling);

struct TreeDecomposition {
    std::vector<Node> S;                       // ascending
    std::vector<std::vector<Node>> components;  // components of V \ S
    int rounds = 0;
};

/// Independent set S and components of V \ S from any node set.
TreeDecomposition make_decomposition(const Graph& g, std::vector<Node> S, int rounds);

/// Labels from h down to 1: first every label-i node with a higher-labeled
/// neighbor outside S joins S, then for colors j = 1, 2, 3 every label-i
/// node of color j with no neighbor in S joins. S is a maximal independent
/// set and the rest splits into components of at most two nodes.
TreeDecomposition decompose_small_components(const Graph& tree, const LightLabeling& labeling,
                                             const Coloring& x3);

/// R = nodes without a higher-labeled neighbor; S is a subset of R at
/// pairwise distance >= 3 in the tree, maximal with that property. No node has
/// two neighbors in S.
TreeDecomposition decompose_for_lists(const Graph& tree, const LightLabeling& labeling);

/// Color u takes when it mirrors v across their common neighbor w:
///  - L(u) \ L(w) nonempty: its smallest color;
///  - otherwise color_v if it lies in L(u);
///  - otherwise the smallest color of L(u) other than color_w.
/// With L(u) == L(w) this is the usual three-case rule; the second and third
/// cases also cover L(u) strictly inside L(w).
Color same_color_wrt(const std::vector<Color>& list_u, const std::vector<Color>& list_w, Color color_v,
                     Color color_w);

/// Leaves identified into grandparents phase by phase; the root's remaining
/// children are then identified into one of them (`partner`), leaving the
/// edge root-partner.
struct IdentificationForest {
    Node root = 0;
    Node partner = -1;           // -1 for a single-node tree
    std::vector<Node> parent;    // -1 at the root
    std::vector<int> depth;
    std::vector<int> phase;      // removal phase; 0 for root and partner
    std::vector<Node> rep;       // node u is identified into rep[u]
    std::vector<Node> witness;   // common neighbor of u and rep[u]
    int phases = 0;
};

IdentificationForest build_identification(const Graph& tree, Node root);

/// Coloring forced by an edge coloring (color_root, color_partner): removed
/// nodes are evaluated top-down with same_color_wrt.
Coloring expand_edge_coloring(const IdentificationForest& forest, const ListAssignment& lists, Color color_root,
                              Color color_partner);

/// A center of the tree (double BFS).
Node tree_center(const Graph& tree);

/// List recoloring of a tree with lists of size >= 3 through the
/// identification forest. `root` defaults to a center.
Recoloring recolor_tree_list(const Graph& tree, const Coloring& alpha, const Coloring& beta,
                             const ListAssignment& lists, std::optional<Node> root = std::nullopt);

/// recolor_tree_list with every list equal to {1, 2, 3}.
Recoloring recolor_tree_plain(const Graph& tree, const Coloring& alpha, const Coloring& beta,
                              std::optional<Node> root = std::nullopt);

/// One extra color: S of decompose_small_components parks on k + 1, the
/// small components are solved exactly within [k], S moves to t.
Recoloring recolor_tree_3plus1(const RecoloringInstance& inst);

/// Lists of size >= 4: S of decompose_for_lists stays put while the rest
/// moves to a coloring gamma avoiding alpha and beta on S, then S moves to
/// beta, then the rest moves from gamma to beta.
Recoloring recolor_tree_list4(const Graph& tree, const Coloring& alpha, const Coloring& beta,
                              const ListAssignment& lists);

} // namespace recolor
