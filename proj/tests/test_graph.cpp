#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "recolor/graph.hpp"
#include "support.hpp"

using namespace recolor;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::io;
}

} // namespace

TEST_CASE("constructor rejects malformed edge lists") {
    const std::vector<Edge> loop{{0, 0}};
    const std::vector<Edge> twice{{0, 1}, {1, 0}};
    const std::vector<Edge> out_of_range{{0, 3}};
    CHECK(kind_of([&] { Graph(2, loop); }) == ErrorKind::format);
    CHECK(kind_of([&] { Graph(2, twice); }) == ErrorKind::format);
    CHECK(kind_of([&] { Graph(2, out_of_range); }) == ErrorKind::format);
}

TEST_CASE("adjacency is sorted and symmetric") {
    const std::vector<Edge> edges{{3, 0}, {0, 1}, {2, 0}};
    Graph g(4, edges);
    CHECK(g.edge_count() == 3);
    const auto nb = g.neighbors(0);
    CHECK(std::vector<Node>(nb.begin(), nb.end()) == std::vector<Node>{1, 2, 3});
    CHECK(g.adjacent(3, 0));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK(g.max_degree() == 3);
}

TEST_CASE("identifiers default to indices and must stay distinct") {
    Graph g = build_path(3);
    CHECK(g.id(2) == 2);
    g.set_ids({10, 5, 7});
    CHECK(g.id(0) == 10);
    CHECK_THROWS_AS(g.set_ids({1, 1, 2}), Error);
}

TEST_CASE("generator sizes and degrees") {
    CHECK(build_path(5).edge_count() == 4);
    CHECK(build_cycle(7).edge_count() == 7);
    const auto grid = build_toroidal_grid(3, 5);
    CHECK(grid.graph.size() == 15);
    for (Node v = 0; v < 15; ++v) {
        CHECK(grid.graph.degree(v) == 4);
    }
    CHECK(grid.graph.adjacent(grid.node(0, 0), grid.node(2, 0)));
    CHECK(grid.graph.adjacent(grid.node(0, 0), grid.node(0, 4)));
    CHECK(build_complete_bipartite(2, 3).edge_count() == 6);
    CHECK(build_complete(5).edge_count() == 10);
    const auto prism = build_prism();
    CHECK(prism.size() == 6);
    CHECK(prism.edge_count() == 9);
    const auto t = build_balanced_3regular_tree(3);
    CHECK(t.size() == 1 + 3 + 6 + 12);
    CHECK(support::induces_forest(t, [&] {
        std::vector<Node> all(t.size());
        for (Node v = 0; v < t.size(); ++v) {
            all[v] = v;
        }
        return all;
    }()));
}

TEST_CASE("generators reject sizes below their minimum") {
    CHECK(kind_of([] { build_cycle(2); }) == ErrorKind::size_too_small);
    CHECK(kind_of([] { build_toroidal_grid(2, 5); }) == ErrorKind::size_too_small);
    CHECK(kind_of([] { random_subcubic(3, 1); }) == ErrorKind::size_too_small);
}

TEST_CASE("random trees are trees and depend only on the seed") {
    for (int n : {1, 2, 3, 17, 500}) {
        const auto a = random_tree(n, 3);
        CHECK(a.size() == n);
        CHECK(a.edge_count() == std::max(0, n - 1));
        CHECK(is_tree(a));
        CHECK(a == random_tree(n, 3));
    }
    CHECK_FALSE(random_tree(50, 1) == random_tree(50, 2));
}

TEST_CASE("random subcubic graphs") {
    for (int n : {4, 9, 64, 1001}) {
        const auto g = random_subcubic(n, 11);
        CHECK(g.size() == n);
        CHECK(g.max_degree() <= 3);
        CHECK(connected_components(g).size() >= 1);
    }
    const auto cubic = random_subcubic(100, 5);
    for (Node v = 0; v < cubic.size(); ++v) {
        CHECK(cubic.degree(v) == 3);
    }
    CHECK(random_subcubic(100, 5, 0.2).edge_count() < cubic.edge_count());
}

TEST_CASE("random proper colorings are proper and within the palette") {
    const auto tree = random_tree(300, 4);
    const auto x = random_proper_coloring(tree, 3, 9);
    CHECK(support::proper(tree, x));
    CHECK(*std::max_element(x.begin(), x.end()) <= 3);
    const auto grid = build_toroidal_grid(5, 5);
    CHECK(support::proper(grid.graph, random_proper_coloring(grid.graph, 3, 1)));
    CHECK(kind_of([] { random_proper_coloring(build_complete(4), 3, 1); }) == ErrorKind::infeasible);
}

TEST_CASE("predicates agree with the reference checks") {
    const auto g = random_subcubic(40, 2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto x = random_proper_coloring(g, 4, seed);
        CHECK(is_proper(g, x) == support::proper(g, x));
        auto y = x;
        const auto nb = g.neighbors(0);
        y[0] = y[nb[0]];
        CHECK_FALSE(is_proper(g, y));
        const auto mis = greedy_mis_from_coloring(g, x);
        CHECK(support::independent(g, mis));
        CHECK(support::dominating(g, mis));
        CHECK(is_independent(g, mis));
        CHECK(is_maximal_independent(g, mis));
    }
    CHECK(is_forest(build_path(4)));
    CHECK_FALSE(is_forest(build_cycle(4)));
    CHECK_FALSE(is_tree(Graph(3, std::vector<Edge>{{0, 1}})));
    CHECK(max_color({1, 4, 2}) == 4);
}

TEST_CASE("list properness") {
    const auto g = build_path(3);
    const ListAssignment lists{{1, 2}, {2, 5}, {1, 3}};
    CHECK(is_proper_list(g, {1, 5, 1}, lists));
    CHECK_FALSE(is_proper_list(g, {1, 3, 1}, lists));
}

TEST_CASE("traversal helpers") {
    const auto g = random_subcubic(60, 8, 0.3);
    for (Node s : {0, 17, 59}) {
        const std::vector<Node> src{s};
        CHECK(bfs_distances(g, src) == support::distances(g, s));
    }
    std::set<Node> seen;
    for (const auto& comp : connected_components(g)) {
        for (Node v : comp) {
            CHECK(seen.insert(v).second);
        }
    }
    CHECK(static_cast<int>(seen.size()) == g.size());

    std::vector<char> mask(6, 1);
    mask[2] = 0;
    const auto parts = components_of(build_path(6), mask);
    CHECK(parts.size() == 2);

    const std::vector<Node> pick{1, 3, 4};
    const auto sub = induced_subgraph(build_cycle(5), pick);
    CHECK(sub.graph.size() == 3);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.to_global == pick);
    CHECK(restrict_to(std::vector<int>{9, 8, 7, 6, 5}, sub.to_global) == std::vector<int>{8, 6, 5});
}

TEST_CASE("bipartition") {
    const auto side = bipartition(build_cycle(6));
    for (Node v = 0; v < 6; ++v) {
        CHECK(side[v] != side[(v + 1) % 6]);
    }
    CHECK(kind_of([] { bipartition(build_cycle(5)); }) == ErrorKind::precondition);
}
