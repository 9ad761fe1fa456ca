#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "recolor/oracle.hpp"
#include "recolor/subcubic.hpp"
#include "support.hpp"

using namespace recolor;

namespace {

int log2_ceil(int n) { return n <= 1 ? 1 : static_cast<int>(std::ceil(std::log2(n))); }

Graph k4_minus_edge() {
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    return Graph(4, edges);
}

// Three internally disjoint paths are checked node by node here rather than
// through is_valid_anchor.
bool theta_ok(const Graph& g, const Anchor& a) {
    if (a.paths.size() != 3) {
        return false;
    }
    std::set<Node> inner;
    for (const auto& p : a.paths) {
        if (p.size() < 2 || p.front() != a.u || p.back() != a.v) {
            return false;
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.adjacent(p[i], p[i + 1])) {
                return false;
            }
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (!inner.insert(p[i]).second) {
                return false;
            }
        }
    }
    return !inner.count(a.u) && !inner.count(a.v);
}

void check_decomposition(const Graph& g, const ForestDecomposition& d) {
    CHECK(support::independent(g, d.S));
    CHECK(support::induces_forest(g, d.F));
    CHECK(d.S.size() + d.F.size() == static_cast<std::size_t>(g.size()));
    std::vector<char> seen(g.size(), 0);
    for (Node v : d.S) {
        seen[v] = 1;
    }
    for (Node v : d.F) {
        CHECK(seen[v] == 0);
        seen[v] = 1;
    }
    int worst = 0;
    std::size_t covered = 0;
    for (const auto& comp : d.components) {
        worst = std::max(worst, tree_radius(g, comp));
        covered += comp.size();
    }
    CHECK(covered == d.F.size());
    CHECK(worst == d.max_radius);
}

} // namespace

TEST_CASE("anchors: low degree nodes come first") {
    const auto path = build_path(5);
    const auto a = find_anchor(path, 2, 3);
    CHECK(a.kind == Anchor::Kind::low_degree);
    CHECK(path.degree(a.node) <= 2);
    CHECK(is_valid_anchor(path, a));
}

TEST_CASE("anchors: thetas in cubic graphs") {
    for (const auto& g : {build_complete(4), build_prism(), random_subcubic(200, 3), random_subcubic(2000, 8)}) {
        for (Node u : {0, 1, 3}) {
            const auto a = find_anchor(g, u, 2 * log2_ceil(g.size()) + 4);
            CHECK(a.kind == Anchor::Kind::theta);
            CHECK(theta_ok(g, a));
            CHECK(is_valid_anchor(g, a));
            const auto nodes = a.nodes();
            CHECK(std::is_sorted(nodes.begin(), nodes.end()));
        }
    }
    CHECK_THROWS_AS(find_anchor(random_subcubic(2000, 8), 0, 1), Error);
    Anchor bogus;
    bogus.kind = Anchor::Kind::theta;
    bogus.u = 0;
    bogus.v = 1;
    bogus.paths = {{0, 1}, {0, 1}, {0, 2, 1}};
    CHECK_FALSE(is_valid_anchor(build_complete(4), bogus));
}

TEST_CASE("ruling sets") {
    for (const auto& g : {build_cycle(30), random_subcubic(300, 1), random_subcubic(301, 2, 0.2)}) {
        for (int alpha : {2, 3, 5}) {
            const auto r = ruling_set(g, alpha, alpha - 1);
            std::vector<int> best(g.size(), 1 << 30);
            for (Node a : r) {
                const auto d = support::distances(g, a);
                for (Node b : r) {
                    if (a != b && d[b] >= 0) {
                        CHECK(d[b] >= alpha);
                    }
                }
                for (Node u = 0; u < g.size(); ++u) {
                    if (d[u] >= 0) {
                        best[u] = std::min(best[u], d[u]);
                    }
                }
            }
            for (Node u = 0; u < g.size(); ++u) {
                CHECK(best[u] <= alpha - 1);
            }
        }
    }
}

TEST_CASE("extending a decomposition over an anchor") {
    const auto g = build_prism();
    const auto a = find_anchor(g, 0, 3);
    std::vector<int> in_s(g.size(), -1);
    const auto nodes = a.nodes();
    for (Node v = 0; v < g.size(); ++v) {
        if (!std::binary_search(nodes.begin(), nodes.end(), v)) {
            in_s[v] = 0;
        }
    }
    extend_decomposition(g, {a}, in_s);
    std::vector<Node> s;
    std::vector<Node> f;
    for (Node v = 0; v < g.size(); ++v) {
        REQUIRE(in_s[v] >= 0);
        (in_s[v] ? s : f).push_back(v);
    }
    CHECK(support::independent(g, s));
    CHECK(support::induces_forest(g, f));
}

TEST_CASE("stable forest decomposition invariants") {
    check_decomposition(build_prism(), stable_forest_decomposition(build_prism()));
    check_decomposition(k4_minus_edge(), stable_forest_decomposition(k4_minus_edge()));
    // K4 minus any independent set still holds a triangle.
    CHECK_THROWS_AS(stable_forest_decomposition(build_complete(4)), Error);
    check_decomposition(build_cycle(9), stable_forest_decomposition(build_cycle(9)));
    check_decomposition(build_path(1), stable_forest_decomposition(build_path(1)));
    for (int n : {64, 1000, 5000}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const auto g = random_subcubic(n, seed, seed == 2 ? 0.1 : 0.0);
            const auto d = stable_forest_decomposition(g);
            check_decomposition(g, d);
            CHECK(d.max_radius <= 4 * log2_ceil(n));
            CHECK(d.rounds > 0);
        }
    }
    CHECK_THROWS_AS(stable_forest_decomposition(build_toroidal_grid(3, 3).graph), Error);
}

TEST_CASE("tree radius") {
    const auto p = build_path(7);
    CHECK(tree_radius(p, {0, 1, 2, 3, 4, 5, 6}) == 3);
    CHECK(tree_radius(p, {2, 3}) == 1);
    CHECK(tree_radius(p, {4}) == 0);
}

TEST_CASE("subcubic 3 + 1 recoloring") {
    std::vector<Graph> graphs{build_prism(), k4_minus_edge(), build_cycle(7), build_path(5)};
    for (int n : {50, 512, 3000}) {
        graphs.push_back(random_subcubic(n, n, 0.05));
    }
    for (const auto& g : graphs) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            RecoloringInstance inst{g, random_proper_coloring(g, 3, seed), random_proper_coloring(g, 3, seed + 7), 3,
                                    1, std::nullopt};
            const auto rec = recolor_subcubic_3plus1(inst);
            CHECK(verify_strong(inst, rec.schedule).ok);
            CHECK(support::strong_ok(g, inst.s, inst.t, rec.schedule, 4));
            if (g.size() <= 12) {
                CHECK(reachable(inst));
            }
        }
    }
    RecoloringInstance k4{build_complete(4), {1, 2, 3, 4}, {1, 2, 3, 4}, 4, 1, std::nullopt};
    CHECK_THROWS_AS(recolor_subcubic_3plus1(k4), Error);
}
