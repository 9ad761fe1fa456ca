#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recolor/grid.hpp"
#include "recolor/oracle.hpp"
#include "support.hpp"

using namespace recolor;

namespace {

// A-tile count by direct pattern matching, independent of tile_at/census.
int count_a(int h, int w, const Coloring& x) {
    int count = 0;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const Color tl = x[r * w + c];
            const Color tr = x[r * w + (c + 1) % w];
            const Color bl = x[((r + 1) % h) * w + c];
            const Color br = x[((r + 1) % h) * w + (c + 1) % w];
            count += (tl == 2 && tr == 3 && bl == 3 && br == 1) || (tl == 1 && tr == 3 && bl == 3 && br == 2);
        }
    }
    return count;
}

} // namespace

TEST_CASE("tile types are literal") {
    CHECK(tile_type_a(Tile{{{2, 3}, {3, 1}}}));
    CHECK(tile_type_a(Tile{{{1, 3}, {3, 2}}}));
    CHECK_FALSE(tile_type_a(Tile{{{3, 2}, {1, 3}}}));
    CHECK(tile_type_b(Tile{{{2, 1}, {1, 4}}}));
    CHECK(tile_type_b(Tile{{{4, 3}, {3, 2}}}));
    CHECK_FALSE(tile_type_b(Tile{{{1, 2}, {4, 1}}}));
    int b_tiles = 0;
    for (Color a = 1; a <= 4; ++a) {
        for (Color b = 1; b <= 4; ++b) {
            for (Color c = 1; c <= 4; ++c) {
                for (Color d = 1; d <= 4; ++d) {
                    b_tiles += tile_type_b(Tile{{{a, b}, {c, d}}});
                    CHECK_FALSE((tile_type_a(Tile{{{a, b}, {c, d}}}) && tile_type_b(Tile{{{a, b}, {c, d}}})));
                }
            }
        }
    }
    CHECK(b_tiles == 14);
}

TEST_CASE("tile_at wraps") {
    const auto grid = build_toroidal_grid(3, 3);
    const Coloring x{1, 2, 3, 2, 3, 1, 3, 1, 2};
    CHECK(tile_at(grid, x, 2, 2) == Tile{{{2, 3}, {3, 1}}});
}

TEST_CASE("census validates and counts") {
    const auto grid = build_toroidal_grid(3, 3);
    const Coloring x{1, 2, 3, 2, 3, 1, 3, 1, 2};
    const auto c = census(grid, x);
    CHECK(c.a_count == count_a(3, 3, x));
    CHECK(c.b_count == 0);
    CHECK(c.a_odd == (c.a_count % 2 == 1));
    CHECK_THROWS_AS(census(grid, Coloring{1, 1, 3, 2, 3, 1, 3, 1, 2}), Error);
    CHECK_THROWS_AS(census(grid, Coloring{5, 2, 3, 2, 3, 1, 3, 1, 2}), Error);
}

TEST_CASE("3x3 parity enumeration") {
    const auto four = check_ab_parity_lemma(4);
    CHECK(four.counterexamples == 0);
    CHECK(four.patches > 0);
    CHECK(four.moves > four.a_flips);
    CHECK(four.a_flips > 0);
    const auto three = check_ab_parity_lemma(3);
    CHECK(three.counterexamples == 0);
    CHECK(three.a_flips == 0);
}

TEST_CASE("feasibility classification") {
    CHECK(feasibility_3plus1(4, 7));
    CHECK(feasibility_3plus1(9, 4));
    CHECK(feasibility_3plus1(6, 8));
    CHECK_FALSE(feasibility_3plus1(3, 3));
    CHECK_FALSE(feasibility_3plus1(3, 6));
    CHECK_FALSE(feasibility_3plus1(6, 5));
}

TEST_CASE("counterexamples: proper 3-colorings with different A-parity") {
    for (int h = 3; h <= 9; ++h) {
        for (int w = 3; w <= 9; ++w) {
            if (feasibility_3plus1(h, w)) {
                CHECK_THROWS_AS(construct_counterexample(h, w), Error);
                continue;
            }
            CAPTURE(h);
            CAPTURE(w);
            const auto grid = build_toroidal_grid(h, w);
            const auto p = construct_counterexample(h, w);
            CHECK(support::proper(grid.graph, p.s));
            CHECK(support::proper(grid.graph, p.t));
            CHECK(max_color(p.s) <= 3);
            CHECK(max_color(p.t) <= 3);
            CHECK(count_a(h, w, p.s) % 2 != count_a(h, w, p.t) % 2);
            CHECK(census(grid, p.s).a_count == count_a(h, w, p.s));
        }
    }
}

TEST_CASE("counterexample on the 3 x 3 torus is unreachable") {
    const auto grid = build_toroidal_grid(3, 3);
    const auto p = construct_counterexample(3, 3);
    CHECK_FALSE(reachable(RecoloringInstance{grid.graph, p.s, p.t, 3, 1, std::nullopt}));
}

TEST_CASE("transpose") {
    const Coloring x{1, 2, 3, 4, 5, 6};
    CHECK(transpose(x, 2, 3) == Coloring{1, 4, 2, 5, 3, 6});
    CHECK(transpose(transpose(x, 2, 3), 3, 2) == x);
}

TEST_CASE("4 x w recoloring") {
    for (int w = 3; w <= 13; ++w) {
        for (bool tall : {false, true}) {
            const int h = tall ? w : 4;
            const int width = tall ? 4 : w;
            const auto grid = build_toroidal_grid(h, width);
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                RecoloringInstance inst{grid.graph, random_proper_coloring(grid.graph, 3, seed),
                                        random_proper_coloring(grid.graph, 3, seed + 3), 3, 1, std::nullopt};
                const auto rec = recolor_grid_4xw(grid, inst);
                CHECK(verify_strong(inst, rec.schedule).ok);
                CHECK(support::strong_ok(grid.graph, inst.s, inst.t, rec.schedule, 4));
                const auto via_dispatch = recolor_grid_3plus1(grid, inst);
                CHECK(support::strong_ok(grid.graph, inst.s, inst.t, via_dispatch.schedule, 4));
            }
        }
    }
}

TEST_CASE("even tori use three steps; infeasible sizes throw") {
    const auto grid = build_toroidal_grid(6, 8);
    RecoloringInstance inst{grid.graph, random_proper_coloring(grid.graph, 3, 1), random_proper_coloring(grid.graph, 3, 2),
                            3, 1, std::nullopt};
    const auto rec = recolor_grid_3plus1(grid, inst);
    CHECK(rec.schedule.length() == 3);
    CHECK(support::strong_ok(grid.graph, inst.s, inst.t, rec.schedule, 4));

    const auto odd = build_toroidal_grid(3, 5);
    const auto p = construct_counterexample(3, 5);
    try {
        recolor_grid_3plus1(odd, RecoloringInstance{odd.graph, p.s, p.t, 3, 1, std::nullopt});
        FAIL("expected infeasible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::infeasible);
    }
}
