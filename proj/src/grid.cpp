#include "recolor/grid.hpp"

#include <algorithm>

#include "recolor/basic.hpp"
#include "recolor/oracle.hpp"
#include "recolor/symmetry.hpp"

namespace recolor {

namespace {

constexpr std::array<Tile, 2> kTypeA = {{
    {{{2, 3}, {3, 1}}},
    {{{1, 3}, {3, 2}}},
}};

constexpr std::array<Tile, 14> kTypeB = {{
    {{{2, 1}, {1, 4}}},
    {{{3, 1}, {1, 4}}},
    {{{2, 1}, {3, 4}}},
    {{{2, 3}, {1, 4}}},
    {{{1, 3}, {4, 2}}},
    {{{3, 2}, {1, 4}}},
    {{{2, 3}, {3, 4}}},
    {{{4, 1}, {1, 2}}},
    {{{4, 1}, {1, 3}}},
    {{{4, 1}, {3, 2}}},
    {{{4, 3}, {1, 2}}},
    {{{2, 3}, {4, 1}}},
    {{{4, 2}, {1, 3}}},
    {{{4, 3}, {3, 2}}},
}};

// Color at distance j (mod h) past a 3 along a row: 3, 1, 2, 1, 2, ...
Color diagonal_color(int j) { return j == 0 ? 3 : (j % 2 == 1 ? 1 : 2); }

int mod(int a, int m) { return ((a % m) + m) % m; }

// h odd, w = h + 2l: the square construction plus l copies of its two
// rightmost columns.
GridPair odd_odd(int h, int w) {
    GridPair out{Coloring(h * w), Coloring(h * w)};
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            const int src = c < h ? c : h - 2 + (c - h) % 2;
            out.s[r * w + c] = diagonal_color(mod(r + src - (h - 1), h));
            out.t[r * w + c] = diagonal_color(mod(src - r, h));
        }
    }
    return out;
}

// h odd, w even >= 6, from the 3 x 6 base: the two leftmost columns are
// repeated in front, the top row is repeated below itself, alternately
// shifted by one column.
GridPair odd_even(int h, int w) {
    constexpr Color base_s[3][6] = {{1, 2, 3, 1, 2, 3}, {2, 3, 1, 2, 3, 1}, {3, 1, 2, 3, 1, 2}};
    constexpr Color base_t[3][6] = {{1, 2, 1, 2, 1, 2}, {3, 1, 3, 1, 3, 1}, {2, 3, 2, 3, 2, 3}};
    const int extra_cols = w - 6;
    const int extra_rows = h - 3;
    auto wide = [&](const Color (&base)[3][6], int row, int c) {
        const int src = c < extra_cols ? c % 2 : c - extra_cols;
        return base[row][src];
    };
    GridPair out{Coloring(h * w), Coloring(h * w)};
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            int row = 0;
            int col = c;
            if (r > extra_rows) {
                row = r - extra_rows;
            } else if (r % 2 == 1) {
                col = (c + 1) % w;
            }
            out.s[r * w + c] = wide(base_s, row, col);
            out.t[r * w + c] = wide(base_t, row, col);
        }
    }
    return out;
}

} // namespace

bool tile_type_a(const Tile& t) { return std::find(kTypeA.begin(), kTypeA.end(), t) != kTypeA.end(); }

bool tile_type_b(const Tile& t) { return std::find(kTypeB.begin(), kTypeB.end(), t) != kTypeB.end(); }

Tile tile_at(const ToroidalGrid& grid, const Coloring& x, int r, int c) {
    return {{{x[grid.node(r, c)], x[grid.node(r, c + 1)]}, {x[grid.node(r + 1, c)], x[grid.node(r + 1, c + 1)]}}};
}

TileCensus census(const ToroidalGrid& grid, const Coloring& x) {
    require(static_cast<int>(x.size()) == grid.graph.size(), ErrorKind::length_mismatch, "one color per cell");
    require(std::all_of(x.begin(), x.end(), [](Color c) { return c >= 1 && c <= 4; }), ErrorKind::precondition,
            "census needs colors in [1, 4]");
    require(is_proper(grid.graph, x), ErrorKind::precondition, "census needs a proper coloring");
    TileCensus out;
    for (int r = 0; r < grid.h; ++r) {
        for (int c = 0; c < grid.w; ++c) {
            const auto t = tile_at(grid, x, r, c);
            out.a_count += tile_type_a(t);
            out.b_count += tile_type_b(t);
        }
    }
    out.a_odd = out.a_count % 2 == 1;
    out.b_odd = out.b_count % 2 == 1;
    return out;
}

ParityLemmaReport check_ab_parity_lemma(int palette) {
    require(palette >= 1 && palette <= 4, ErrorKind::precondition, "palette must lie in [1, 4]");
    ParityLemmaReport report;
    std::array<Color, 9> p{};
    auto counts = [&]() {
        int a = 0;
        int b = 0;
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                const Tile t{{{p[r * 3 + c], p[r * 3 + c + 1]}, {p[(r + 1) * 3 + c], p[(r + 1) * 3 + c + 1]}}};
                a += tile_type_a(t);
                b += tile_type_b(t);
            }
        }
        return std::make_pair(a, b);
    };
    // Cells in row-major order; each cell only needs to differ from its upper
    // and left neighbors.
    auto fill = [&](auto&& self, int cell) -> void {
        if (cell == 9) {
            ++report.patches;
            const auto [a0, b0] = counts();
            const Color original = p[4];
            for (Color x = 1; x <= palette; ++x) {
                if (x == original || x == p[1] || x == p[3] || x == p[5] || x == p[7]) {
                    continue;
                }
                p[4] = x;
                const auto [a1, b1] = counts();
                ++report.moves;
                const bool a_flip = (a1 - a0) % 2 != 0;
                const bool b_flip = (b1 - b0) % 2 != 0;
                report.a_flips += a_flip;
                report.counterexamples += a_flip != b_flip;
            }
            p[4] = original;
            return;
        }
        for (Color x = 1; x <= palette; ++x) {
            if ((cell % 3 > 0 && p[cell - 1] == x) || (cell >= 3 && p[cell - 3] == x)) {
                continue;
            }
            p[cell] = x;
            self(self, cell + 1);
        }
    };
    fill(fill, 0);
    return report;
}

bool feasibility_3plus1(int h, int w) { return (h % 2 == 0 && w % 2 == 0) || h == 4 || w == 4; }

Coloring transpose(const Coloring& x, int h, int w) {
    require(static_cast<int>(x.size()) == h * w, ErrorKind::length_mismatch, "coloring does not match h x w");
    Coloring y(x.size());
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            y[c * h + r] = x[r * w + c];
        }
    }
    return y;
}

GridPair construct_counterexample(int h, int w) {
    require(h >= 3 && w >= 3, ErrorKind::size_too_small, "torus sides must be at least 3");
    require(!feasibility_3plus1(h, w), ErrorKind::precondition, "dimensions admit 3 + 1 recoloring");
    auto flip = [&](GridPair p) {
        return GridPair{transpose(p.s, w, h), transpose(p.t, w, h)};
    };
    if (h % 2 == 1 && w % 2 == 1) {
        return h <= w ? odd_odd(h, w) : flip(odd_odd(w, h));
    }
    return h % 2 == 1 ? odd_even(h, w) : flip(odd_even(w, h));
}

Recoloring recolor_grid_4xw(const ToroidalGrid& grid, const RecoloringInstance& inst) {
    validate(inst);
    require(inst.k == 3 && inst.c >= 1, ErrorKind::precondition, "grid recoloring needs k = 3 and c >= 1");
    require(!inst.lists, ErrorKind::precondition, "grid recoloring takes no lists");
    require(inst.g == grid.graph, ErrorKind::precondition, "instance graph is not the given torus");
    require(grid.h == 4 || grid.w == 4, ErrorKind::precondition, "one side of the torus must be 4");
    if (grid.h != 4) {
        const auto flipped = build_toroidal_grid(grid.w, grid.h);
        RecoloringInstance sub{flipped.graph, transpose(inst.s, grid.h, grid.w), transpose(inst.t, grid.h, grid.w),
                               inst.k, inst.c, std::nullopt};
        const auto rec = recolor_grid_4xw(flipped, sub);
        std::vector<std::vector<Color>> per_node(grid.graph.size());
        for (int r = 0; r < grid.h; ++r) {
            for (int c = 0; c < grid.w; ++c) {
                const auto seq = rec.schedule.sequence(flipped.node(c, r));
                per_node[grid.node(r, c)].assign(seq.begin(), seq.end());
            }
        }
        return {Schedule(std::move(per_node)), rec.rounds};
    }

    const int w = grid.w;
    Graph columns = build_cycle(w);
    std::vector<std::int64_t> column_ids(w);
    for (int c = 0; c < w; ++c) {
        column_ids[c] = grid.graph.id(grid.node(0, c));
        for (int r = 1; r < 4; ++r) {
            column_ids[c] = std::min(column_ids[c], grid.graph.id(grid.node(r, c)));
        }
    }
    columns.set_ids(column_ids);
    const auto chosen = distance3_set(columns, std::vector<char>(w, 1));

    // 0: no parked node, 1: rows {0, 2}, 2: rows {1, 3}.
    std::vector<int> pattern(w, -1);
    std::vector<char> is_chosen(w, 0);
    for (Node c : chosen.nodes) {
        is_chosen[c] = 1;
        pattern[c] = 1;
    }
    int walk = 0;
    for (Node c : chosen.nodes) {
        for (int step = 1; !is_chosen[(c + step) % w]; ++step) {
            const int col = (c + step) % w;
            pattern[col] = step % 2 == 1 ? 2 : 1;
            if (pattern[col] == 1 && is_chosen[(col + 1) % w]) {
                pattern[col] = 0;
            }
            walk = std::max(walk, step);
        }
    }
    std::vector<Node> parked;
    std::vector<char> rest(grid.graph.size(), 1);
    for (int c = 0; c < w; ++c) {
        for (int r = 0; r < 4; ++r) {
            if ((pattern[c] == 1 && r % 2 == 0) || (pattern[c] == 2 && r % 2 == 1)) {
                parked.push_back(grid.node(r, c));
                rest[grid.node(r, c)] = 0;
            }
        }
    }
    std::sort(parked.begin(), parked.end());

    ScheduleBuilder builder(inst.s);
    builder.step_all(parked, 4);
    ExactSolver solver({1, 2, 3});
    recolor_components(builder, grid.graph, rest, inst.t, solver);
    builder.step_to(parked, inst.t);
    // Columns are 4 nodes tall, so a column step costs a constant number of
    // grid rounds; components have diameter at most 4.
    return {builder.finish(), 4 * (chosen.rounds + walk) + 4 + 2};
}

Recoloring recolor_grid_3plus1(const ToroidalGrid& grid, const RecoloringInstance& inst) {
    validate(inst);
    require(inst.k == 3 && inst.c >= 1, ErrorKind::precondition, "grid recoloring needs k = 3 and c >= 1");
    require(inst.g == grid.graph, ErrorKind::precondition, "instance graph is not the given torus");
    require(feasibility_3plus1(grid.h, grid.w), ErrorKind::infeasible,
            "3 + 1 recoloring is not always possible on this torus");
    if (grid.h % 2 == 0 && grid.w % 2 == 0) {
        std::vector<Node> v1;
        for (int r = 0; r < grid.h; ++r) {
            for (int c = 0; c < grid.w; ++c) {
                if ((r + c) % 2 == 0) {
                    v1.push_back(grid.node(r, c));
                }
            }
        }
        std::sort(v1.begin(), v1.end());
        return recolor_bipartite(inst, v1);
    }
    return recolor_grid_4xw(grid, inst);
}

} // namespace recolor
