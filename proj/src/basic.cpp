#include "recolor/basic.hpp"

#include <algorithm>

#include "recolor/oracle.hpp"

namespace recolor {

namespace {

std::vector<char> complement_mask(int n, std::span<const Node> set) {
    std::vector<char> mask(n, 1);
    for (Node v : set) {
        mask[v] = 0;
    }
    return mask;
}

std::vector<Node> mask_nodes(const std::vector<char>& mask) {
    std::vector<Node> out;
    for (Node v = 0; v < static_cast<Node>(mask.size()); ++v) {
        if (mask[v]) {
            out.push_back(v);
        }
    }
    return out;
}

void require_palette(const Coloring& x, int top, const char* what) {
    for (Color c : x) {
        require(c >= 1 && c <= top, ErrorKind::precondition, what);
    }
}

// s, t in [3] on a graph of max degree 2; `extra` is a color no node uses.
Recoloring core_3plus1(const Graph& g, const Coloring& s, const Coloring& t, Color extra) {
    require(g.max_degree() <= 2, ErrorKind::precondition, "3+1 recoloring needs paths or cycles");
    require_palette(s, 3, "3+1 recoloring needs colors in [3]");
    require_palette(t, 3, "3+1 recoloring needs colors in [3]");
    ScheduleBuilder builder(s);
    const auto mis = greedy_mis_from_coloring(g, s);
    // Isolated nodes skip the detour through the extra color.
    std::vector<Node> parked;
    for (Node v : mis) {
        if (g.degree(v) > 0) {
            parked.push_back(v);
        }
    }
    builder.step_all(parked, extra);
    const auto rest = complement_mask(g.size(), mis);
    for (const auto& comp : components_of(g, rest)) {
        require(comp.size() <= 8, ErrorKind::precondition, "component left by the MIS is too large");
    }
    ExactSolver solver({1, 2, 3});
    recolor_components(builder, g, rest, t, solver);
    builder.step_to(mis, t);
    // Sweep over three colors, then one round to see the component.
    return {builder.finish(), 3 + 1};
}

// s, t in [4] on a graph of max degree 3; `extra` is a color no node uses.
Recoloring core_4plus1(const Graph& g, const Coloring& s, const Coloring& t, Color extra) {
    require(g.max_degree() <= 3, ErrorKind::precondition, "4+1 recoloring needs max degree 3");
    require_palette(s, 4, "4+1 recoloring needs colors in [4]");
    require_palette(t, 4, "4+1 recoloring needs colors in [4]");
    ScheduleBuilder builder(s);
    const auto mis = greedy_mis_from_coloring(g, s);
    builder.step_all(mis, extra);
    const auto rest = mask_nodes(complement_mask(g.size(), mis));
    const auto sub = induced_subgraph(g, rest);
    const auto s_rest = restrict_to(s, rest);
    const auto t_rest = restrict_to(t, rest);
    const auto down_s = eliminate_top_color(sub.graph, s_rest, 4, 2);
    const auto down_t = eliminate_top_color(sub.graph, t_rest, 4, 2);
    const auto inner = core_3plus1(sub.graph, down_s.reduced, down_t.reduced, 4);
    builder.run(rest, down_s.step);
    builder.run(rest, inner.schedule);
    builder.run(rest, reverse(down_t.step));
    builder.step_to(mis, t);
    return {builder.finish(), 4 + 1 + inner.rounds};
}

// Grid wrapper: MIS to color 6, then `inner` on the rest, then MIS to t.
template <typename Inner>
Recoloring grid_wrapper(const RecoloringInstance& inst, Inner inner) {
    const Graph& g = inst.g;
    require(g.max_degree() <= 4, ErrorKind::precondition, "grid recoloring needs max degree 4");
    ScheduleBuilder builder(inst.s);
    const auto mis = greedy_mis_from_coloring(g, inst.s);
    builder.step_all(mis, 6);
    const auto rest = mask_nodes(complement_mask(g.size(), mis));
    const auto sub = induced_subgraph(g, rest);
    const auto part = inner(sub.graph, restrict_to(inst.s, rest), restrict_to(inst.t, rest));
    builder.run(rest, part.schedule);
    builder.step_to(mis, inst.t);
    return {builder.finish(), inst.k + part.rounds};
}

} // namespace

Recoloring recolor_trivial(const RecoloringInstance& inst) {
    validate(inst);
    const int k = inst.k;
    require(inst.c >= k - 1, ErrorKind::precondition, "trivial recoloring needs c >= k - 1");
    const int n = inst.g.size();
    ScheduleBuilder builder(inst.s);
    std::vector<std::vector<Node>> classes(k + 1);
    for (Node v = 0; v < n; ++v) {
        classes[inst.s[v]].push_back(v);
    }
    for (Color j = 1; j < k; ++j) {
        builder.step_all(classes[j], k + j);
    }
    builder.step_to(classes[k], inst.t);
    for (Color j = 1; j < k; ++j) {
        builder.step_to(classes[j], inst.t);
    }
    return {builder.finish(), 0};
}

Recoloring recolor_bipartite(const RecoloringInstance& inst, std::span<const Node> v1) {
    validate(inst);
    require(inst.c >= 1, ErrorKind::precondition, "bipartite recoloring needs c >= 1");
    const Graph& g = inst.g;
    std::vector<char> in_v1(g.size(), 0);
    for (Node v : v1) {
        require(v >= 0 && v < g.size(), ErrorKind::precondition, "bipartition node out of range");
        in_v1[v] = 1;
    }
    for (auto [u, v] : g.edges()) {
        require(in_v1[u] != in_v1[v], ErrorKind::precondition, "invalid bipartition");
    }
    const Color extra = inst.k + 1;
    std::vector<std::vector<Color>> per_node(g.size());
    for (Node v = 0; v < g.size(); ++v) {
        if (in_v1[v]) {
            per_node[v] = {inst.s[v], extra, extra, inst.t[v]};
        } else {
            per_node[v] = {inst.s[v], inst.s[v], inst.t[v], inst.t[v]};
        }
    }
    return {Schedule(std::move(per_node)), 0};
}

Recoloring recolor_bipartite(const RecoloringInstance& inst) {
    const auto side = bipartition(inst.g);
    std::vector<Node> v1;
    for (Node v = 0; v < inst.g.size(); ++v) {
        if (side[v] == 0) {
            v1.push_back(v);
        }
    }
    return recolor_bipartite(inst, v1);
}

Recoloring recolor_path_cycle_3plus1(const RecoloringInstance& inst) {
    validate(inst);
    require(inst.k == 3 && inst.c >= 1, ErrorKind::precondition, "path/cycle recoloring needs k = 3, c >= 1");
    return core_3plus1(inst.g, inst.s, inst.t, 4);
}

TopColorElimination eliminate_top_color(const Graph& g, const Coloring& x, int k, int max_degree) {
    require(k >= max_degree + 2, ErrorKind::precondition, "eliminating a color needs k >= max degree + 2");
    require(g.max_degree() <= max_degree, ErrorKind::precondition, "graph exceeds the stated max degree");
    require(is_proper(g, x), ErrorKind::precondition, "coloring must be proper");
    require_palette(x, k, "coloring exceeds [k]");
    Coloring reduced = x;
    for (Node v = 0; v < g.size(); ++v) {
        if (x[v] != k) {
            continue;
        }
        // Neighbors of a color-k node never have color k, so x is enough.
        std::vector<char> used(k + 1, 0);
        for (Node u : g.neighbors(v)) {
            used[x[u]] = 1;
        }
        Color c = 1;
        while (used[c]) {
            ++c;
        }
        reduced[v] = c;
    }
    return {reduced, Schedule::from_trajectory(x == reduced ? std::vector<Coloring>{x}
                                                            : std::vector<Coloring>{x, reduced})};
}

Recoloring recolor_subcubic_4plus1(const RecoloringInstance& inst) {
    validate(inst);
    require(inst.k == 4 && inst.c >= 1, ErrorKind::precondition, "subcubic recoloring needs k = 4, c >= 1");
    return core_4plus1(inst.g, inst.s, inst.t, 5);
}

Recoloring recolor_grid_4plus2(const RecoloringInstance& inst) {
    validate(inst);
    require(inst.k == 4 && inst.c >= 2, ErrorKind::precondition, "4+2 grid recoloring needs k = 4, c >= 2");
    return grid_wrapper(inst, [](const Graph& g, const Coloring& s, const Coloring& t) {
        return core_4plus1(g, s, t, 5);
    });
}

Recoloring recolor_grid_5plus1(const RecoloringInstance& inst) {
    validate(inst);
    require(inst.k == 5 && inst.c >= 1, ErrorKind::precondition, "5+1 grid recoloring needs k = 5, c >= 1");
    return grid_wrapper(inst, [](const Graph& g, const Coloring& s, const Coloring& t) {
        const auto down_s = eliminate_top_color(g, s, 5, 3);
        const auto down_t = eliminate_top_color(g, t, 5, 3);
        const auto inner = core_4plus1(g, down_s.reduced, down_t.reduced, 5);
        auto sch = concat(concat(down_s.step, inner.schedule), reverse(down_t.step));
        return Recoloring{std::move(sch), 1 + inner.rounds};
    });
}

namespace {

Coloring shifted(const Coloring& s, int k) {
    Coloring t(s.size());
    for (std::size_t v = 0; v < s.size(); ++v) {
        t[v] = s[v] % k + 1;
    }
    return t;
}

FrozenFixture make_fixture(std::string name, Graph g, Coloring s, int k) {
    auto t = shifted(s, k);
    return {std::move(name), std::move(g), std::move(s), std::move(t), k};
}

FrozenFixture grid_fixture(std::string name, const std::vector<std::vector<Color>>& rows, int k) {
    const int h = static_cast<int>(rows.size());
    const int w = static_cast<int>(rows.front().size());
    auto grid = build_toroidal_grid(h, w);
    Coloring s;
    for (const auto& row : rows) {
        s.insert(s.end(), row.begin(), row.end());
    }
    return make_fixture(std::move(name), std::move(grid.graph), std::move(s), k);
}

} // namespace

std::vector<FrozenFixture> fixtures_needsextra() {
    std::vector<FrozenFixture> out;
    out.push_back(make_fixture("a", build_path(2), {1, 2}, 2));
    out.push_back(make_fixture("b", build_cycle(4), {1, 2, 1, 2}, 2));
    out.push_back(make_fixture("c", build_cycle(3), {1, 2, 3}, 3));
    out.push_back(grid_fixture("d", {{1, 2, 1, 2}, {2, 1, 2, 1}, {1, 2, 1, 2}, {2, 1, 2, 1}}, 2));
    out.push_back(grid_fixture("e", {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}, 3));
    out.push_back(grid_fixture("f", {{1, 2, 3, 4}, {3, 4, 1, 2}, {1, 2, 3, 4}, {3, 4, 1, 2}}, 4));
    out.push_back(grid_fixture(
        "g", {{1, 2, 3, 4, 5}, {3, 4, 5, 1, 2}, {5, 1, 2, 3, 4}, {2, 3, 4, 5, 1}, {4, 5, 1, 2, 3}}, 5));
    out.push_back(make_fixture("h", build_complete_bipartite(3, 3), {1, 1, 1, 2, 2, 2}, 2));
    out.push_back(make_fixture("i", build_prism(), {1, 2, 3, 2, 3, 1}, 3));
    out.push_back(make_fixture("j", build_complete(4), {1, 2, 3, 4}, 4));
    return out;
}

FrozenFixture fixture_needsextra(const std::string& name) {
    for (auto& f : fixtures_needsextra()) {
        if (f.name == name) {
            return f;
        }
    }
    fail(ErrorKind::precondition, "unknown fixture: " + name);
}

RecoloringInstance fixture_3pathslb(int n) {
    require(n >= 3 && n % 3 == 0, ErrorKind::precondition, "path fixture needs n to be a positive multiple of 3");
    Coloring s(n);
    for (int v = 0; v < n; ++v) {
        s[v] = v % 3 + 1;
    }
    return {build_path(n), s, shifted(s, 3), 3, 0, std::nullopt};
}

RecoloringInstance fixture_4treelb(int depth) {
    Graph g = build_balanced_3regular_tree(depth);
    Coloring s(g.size(), 0);
    s[0] = 1;
    // Nodes come in BFS order, so a node's parent is its smallest neighbor.
    for (Node v = 0; v < g.size(); ++v) {
        std::vector<Color> free;
        if (v == 0) {
            free = {2, 3, 4};
        } else {
            const Color parent = s[g.neighbors(v).front()];
            for (Color c = 1; c <= 4; ++c) {
                if (c != s[v] && c != parent) {
                    free.push_back(c);
                }
            }
        }
        std::size_t next = 0;
        for (Node u : g.neighbors(v)) {
            if (u > v) {
                s[u] = free[next++];
            }
        }
    }
    return {std::move(g), s, shifted(s, 4), 4, 0, std::nullopt};
}

} // namespace recolor
