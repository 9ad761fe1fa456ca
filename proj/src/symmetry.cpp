#include "recolor/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace recolor {

LocalColoring deterministic_coloring(const Graph& g, const std::vector<char>& mask) {
    const int n = g.size();
    require(static_cast<int>(mask.size()) == n, ErrorKind::length_mismatch, "mask length");
    std::int64_t min_id = 0;
    for (Node v = 0; v < n; ++v) {
        min_id = std::min(min_id, g.id(v));
    }
    int max_deg = 0;
    int out_deg = 0;
    std::vector<std::vector<Node>> out(n);
    for (Node v = 0; v < n; ++v) {
        if (!mask[v]) {
            continue;
        }
        int deg = 0;
        for (Node u : g.neighbors(v)) {
            if (mask[u]) {
                ++deg;
                if (g.id(u) > g.id(v)) {
                    out[v].push_back(u);
                }
            }
        }
        std::sort(out[v].begin(), out[v].end(), [&](Node a, Node b) { return g.id(a) < g.id(b); });
        max_deg = std::max(max_deg, deg);
        out_deg = std::max(out_deg, static_cast<int>(out[v].size()));
    }

    LocalColoring result{Coloring(n, 0), 0};
    // Cole-Vishkin on every forest j, where the parent of v is out[v][j].
    std::vector<std::vector<std::uint64_t>> cv(out_deg, std::vector<std::uint64_t>(n, 0));
    for (int j = 0; j < out_deg; ++j) {
        for (Node v = 0; v < n; ++v) {
            cv[j][v] = static_cast<std::uint64_t>(g.id(v) - min_id);
        }
    }
    auto too_many = [&] {
        for (int j = 0; j < out_deg; ++j) {
            for (Node v = 0; v < n; ++v) {
                if (mask[v] && cv[j][v] >= 6) {
                    return true;
                }
            }
        }
        return false;
    };
    while (too_many()) {
        ++result.rounds;
        for (int j = 0; j < out_deg; ++j) {
            std::vector<std::uint64_t> next(n, 0);
            for (Node v = 0; v < n; ++v) {
                if (!mask[v]) {
                    continue;
                }
                const std::uint64_t mine = cv[j][v];
                int bit = 0;
                if (j < static_cast<int>(out[v].size())) {
                    bit = std::countr_zero(mine ^ cv[j][out[v][j]]);
                }
                next[v] = 2 * static_cast<std::uint64_t>(bit) + ((mine >> bit) & 1U);
            }
            cv[j] = std::move(next);
        }
    }

    // Product of the forest colorings; fall back to plain ids when that is
    // not smaller.
    std::vector<std::uint64_t> c(n, 0);
    std::uint64_t q = 1;
    std::uint64_t id_range = 1;
    for (Node v = 0; v < n; ++v) {
        id_range = std::max(id_range, static_cast<std::uint64_t>(g.id(v) - min_id) + 1);
    }
    bool use_product = out_deg <= 24;
    for (int j = 0; use_product && j < out_deg; ++j) {
        q *= 6;
        use_product = q < id_range;
    }
    if (use_product) {
        for (Node v = 0; v < n; ++v) {
            for (int j = 0; j < out_deg; ++j) {
                c[v] = c[v] * 6 + cv[j][v];
            }
        }
    } else {
        q = id_range;
        for (Node v = 0; v < n; ++v) {
            c[v] = static_cast<std::uint64_t>(g.id(v) - min_id);
        }
    }

    // Color reduction to max_deg + 1 colors: colors are cut into blocks of
    // 2P, each block sweeps its upper half into its lower half in P rounds,
    // which halves the palette.
    const std::uint64_t P = static_cast<std::uint64_t>(max_deg) + 1;
    std::vector<char> used(P, 0);
    while (q > P) {
        const std::uint64_t block = 2 * P;
        std::vector<std::vector<Node>> by_local(block);
        for (Node v = 0; v < n; ++v) {
            if (mask[v]) {
                by_local[c[v] % block].push_back(v);
            }
        }
        for (std::uint64_t j = P; j < block; ++j) {
            for (Node v : by_local[j]) {
                std::fill(used.begin(), used.end(), 0);
                for (Node u : g.neighbors(v)) {
                    if (mask[u] && c[u] / block == c[v] / block && c[u] % block < P) {
                        used[c[u] % block] = 1;
                    }
                }
                std::uint64_t pick = 0;
                while (used[pick]) {
                    ++pick;
                }
                c[v] = c[v] / block * block + pick;
            }
        }
        for (Node v = 0; v < n; ++v) {
            c[v] = c[v] / block * P + c[v] % block;
        }
        q = (q + block - 1) / block * P;
        result.rounds += static_cast<int>(P);
    }
    for (Node v = 0; v < n; ++v) {
        if (mask[v]) {
            result.colors[v] = static_cast<Color>(c[v]) + 1;
        }
    }
    return result;
}

LocalSet mis_from_coloring(const Graph& g, const std::vector<char>& mask, const Coloring& colors, int palette) {
    std::vector<std::vector<Node>> classes(palette + 1);
    for (Node v = 0; v < g.size(); ++v) {
        if (mask[v]) {
            require(colors[v] >= 1 && colors[v] <= palette, ErrorKind::precondition, "color outside palette");
            classes[colors[v]].push_back(v);
        }
    }
    std::vector<char> in(g.size(), 0);
    for (const auto& members : classes) {
        for (Node v : members) {
            bool blocked = false;
            for (Node u : g.neighbors(v)) {
                blocked = blocked || (mask[u] && in[u]);
            }
            in[v] = blocked ? 0 : 1;
        }
    }
    LocalSet out{{}, palette};
    for (Node v = 0; v < g.size(); ++v) {
        if (in[v]) {
            out.nodes.push_back(v);
        }
    }
    return out;
}

LocalSet local_mis(const Graph& g, const std::vector<char>& mask) {
    const auto coloring = deterministic_coloring(g, mask);
    auto set = mis_from_coloring(g, mask, coloring.colors, std::max(1, max_color(coloring.colors)));
    set.rounds += coloring.rounds;
    return set;
}

LocalSet distance3_set(const Graph& g, const std::vector<char>& mask, bool through_any) {
    std::vector<Node> nodes;
    std::vector<int> local(g.size(), -1);
    for (Node v = 0; v < g.size(); ++v) {
        if (mask[v]) {
            local[v] = static_cast<int>(nodes.size());
            nodes.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (Node v : nodes) {
        std::vector<Node> reach;
        for (Node u : g.neighbors(v)) {
            if (mask[u]) {
                reach.push_back(u);
            } else if (!through_any) {
                continue;
            }
            for (Node w : g.neighbors(u)) {
                if (mask[w] && w != v) {
                    reach.push_back(w);
                }
            }
        }
        std::sort(reach.begin(), reach.end());
        reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
        for (Node u : reach) {
            if (local[v] < local[u]) {
                edges.emplace_back(local[v], local[u]);
            }
        }
    }
    Graph square(static_cast<int>(nodes.size()), edges);
    std::vector<std::int64_t> ids;
    for (Node v : nodes) {
        ids.push_back(g.id(v));
    }
    square.set_ids(std::move(ids));
    const auto mis = local_mis(square, std::vector<char>(nodes.size(), 1));
    LocalSet out{{}, 2 * mis.rounds};
    for (Node i : mis.nodes) {
        out.nodes.push_back(nodes[i]);
    }
    return out;
}

} // namespace recolor
