#pragma once

// Test-side reference checks, written without the library's verifier,
// oracle or traversal helpers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/schedule.hpp"

namespace support {

using recolor::Color;
using recolor::Coloring;
using recolor::Graph;
using recolor::Node;
using recolor::Schedule;

inline std::vector<Coloring> trajectory(const Schedule& sch) {
    int len = 0;
    for (Node v = 0; v < sch.size(); ++v) {
        len = std::max(len, static_cast<int>(sch.sequence(v).size()) - 1);
    }
    std::vector<Coloring> out(len + 1, Coloring(sch.size()));
    for (Node v = 0; v < sch.size(); ++v) {
        const auto& seq = sch.sequence(v);
        for (int i = 0; i <= len; ++i) {
            out[i][v] = seq[std::min<std::size_t>(i, seq.size() - 1)];
        }
    }
    return out;
}

inline bool proper(const Graph& g, const Coloring& x) {
    for (Node u = 0; u < g.size(); ++u) {
        for (Node v : g.neighbors(u)) {
            if (x[u] == x[v]) {
                return false;
            }
        }
    }
    return true;
}

/// Strong feasibility from first principles. `allowed(v, color)` decides
/// palette membership.
template <typename Allowed>
bool strong_ok(const Graph& g, const Coloring& s, const Coloring& t, const Schedule& sch, Allowed allowed) {
    if (sch.size() != g.size()) {
        return false;
    }
    const auto xs = trajectory(sch);
    if (xs.front() != s || xs.back() != t) {
        return false;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!proper(g, xs[i])) {
            return false;
        }
        for (Node v = 0; v < g.size(); ++v) {
            if (!allowed(v, xs[i][v])) {
                return false;
            }
        }
        if (i == 0) {
            continue;
        }
        for (Node u = 0; u < g.size(); ++u) {
            for (Node v : g.neighbors(u)) {
                if (xs[i][u] != xs[i - 1][u] && xs[i][v] != xs[i - 1][v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool strong_ok(const Graph& g, const Coloring& s, const Coloring& t, const Schedule& sch, int palette) {
    return strong_ok(g, s, t, sch, [&](Node, Color c) { return c >= 1 && c <= palette; });
}

inline bool independent(const Graph& g, const std::vector<Node>& set) {
    std::vector<char> in(g.size(), 0);
    for (Node v : set) {
        in[v] = 1;
    }
    for (Node u : set) {
        for (Node v : g.neighbors(u)) {
            if (in[v]) {
                return false;
            }
        }
    }
    return true;
}

inline bool dominating(const Graph& g, const std::vector<Node>& set) {
    std::vector<char> covered(g.size(), 0);
    for (Node u : set) {
        covered[u] = 1;
        for (Node v : g.neighbors(u)) {
            covered[v] = 1;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

/// Distances from `source`; -1 when unreachable.
inline std::vector<int> distances(const Graph& g, Node source) {
    std::vector<int> d(g.size(), -1);
    std::vector<Node> queue{source};
    d[source] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Node v : g.neighbors(queue[i])) {
            if (d[v] < 0) {
                d[v] = d[queue[i]] + 1;
                queue.push_back(v);
            }
        }
    }
    return d;
}

/// Acyclicity of g[nodes] through edge counting per component.
inline bool induces_forest(const Graph& g, const std::vector<Node>& nodes) {
    std::set<Node> in(nodes.begin(), nodes.end());
    std::map<Node, Node> parent;
    for (Node v : nodes) {
        parent[v] = v;
    }
    auto find = [&](Node x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    for (Node u : nodes) {
        for (Node v : g.neighbors(u)) {
            if (u < v && in.count(v)) {
                const Node a = find(u);
                const Node b = find(v);
                if (a == b) {
                    return false;
                }
                parent[a] = b;
            }
        }
    }
    return true;
}

/// Reachability by depth-first search over all colorings in [palette],
/// visited set as std::set. Only for very small instances.
inline bool brute_reachable(const Graph& g, const Coloring& s, const Coloring& t, int palette) {
    std::set<Coloring> seen{s};
    std::vector<Coloring> stack{s};
    while (!stack.empty()) {
        Coloring x = stack.back();
        stack.pop_back();
        if (x == t) {
            return true;
        }
        for (Node v = 0; v < g.size(); ++v) {
            const Color old = x[v];
            for (Color c = 1; c <= palette; ++c) {
                if (c == old) {
                    continue;
                }
                bool clash = false;
                for (Node u : g.neighbors(v)) {
                    clash = clash || x[u] == c;
                }
                if (clash) {
                    continue;
                }
                x[v] = c;
                if (seen.insert(x).second) {
                    stack.push_back(x);
                }
                x[v] = old;
            }
        }
    }
    return false;
}

/// Proper coloring with colors [k] by backtracking in index order; used
/// where a coloring independent of the library generator is wanted.
inline Coloring first_coloring(const Graph& g, int k) {
    Coloring x(g.size(), 0);
    auto place = [&](auto&& self, Node v) -> bool {
        if (v == g.size()) {
            return true;
        }
        for (Color c = 1; c <= k; ++c) {
            bool clash = false;
            for (Node u : g.neighbors(v)) {
                clash = clash || x[u] == c;
            }
            if (!clash) {
                x[v] = c;
                if (self(self, v + 1)) {
                    return true;
                }
            }
        }
        x[v] = 0;
        return false;
    };
    place(place, 0);
    return x;
}

} // namespace support
