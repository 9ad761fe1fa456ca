#include "recolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

namespace recolor {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::size_too_small: return "size-too-small";
    case ErrorKind::length_mismatch: return "length-mismatch";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::size_guard: return "size-guard";
    case ErrorKind::round_limit: return "round-limit";
    case ErrorKind::format: return "format";
    case ErrorKind::io: return "io";
    }
    return "unknown";
}

Graph::Graph(int n, std::span<const Edge> edges) : adjacency_(n), ids_(n) {
    require(n >= 0, ErrorKind::size_too_small, "negative node count");
    std::iota(ids_.begin(), ids_.end(), std::int64_t{0});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            fail(ErrorKind::format, "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        }
        if (u == v) {
            fail(ErrorKind::format, "self-loop at node " + std::to_string(u));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        require(std::adjacent_find(list.begin(), list.end()) == list.end(), ErrorKind::format,
                "duplicate edge");
    }
    edge_count_ = static_cast<int>(edges.size());
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& list : adjacency_) {
        best = std::max(best, static_cast<int>(list.size()));
    }
    return best;
}

bool Graph::adjacent(Node u, Node v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Node u = 0; u < size(); ++u) {
        for (Node v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

void Graph::set_ids(std::vector<std::int64_t> ids) {
    require(static_cast<int>(ids.size()) == size(), ErrorKind::length_mismatch, "id count mismatch");
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorKind::precondition,
            "identifiers must be distinct");
    ids_ = std::move(ids);
}

Graph build_path(int n) {
    require(n >= 1, ErrorKind::size_too_small, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Node v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph(n, edges);
}

Graph build_cycle(int n) {
    require(n >= 3, ErrorKind::size_too_small, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Node v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph(n, edges);
}

ToroidalGrid build_toroidal_grid(int h, int w) {
    require(h >= 3 && w >= 3, ErrorKind::size_too_small, "toroidal grid needs h >= 3 and w >= 3");
    ToroidalGrid grid{h, w, {}};
    std::vector<Edge> edges;
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            edges.emplace_back(grid.node(r, c), grid.node(r, c + 1));
            edges.emplace_back(grid.node(r, c), grid.node(r + 1, c));
        }
    }
    grid.graph = Graph(h * w, edges);
    return grid;
}

Graph build_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, ErrorKind::size_too_small, "complete bipartite needs a, b >= 1");
    std::vector<Edge> edges;
    for (Node u = 0; u < a; ++u) {
        for (Node v = 0; v < b; ++v) {
            edges.emplace_back(u, a + v);
        }
    }
    return Graph(a + b, edges);
}

Graph build_prism() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
    return Graph(6, edges);
}

Graph build_complete(int n) {
    require(n >= 1, ErrorKind::size_too_small, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Node u = 0; u < n; ++u) {
        for (Node v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph build_balanced_3regular_tree(int depth) {
    require(depth >= 1, ErrorKind::size_too_small, "3-regular tree needs depth >= 1");
    std::vector<Edge> edges;
    std::vector<Node> frontier;
    Node next = 1;
    for (int i = 0; i < 3; ++i) {
        edges.emplace_back(0, next);
        frontier.push_back(next++);
    }
    for (int level = 2; level <= depth; ++level) {
        std::vector<Node> grown;
        for (Node leaf : frontier) {
            for (int i = 0; i < 2; ++i) {
                edges.emplace_back(leaf, next);
                grown.push_back(next++);
            }
        }
        frontier = std::move(grown);
    }
    return Graph(next, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, ErrorKind::size_too_small, "tree needs n >= 1");
    if (n == 1) {
        return Graph(1, {});
    }
    if (n == 2) {
        const std::vector<Edge> edge{{0, 1}};
        return Graph(2, edge);
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    for (auto& x : code) {
        x = pick(rng);
    }
    std::vector<int> remaining(n, 1);
    for (int x : code) {
        ++remaining[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (remaining[v] == 1) {
            leaves.push(v);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int x : code) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--remaining[x] == 1) {
            leaves.push(x);
        }
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

namespace {

std::uint64_t edge_key(Node u, Node v) {
    if (u > v) {
        std::swap(u, v);
    }
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

std::vector<Edge> cubic_start(int n) {
    if (n == 4) {
        return {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    }
    const int m = n / 2;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(i, (i + 1) % m);
        edges.emplace_back(m + i, m + (i + 1) % m);
        edges.emplace_back(i, m + i);
    }
    return edges;
}

} // namespace

Graph random_subcubic(int n, std::uint64_t seed, double drop_fraction) {
    require(n >= 4, ErrorKind::size_too_small, "random subcubic graph needs n >= 4");
    const bool odd = n % 2 == 1;
    const int base = odd ? n - 1 : n;
    require(base >= 4, ErrorKind::size_too_small, "random subcubic graph needs n >= 5 when odd");
    std::mt19937_64 rng(seed);
    auto edges = cubic_start(base);
    std::unordered_set<std::uint64_t> present;
    for (auto [u, v] : edges) {
        present.insert(edge_key(u, v));
    }
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    const std::size_t swaps = 10 * edges.size();
    for (std::size_t s = 0; s < swaps; ++s) {
        std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j) {
            continue;
        }
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        if (rng() & 1U) {
            std::swap(c, d);
        }
        if (a == c || a == d || b == c || b == d) {
            continue;
        }
        if (present.count(edge_key(a, c)) || present.count(edge_key(b, d))) {
            continue;
        }
        present.erase(edge_key(a, b));
        present.erase(edge_key(c, d));
        present.insert(edge_key(a, c));
        present.insert(edge_key(b, d));
        edges[i] = {a, c};
        edges[j] = {b, d};
    }
    if (odd) {
        std::size_t i = pick(rng);
        auto [a, b] = edges[i];
        edges[i] = {a, base};
        edges.emplace_back(base, b);
    }
    if (drop_fraction > 0.0) {
        std::shuffle(edges.begin(), edges.end(), rng);
        const auto drop = static_cast<std::size_t>(drop_fraction * static_cast<double>(edges.size()));
        edges.resize(edges.size() - std::min(drop, edges.size()));
    }
    return Graph(n, edges);
}

Coloring random_proper_coloring(const Graph& g, int k, std::uint64_t seed) {
    require(k >= 1, ErrorKind::precondition, "need at least one color");
    const int n = g.size();
    std::mt19937_64 rng(seed);
    std::vector<Color> palette(k);
    std::iota(palette.begin(), palette.end(), 1);
    Coloring x(n, 0);
    auto free_color = [&](Node v) {
        std::shuffle(palette.begin(), palette.end(), rng);
        for (Color c : palette) {
            bool clash = false;
            for (Node u : g.neighbors(v)) {
                clash = clash || x[u] == c;
            }
            if (!clash) {
                return c;
            }
        }
        return 0;
    };

    // Greedy along a BFS order from random roots: every node but a root sees
    // at least one uncolored neighbor when colored in reverse.
    bool done = false;
    for (int attempt = 0; attempt < 64 && !done; ++attempt) {
        std::vector<Node> starts(n);
        std::iota(starts.begin(), starts.end(), 0);
        std::shuffle(starts.begin(), starts.end(), rng);
        std::vector<char> seen(n, 0);
        std::vector<Node> order;
        for (Node root : starts) {
            if (seen[root]) {
                continue;
            }
            seen[root] = 1;
            const std::size_t begin = order.size();
            order.push_back(root);
            for (std::size_t head = begin; head < order.size(); ++head) {
                for (Node u : g.neighbors(order[head])) {
                    if (!seen[u]) {
                        seen[u] = 1;
                        order.push_back(u);
                    }
                }
            }
        }
        if (attempt % 2 == 1) {
            std::reverse(order.begin(), order.end());
        }
        std::fill(x.begin(), x.end(), 0);
        done = true;
        for (Node v : order) {
            x[v] = free_color(v);
            if (x[v] == 0) {
                done = false;
                break;
            }
        }
    }
    if (!done) {
        // Exhaustive fallback: backtracking in BFS order.
        std::fill(x.begin(), x.end(), 0);
        std::vector<Node> order;
        std::vector<char> seen(n, 0);
        for (Node root = 0; root < n; ++root) {
            if (seen[root]) {
                continue;
            }
            seen[root] = 1;
            const std::size_t begin = order.size();
            order.push_back(root);
            for (std::size_t head = begin; head < order.size(); ++head) {
                for (Node u : g.neighbors(order[head])) {
                    if (!seen[u]) {
                        seen[u] = 1;
                        order.push_back(u);
                    }
                }
            }
        }
        long budget = 10'000'000;
        auto place = [&](auto&& self, std::size_t i) -> bool {
            if (i == order.size()) {
                return true;
            }
            require(--budget > 0, ErrorKind::infeasible, "no proper coloring found within the search budget");
            const Node v = order[i];
            for (Color c = 1; c <= k; ++c) {
                bool clash = false;
                for (Node u : g.neighbors(v)) {
                    clash = clash || x[u] == c;
                }
                if (!clash) {
                    x[v] = c;
                    if (self(self, i + 1)) {
                        return true;
                    }
                }
            }
            x[v] = 0;
            return false;
        };
        require(place(place, 0), ErrorKind::infeasible, "graph has no proper coloring with this many colors");
    }
    // Random single-node recolorings to move away from the greedy shape.
    std::uniform_int_distribution<Node> pick(0, std::max(0, n - 1));
    for (int i = 0; n > 0 && i < 10 * n; ++i) {
        const Node v = pick(rng);
        const Color old = x[v];
        x[v] = 0;
        const Color c = free_color(v);
        x[v] = c == 0 ? old : c;
    }
    return x;
}

bool is_proper(const Graph& g, const Coloring& x) {
    require(static_cast<int>(x.size()) == g.size(), ErrorKind::length_mismatch,
            "coloring length does not match graph");
    for (Node u = 0; u < g.size(); ++u) {
        for (Node v : g.neighbors(u)) {
            if (x[u] == x[v]) {
                return false;
            }
        }
    }
    return true;
}

bool is_proper_list(const Graph& g, const Coloring& x, const ListAssignment& lists) {
    require(static_cast<int>(lists.size()) == g.size(), ErrorKind::length_mismatch,
            "list assignment length does not match graph");
    if (!is_proper(g, x)) {
        return false;
    }
    for (Node v = 0; v < g.size(); ++v) {
        if (!std::binary_search(lists[v].begin(), lists[v].end(), x[v])) {
            return false;
        }
    }
    return true;
}

bool is_independent(const Graph& g, std::span<const Node> set) {
    std::vector<char> in(g.size(), 0);
    for (Node v : set) {
        in[v] = 1;
    }
    for (Node v : set) {
        for (Node u : g.neighbors(v)) {
            if (in[u]) {
                return false;
            }
        }
    }
    return true;
}

bool is_maximal_independent(const Graph& g, std::span<const Node> set) {
    if (!is_independent(g, set)) {
        return false;
    }
    std::vector<char> in(g.size(), 0);
    for (Node v : set) {
        in[v] = 1;
    }
    for (Node v = 0; v < g.size(); ++v) {
        if (in[v]) {
            continue;
        }
        bool dominated = false;
        for (Node u : g.neighbors(v)) {
            dominated = dominated || in[u];
        }
        if (!dominated) {
            return false;
        }
    }
    return true;
}

bool is_forest(const Graph& g) {
    const auto comps = connected_components(g);
    return g.edge_count() == g.size() - static_cast<int>(comps.size());
}

bool is_tree(const Graph& g) {
    return g.size() >= 1 && g.edge_count() == g.size() - 1 && connected_components(g).size() == 1;
}

int max_color(const Coloring& x) {
    return x.empty() ? 0 : *std::max_element(x.begin(), x.end());
}

std::vector<Node> greedy_mis_from_coloring(const Graph& g, const Coloring& x) {
    require(is_proper(g, x), ErrorKind::precondition, "MIS sweep needs a proper coloring");
    const int palette = max_color(x);
    std::vector<std::vector<Node>> classes(palette + 1);
    for (Node v = 0; v < g.size(); ++v) {
        require(x[v] >= 1, ErrorKind::precondition, "colors are 1-based");
        classes[x[v]].push_back(v);
    }
    std::vector<char> selected(g.size(), 0);
    for (int c = 1; c <= palette; ++c) {
        // A color class is independent, so its members decide simultaneously.
        for (Node v : classes[c]) {
            bool blocked = false;
            for (Node u : g.neighbors(v)) {
                blocked = blocked || selected[u];
            }
            if (!blocked) {
                selected[v] = 1;
            }
        }
    }
    std::vector<Node> out;
    for (Node v = 0; v < g.size(); ++v) {
        if (selected[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Node> sources) {
    std::vector<int> dist(g.size(), -1);
    std::vector<Node> queue;
    queue.reserve(g.size());
    for (Node s : sources) {
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Node v = queue[head];
        for (Node u : g.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

std::vector<std::vector<Node>> components_of(const Graph& g, const std::vector<char>& mask) {
    std::vector<std::vector<Node>> out;
    std::vector<char> seen(g.size(), 0);
    for (Node s = 0; s < g.size(); ++s) {
        if (!mask[s] || seen[s]) {
            continue;
        }
        std::vector<Node> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Node u : g.neighbors(comp[head])) {
                if (mask[u] && !seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::vector<Node>> connected_components(const Graph& g) {
    return components_of(g, std::vector<char>(g.size(), 1));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Node> nodes) {
    std::vector<int> local(g.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        local[nodes[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    std::vector<std::int64_t> ids;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        ids.push_back(g.id(nodes[i]));
        for (Node u : g.neighbors(nodes[i])) {
            if (local[u] > static_cast<int>(i)) {
                edges.emplace_back(static_cast<Node>(i), local[u]);
            }
        }
    }
    InducedSubgraph sub{Graph(static_cast<int>(nodes.size()), edges), {nodes.begin(), nodes.end()}};
    sub.graph.set_ids(std::move(ids));
    return sub;
}

std::vector<int> bipartition(const Graph& g) {
    std::vector<int> side(g.size(), -1);
    for (Node s = 0; s < g.size(); ++s) {
        if (side[s] >= 0) {
            continue;
        }
        side[s] = 0;
        std::vector<Node> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Node v = queue[head];
            for (Node u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else {
                    require(side[u] != side[v], ErrorKind::precondition, "graph is not bipartite");
                }
            }
        }
    }
    return side;
}

} // namespace recolor
