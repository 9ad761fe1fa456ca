#include "recolor/subcubic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "recolor/symmetry.hpp"
#include "recolor/tree.hpp"

namespace recolor {

namespace {

int ceil_log2(int n) {
    int lg = 0;
    while ((1LL << lg) < n) {
        ++lg;
    }
    return std::max(1, lg);
}

// Union-find without path compression so that unions can be undone.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), rank_(n, 0) {
        for (int i = 0; i < n; ++i) {
            parent_[i] = i;
        }
    }

    int find(int x) const {
        while (parent_[x] != x) {
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (rank_[a] < rank_[b]) {
            std::swap(a, b);
        }
        history_.push_back({b, rank_[a] == rank_[b] ? a : -1});
        parent_[b] = a;
        if (rank_[a] == rank_[b]) {
            ++rank_[a];
        }
        return true;
    }

    std::size_t mark() const { return history_.size(); }

    void rollback(std::size_t to) {
        while (history_.size() > to) {
            auto [child, bumped] = history_.back();
            history_.pop_back();
            if (bumped >= 0) {
                --rank_[bumped];
            }
            parent_[child] = child;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::pair<int, int>> history_;
};

// Theta from two fundamental cycles that share at least one edge: the two
// nodes of degree 3 in their union are the endpoints.
Anchor theta_from_cycles(const std::vector<Edge>& c1, const std::vector<Edge>& c2) {
    std::map<Node, std::vector<Node>> adj;
    std::set<Edge> seen;
    for (const auto* cycle : {&c1, &c2}) {
        for (auto [a, b] : *cycle) {
            const Edge e{std::min(a, b), std::max(a, b)};
            if (seen.insert(e).second) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    }
    std::vector<Node> ends;
    for (auto& [x, nbrs] : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs.size() == 3) {
            ends.push_back(x);
        }
    }
    require(ends.size() == 2, ErrorKind::precondition, "overlapping cycles did not form a theta");
    Anchor a;
    a.kind = Anchor::Kind::theta;
    a.u = ends[0];
    a.v = ends[1];
    for (Node first : adj[a.u]) {
        std::vector<Node> path{a.u, first};
        while (path.back() != a.v) {
            const Node cur = path.back();
            const Node prev = path[path.size() - 2];
            const auto& nbrs = adj[cur];
            path.push_back(nbrs[0] == prev ? nbrs[1] : nbrs[0]);
        }
        a.paths.push_back(std::move(path));
    }
    return a;
}

} // namespace

std::vector<Node> Anchor::nodes() const {
    std::vector<Node> out;
    if (kind == Kind::low_degree) {
        out.push_back(node);
        return out;
    }
    for (const auto& p : paths) {
        out.insert(out.end(), p.begin(), p.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_valid_anchor(const Graph& g, const Anchor& a) {
    if (a.kind == Anchor::Kind::low_degree) {
        return a.node >= 0 && a.node < g.size() && g.degree(a.node) <= 2;
    }
    if (a.paths.size() != 3 || a.u == a.v) {
        return false;
    }
    std::set<Node> internal;
    std::size_t internal_count = 0;
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
            if (p[i] == a.u || p[i] == a.v) {
                return false;
            }
            internal.insert(p[i]);
            ++internal_count;
        }
    }
    // Only one path may be the direct edge.
    int direct = 0;
    for (const auto& p : a.paths) {
        direct += p.size() == 2;
    }
    return internal.size() == internal_count && direct <= 1;
}

Anchor find_anchor(const Graph& g, Node u, int r) {
    require(u >= 0 && u < g.size(), ErrorKind::precondition, "anchor search from a missing node");
    if (g.degree(u) <= 2) {
        return Anchor{Anchor::Kind::low_degree, u, -1, -1, {}};
    }
    std::unordered_map<Node, int> dist{{u, 0}};
    std::unordered_map<Node, Node> parent{{u, -1}};
    std::vector<Node> queue{u};
    std::set<Edge> non_tree;
    std::vector<std::vector<Edge>> cycles;
    std::vector<std::set<Node>> cycle_tree_edges;  // tree edge identified by its child

    auto tree_path = [&](Node a, Node b, std::vector<Edge>& edges, std::set<Node>& children) {
        while (a != b) {
            if (dist[a] >= dist[b]) {
                edges.emplace_back(a, parent[a]);
                children.insert(a);
                a = parent[a];
            } else {
                edges.emplace_back(b, parent[b]);
                children.insert(b);
                b = parent[b];
            }
        }
    };

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Node v = queue[head];
        for (Node w : g.neighbors(v)) {
            auto it = dist.find(w);
            if (it == dist.end()) {
                if (dist[v] >= r) {
                    continue;
                }
                dist[w] = dist[v] + 1;
                parent[w] = v;
                if (g.degree(w) <= 2) {
                    return Anchor{Anchor::Kind::low_degree, w, -1, -1, {}};
                }
                queue.push_back(w);
                continue;
            }
            if (parent[v] == w || parent[w] == v) {
                continue;
            }
            const Edge e{std::min(v, w), std::max(v, w)};
            if (!non_tree.insert(e).second) {
                continue;
            }
            std::vector<Edge> cycle{e};
            std::set<Node> children;
            tree_path(v, w, cycle, children);
            for (std::size_t i = 0; i < cycles.size(); ++i) {
                const bool overlap = std::any_of(children.begin(), children.end(),
                                                 [&](Node x) { return cycle_tree_edges[i].count(x) > 0; });
                if (overlap) {
                    return theta_from_cycles(cycles[i], cycle);
                }
            }
            cycles.push_back(std::move(cycle));
            cycle_tree_edges.push_back(std::move(children));
        }
    }
    fail(ErrorKind::precondition, "no degree-2 node and no theta within the ball");
}

std::vector<Node> ruling_set(const Graph& g, int alpha, int beta) {
    require(alpha >= 1 && alpha - 1 <= beta, ErrorKind::precondition, "ruling set needs 1 <= alpha <= beta + 1");
    const int n = g.size();
    std::vector<Node> order(n);
    for (Node v = 0; v < n; ++v) {
        order[v] = v;
    }
    std::sort(order.begin(), order.end(), [&](Node a, Node b) { return g.id(a) < g.id(b); });
    constexpr int far = std::numeric_limits<int>::max();
    std::vector<int> dist(n, far);
    std::vector<Node> members;
    std::vector<std::pair<Node, int>> queue;
    for (Node v : order) {
        if (dist[v] < alpha) {
            continue;
        }
        members.push_back(v);
        dist[v] = 0;
        queue.assign(1, {v, 0});
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto [x, d] = queue[head];
            for (Node y : g.neighbors(x)) {
                if (d + 1 < dist[y] && d + 1 < alpha) {
                    dist[y] = d + 1;
                    queue.emplace_back(y, d + 1);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

int tree_radius(const Graph& g, const std::vector<Node>& nodes) {
    if (nodes.size() <= 1) {
        return 0;
    }
    std::unordered_map<Node, int> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        index[nodes[i]] = static_cast<int>(i);
    }
    auto farthest = [&](Node from) {
        std::vector<int> dist(nodes.size(), -1);
        std::vector<Node> queue{from};
        dist[index[from]] = 0;
        Node last = from;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Node x = queue[head];
            last = x;
            for (Node y : g.neighbors(x)) {
                auto it = index.find(y);
                if (it != index.end() && dist[it->second] < 0) {
                    dist[it->second] = dist[index[x]] + 1;
                    queue.push_back(y);
                }
            }
        }
        return std::make_pair(last, dist[index[last]]);
    };
    const auto [a, unused] = farthest(nodes.front());
    (void)unused;
    const auto [b, diameter] = farthest(a);
    (void)b;
    return (diameter + 1) / 2;
}

void extend_decomposition(const Graph& g, const std::vector<Anchor>& anchors, std::vector<int>& in_s) {
    require(static_cast<int>(in_s.size()) == g.size(), ErrorKind::length_mismatch, "one assignment per node");
    RollbackDsu dsu(g.size());
    for (auto [a, b] : g.edges()) {
        if (in_s[a] == 0 && in_s[b] == 0) {
            require(dsu.unite(a, b), ErrorKind::precondition, "F already contains a cycle");
        }
        require(!(in_s[a] == 1 && in_s[b] == 1), ErrorKind::precondition, "S is not independent");
    }
    for (const auto& anchor : anchors) {
        std::vector<Node> order;
        if (anchor.kind == Anchor::Kind::low_degree) {
            order.push_back(anchor.node);
        } else {
            order = {anchor.u, anchor.v};
            for (const auto& p : anchor.paths) {
                order.insert(order.end(), p.begin() + 1, p.end() - 1);
            }
        }
        for (Node x : order) {
            require(in_s[x] == -1, ErrorKind::precondition, "anchor node already assigned");
        }
        long budget = 1'000'000;
        // Depth-first over S/F choices; S is tried first except at the
        // second theta endpoint.
        auto place = [&](auto&& self, std::size_t idx) -> bool {
            if (idx == order.size()) {
                return true;
            }
            require(--budget > 0, ErrorKind::precondition, "anchor extension search exhausted");
            const Node x = order[idx];
            const bool f_first = anchor.kind == Anchor::Kind::theta && x == anchor.v;
            for (int attempt = 0; attempt < 2; ++attempt) {
                const bool to_s = (attempt == 0) != f_first;
                if (to_s) {
                    const bool free = std::none_of(g.neighbors(x).begin(), g.neighbors(x).end(),
                                                   [&](Node y) { return in_s[y] == 1; });
                    if (!free) {
                        continue;
                    }
                    in_s[x] = 1;
                    if (self(self, idx + 1)) {
                        return true;
                    }
                    in_s[x] = -1;
                } else {
                    const auto mark = dsu.mark();
                    bool acyclic = true;
                    for (Node y : g.neighbors(x)) {
                        if (in_s[y] == 0 && !dsu.unite(x, y)) {
                            acyclic = false;
                            break;
                        }
                    }
                    if (acyclic) {
                        in_s[x] = 0;
                        if (self(self, idx + 1)) {
                            return true;
                        }
                        in_s[x] = -1;
                    }
                    dsu.rollback(mark);
                }
            }
            return false;
        };
        require(place(place, 0), ErrorKind::precondition, "anchor admits no compatible partition");
    }
}

ForestDecomposition stable_forest_decomposition(const Graph& g) {
    require(g.max_degree() <= 3, ErrorKind::precondition, "forest decomposition needs a subcubic graph");
    const int n = g.size();
    ForestDecomposition out;
    if (n == 0) {
        return out;
    }
    const int lg = ceil_log2(n);
    const auto centers = ruling_set(g, 4 * lg, 8 * lg);

    // Anchors of the centers; an anchor touching an earlier one is dropped.
    std::vector<Anchor> anchors;
    std::vector<char> blocked(n, 0);
    for (Node x : centers) {
        Anchor a;
        for (int r = 2 * lg;; r *= 2) {
            try {
                a = find_anchor(g, x, r);
                break;
            } catch (const Error&) {
                require(r < n, ErrorKind::precondition, "component without an anchor");
                ++out.widenings;
            }
        }
        const auto nodes = a.nodes();
        if (std::any_of(nodes.begin(), nodes.end(), [&](Node v) { return blocked[v] != 0; })) {
            continue;
        }
        for (Node v : nodes) {
            blocked[v] = 1;
            for (Node w : g.neighbors(v)) {
                blocked[w] = 1;
            }
        }
        anchors.push_back(std::move(a));
    }
    out.anchors = static_cast<int>(anchors.size());

    std::vector<Node> sources;
    for (const auto& a : anchors) {
        const auto nodes = a.nodes();
        sources.insert(sources.end(), nodes.begin(), nodes.end());
    }
    const auto layer = bfs_distances(g, sources);
    out.layers = *std::max_element(layer.begin(), layer.end());
    require(std::all_of(layer.begin(), layer.end(), [](int d) { return d >= 0; }), ErrorKind::precondition,
            "node unreachable from every anchor");

    std::vector<std::vector<Node>> by_layer(out.layers + 1);
    for (Node v = 0; v < n; ++v) {
        by_layer[layer[v]].push_back(v);
    }
    // Top-down: a node next to S above it goes to F; the rest take an MIS of
    // their layer. Every F node then has at most one F neighbor in its own or
    // a higher layer, which keeps F acyclic with depth bounded by the layers.
    std::vector<int> in_s(n, -1);
    int layer_rounds = 0;
    std::vector<char> mask(n, 0);
    for (int i = out.layers; i >= 1; --i) {
        std::vector<Node> forced;
        for (Node v : by_layer[i]) {
            const bool next_to_s = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                               [&](Node w) { return layer[w] > i && in_s[w] == 1; });
            if (next_to_s) {
                forced.push_back(v);
            } else {
                mask[v] = 1;
            }
        }
        const auto mis = local_mis(g, mask);
        layer_rounds += mis.rounds + 1;
        for (Node v : by_layer[i]) {
            in_s[v] = 0;
            mask[v] = 0;
        }
        for (Node v : mis.nodes) {
            in_s[v] = 1;
        }
    }
    extend_decomposition(g, anchors, in_s);

    std::vector<char> f_mask(n, 0);
    for (Node v = 0; v < n; ++v) {
        (in_s[v] == 1 ? out.S : out.F).push_back(v);
        f_mask[v] = in_s[v] == 0;
    }
    out.components = components_of(g, f_mask);
    for (const auto& comp : out.components) {
        out.max_radius = std::max(out.max_radius, tree_radius(g, comp));
    }
    // Ball gathering, the ruling set under the bit-prefix cost model, layer
    // distances, per-layer MIS, and gathering each anchor.
    out.rounds = 2 * lg + 8 * lg * lg + out.layers + layer_rounds + 4 * lg;
    return out;
}

Recoloring recolor_subcubic_3plus1(const RecoloringInstance& inst) {
    validate(inst);
    require(inst.k == 3 && inst.c >= 1, ErrorKind::precondition, "subcubic recoloring needs k = 3 and c >= 1");
    require(!inst.lists, ErrorKind::precondition, "subcubic recoloring takes no lists");
    require(inst.g.max_degree() <= 3, ErrorKind::precondition, "graph is not subcubic");
    const auto dec = stable_forest_decomposition(inst.g);
    ScheduleBuilder builder(inst.s);
    builder.step_all(dec.S, 4);
    std::vector<std::pair<std::vector<Node>, Schedule>> parts;
    int tree_rounds = 0;
    for (const auto& comp : dec.components) {
        const auto sub = induced_subgraph(inst.g, comp);
        auto part = recolor_tree_plain(sub.graph, restrict_to(inst.s, comp), restrict_to(inst.t, comp));
        tree_rounds = std::max(tree_rounds, part.rounds);
        parts.emplace_back(comp, std::move(part.schedule));
    }
    builder.parallel(parts);
    builder.step_to(dec.S, inst.t);
    return {builder.finish(), dec.rounds + tree_rounds + 2};
}

} // namespace recolor
