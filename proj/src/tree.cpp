#include "recolor/tree.hpp"

#include <algorithm>
#include <map>

#include "recolor/basic.hpp"
#include "recolor/oracle.hpp"

namespace recolor {

LightLabeling light_labeling(const Graph& tree) {
    require(is_tree(tree), ErrorKind::precondition, "light labeling needs a tree");
    const int n = tree.size();
    LightLabeling out{std::vector<int>(n, 0), 0, 0};
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (Node v = 0; v < n; ++v) {
        deg[v] = tree.degree(v);
    }
    int remaining = n;
    std::vector<char> marked(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<Node> removed;
    while (remaining > 0) {
        ++out.h;
        removed.clear();
        for (Node v = 0; v < n; ++v) {
            if (alive[v] && deg[v] <= 1) {
                marked[v] = 1;
                removed.push_back(v);
            }
        }
        // Maximal runs of degree-2 nodes; runs of three or more go entirely.
        for (Node v = 0; v < n; ++v) {
            if (!alive[v] || deg[v] != 2 || seen[v]) {
                continue;
            }
            std::vector<Node> run{v};
            seen[v] = 1;
            for (std::size_t head = 0; head < run.size(); ++head) {
                for (Node u : tree.neighbors(run[head])) {
                    if (alive[u] && deg[u] == 2 && !seen[u]) {
                        seen[u] = 1;
                        run.push_back(u);
                    }
                }
            }
            if (run.size() >= 3) {
                for (Node u : run) {
                    marked[u] = 1;
                    removed.push_back(u);
                }
            }
        }
        for (Node v : removed) {
            out.labels[v] = out.h;
            alive[v] = 0;
            --remaining;
        }
        for (Node v : removed) {
            for (Node u : tree.neighbors(v)) {
                if (alive[u]) {
                    --deg[u];
                }
            }
        }
        std::fill(seen.begin(), seen.end(), 0);
    }
    // Each step needs the degrees of nodes up to two hops away.
    out.rounds = 2 * out.h;
    return out;
}

bool is_light(const Graph& g, const std::vector<int>& labels) {
    require(static_cast<int>(labels.size()) == g.size(), ErrorKind::length_mismatch, "one label per node");
    std::vector<char> has_higher(g.size(), 0);
    for (Node v = 0; v < g.size(); ++v) {
        if (labels[v] < 1) {
            return false;
        }
        int at_least = 0;
        int above = 0;
        for (Node u : g.neighbors(v)) {
            at_least += labels[u] >= labels[v];
            above += labels[u] > labels[v];
        }
        if (at_least > 2 || above > 1) {
            return false;
        }
        has_higher[v] = above > 0;
    }
    for (auto [u, v] : g.edges()) {
        if (labels[u] == labels[v] && has_higher[u] && has_higher[v]) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<std::vector<Node>> by_label(const LightLabeling& labeling) {
    std::vector<std::vector<Node>> buckets(labeling.h + 1);
    for (Node v = 0; v < static_cast<Node>(labeling.labels.size()); ++v) {
        buckets[labeling.labels[v]].push_back(v);
    }
    return buckets;
}

} // namespace

LocalColoring tree_3coloring(const Graph& tree, const LightLabeling& labeling) {
    require(is_light(tree, labeling.labels), ErrorKind::precondition, "labeling must be light");
    const int n = tree.size();
    // Same-label edges only: every node has at most two of them.
    std::vector<Edge> level_edges;
    for (auto [u, v] : tree.edges()) {
        if (labeling.labels[u] == labeling.labels[v]) {
            level_edges.emplace_back(u, v);
        }
    }
    Graph levels(n, level_edges);
    levels.set_ids({tree.ids().begin(), tree.ids().end()});
    const auto classes = deterministic_coloring(levels, std::vector<char>(n, 1));
    const int class_count = std::max(1, max_color(classes.colors));

    LocalColoring out{Coloring(n, 0), classes.rounds + class_count * labeling.h};
    const auto buckets = by_label(labeling);
    for (int i = labeling.h; i >= 1; --i) {
        for (Color q = 1; q <= class_count; ++q) {
            for (Node v : buckets[i]) {
                if (classes.colors[v] != q) {
                    continue;
                }
                bool used[4] = {false, false, false, false};
                for (Node u : tree.neighbors(v)) {
                    used[out.colors[u]] = true;
                }
                Color c = 1;
                while (c <= 3 && used[c]) {
                    ++c;
                }
                require(c <= 3, ErrorKind::precondition, "no free color; labeling is not light");
                out.colors[v] = c;
            }
        }
    }
    return out;
}

LocalColoring tree_3coloring(const Graph& tree) {
    const auto labeling = light_labeling(tree);
    auto out = tree_3coloring(tree, labeling);
    out.rounds += labeling.rounds;
    return out;
}

TreeDecomposition make_decomposition(const Graph& g, std::vector<Node> S, int rounds) {
    std::sort(S.begin(), S.end());
    require(is_independent(g, S), ErrorKind::precondition, "S must be independent");
    std::vector<char> rest(g.size(), 1);
    for (Node v : S) {
        rest[v] = 0;
    }
    auto components = components_of(g, rest);
    return {std::move(S), std::move(components), rounds};
}

TreeDecomposition decompose_small_components(const Graph& tree, const LightLabeling& labeling,
                                             const Coloring& x3) {
    require(is_light(tree, labeling.labels), ErrorKind::precondition, "labeling must be light");
    require(is_proper(tree, x3) && max_color(x3) <= 3, ErrorKind::precondition,
            "decomposition needs a proper 3-coloring");
    const auto& label = labeling.labels;
    std::vector<char> in_s(tree.size(), 0);
    const auto buckets = by_label(labeling);
    auto touches_s = [&](Node v) {
        for (Node u : tree.neighbors(v)) {
            if (in_s[u]) {
                return true;
            }
        }
        return false;
    };
    for (int i = labeling.h; i >= 1; --i) {
        std::vector<Node> joining;
        for (Node v : buckets[i]) {
            for (Node u : tree.neighbors(v)) {
                if (label[u] > i && !in_s[u]) {
                    joining.push_back(v);
                    break;
                }
            }
        }
        for (Node v : joining) {
            in_s[v] = 1;
        }
        for (Color j = 1; j <= 3; ++j) {
            joining.clear();
            for (Node v : buckets[i]) {
                if (x3[v] == j && !in_s[v] && !touches_s(v)) {
                    joining.push_back(v);
                }
            }
            for (Node v : joining) {
                in_s[v] = 1;
            }
        }
    }
    std::vector<Node> S;
    for (Node v = 0; v < tree.size(); ++v) {
        if (in_s[v]) {
            S.push_back(v);
        }
    }
    return make_decomposition(tree, std::move(S), 4 * labeling.h);
}

TreeDecomposition decompose_for_lists(const Graph& tree, const LightLabeling& labeling) {
    require(is_light(tree, labeling.labels), ErrorKind::precondition, "labeling must be light");
    const auto& label = labeling.labels;
    std::vector<char> in_r(tree.size(), 1);
    for (Node v = 0; v < tree.size(); ++v) {
        for (Node u : tree.neighbors(v)) {
            if (label[u] > label[v]) {
                in_r[v] = 0;
            }
        }
    }
    auto sparse = distance3_set(tree, in_r, true);
    return make_decomposition(tree, std::move(sparse.nodes), 1 + sparse.rounds);
}

Color same_color_wrt(const std::vector<Color>& list_u, const std::vector<Color>& list_w, Color color_v,
                     Color color_w) {
    for (Color c : list_u) {
        if (!std::binary_search(list_w.begin(), list_w.end(), c)) {
            return c;
        }
    }
    // L(u) is inside L(w) from here on.
    if (std::binary_search(list_u.begin(), list_u.end(), color_v)) {
        return color_v;
    }
    for (Color c : list_u) {
        if (c != color_w) {
            return c;
        }
    }
    fail(ErrorKind::precondition, "list of u has no color besides the color of w");
}

Node tree_center(const Graph& tree) {
    require(tree.size() >= 1, ErrorKind::size_too_small, "empty tree");
    const Node start[] = {0};
    auto dist = bfs_distances(tree, start);
    const Node a = static_cast<Node>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    const Node from_a[] = {a};
    auto dist_a = bfs_distances(tree, from_a);
    Node b = static_cast<Node>(std::max_element(dist_a.begin(), dist_a.end()) - dist_a.begin());
    // Walk back from b towards a to the middle of the diameter.
    const int steps = dist_a[b] / 2;
    Node v = b;
    for (int i = 0; i < steps; ++i) {
        for (Node u : tree.neighbors(v)) {
            if (dist_a[u] == dist_a[v] - 1) {
                v = u;
                break;
            }
        }
    }
    return v;
}

IdentificationForest build_identification(const Graph& tree, Node root) {
    const int n = tree.size();
    IdentificationForest f;
    f.root = root;
    f.parent.assign(n, -1);
    f.depth.assign(n, -1);
    f.phase.assign(n, 0);
    f.rep.assign(n, -1);
    f.witness.assign(n, -1);
    std::vector<Node> order{root};
    f.depth[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Node v = order[head];
        for (Node u : tree.neighbors(v)) {
            if (f.depth[u] < 0) {
                f.depth[u] = f.depth[v] + 1;
                f.parent[u] = v;
                order.push_back(u);
            }
        }
    }
    require(static_cast<int>(order.size()) == n, ErrorKind::precondition, "identification needs a tree");
    std::vector<int> live_children(n, 0);
    for (Node v = 0; v < n; ++v) {
        if (f.parent[v] >= 0) {
            ++live_children[f.parent[v]];
        }
    }
    std::vector<char> alive(n, 1);
    std::vector<Node> deep;  // alive nodes of depth >= 2
    for (Node v = 0; v < n; ++v) {
        if (f.depth[v] >= 2) {
            deep.push_back(v);
        }
    }
    while (!deep.empty()) {
        ++f.phases;
        std::vector<Node> leaves;
        std::vector<Node> keep;
        for (Node v : deep) {
            (live_children[v] == 0 ? leaves : keep).push_back(v);
        }
        for (Node u : leaves) {
            f.phase[u] = f.phases;
            f.witness[u] = f.parent[u];
            f.rep[u] = f.parent[f.parent[u]];
            alive[u] = 0;
            --live_children[f.parent[u]];
        }
        deep = std::move(keep);
    }
    std::vector<Node> children;
    for (Node u : tree.neighbors(root)) {
        children.push_back(u);
    }
    if (!children.empty()) {
        f.partner = children.front();
        if (children.size() > 1) {
            ++f.phases;
            for (std::size_t i = 1; i < children.size(); ++i) {
                const Node u = children[i];
                f.phase[u] = f.phases;
                f.witness[u] = root;
                f.rep[u] = f.partner;
            }
        }
    }
    return f;
}

namespace {

// Nodes removed in phases <= upto, ordered so that rep and witness come
// before the node itself.
std::vector<Node> removal_order_desc(const IdentificationForest& f, int upto) {
    std::vector<Node> nodes;
    for (Node v = 0; v < static_cast<Node>(f.phase.size()); ++v) {
        if (f.phase[v] >= 1 && f.phase[v] <= upto) {
            nodes.push_back(v);
        }
    }
    std::stable_sort(nodes.begin(), nodes.end(), [&](Node a, Node b) { return f.phase[a] > f.phase[b]; });
    return nodes;
}

// Coloring after phase j: survivors keep `base`, removed nodes follow their
// representatives.
Coloring canonical_after_phase(const IdentificationForest& f, const ListAssignment& lists, const Coloring& base,
                               int j) {
    Coloring x = base;
    for (Node u : removal_order_desc(f, j)) {
        x[u] = same_color_wrt(lists[u], lists[f.witness[u]], x[f.rep[u]], x[f.witness[u]]);
    }
    return x;
}

// Complete fallback: top-down, every node dodges right before its parent
// takes its color and settles right after the parent's last move. Moves are
// keyed by sequences compared lexicographically with zero padding; a node
// at depth d always gets keys of length d + 1.
using Key = std::vector<int>;

bool key_less(const Key& a, const Key& b) {
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        const int x = i < a.size() ? a[i] : 0;
        const int y = i < b.size() ? b[i] : 0;
        if (x != y) {
            return x < y;
        }
    }
    return false;
}

void dodge_transition(ScheduleBuilder& builder, const Graph& tree, Node root, const Coloring& target,
                      const ListAssignment& lists) {
    const int n = tree.size();
    const Coloring start = builder.current();
    std::vector<std::vector<std::pair<Key, Color>>> moves(n);
    std::vector<Key> anchor(n);
    std::vector<Node> order{root};
    std::vector<Node> parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Node v = order[head];
        for (Node u : tree.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                order.push_back(u);
            }
        }
    }
    for (Node u : order) {
        const Node p = parent[u];
        Color c = start[u];
        if (p < 0) {
            if (c != target[u]) {
                moves[u].push_back({Key{0}, target[u]});
            }
            anchor[u] = Key{0};
            continue;
        }
        Color parent_color = start[p];
        for (const auto& [key, color] : moves[p]) {
            if (color == c) {
                Color dodge = -1;
                for (Color d : lists[u]) {
                    if (d != parent_color && d != color && (dodge < 0 || d == target[u])) {
                        dodge = d;
                    }
                }
                require(dodge > 0, ErrorKind::precondition, "list too small to dodge");
                Key k = key;
                k.push_back(-1);
                moves[u].push_back({k, dodge});
                c = dodge;
            }
            parent_color = color;
        }
        Key last = anchor[p];
        last.push_back(1);
        if (c != target[u]) {
            moves[u].push_back({last, target[u]});
        }
        anchor[u] = moves[u].empty() ? last : moves[u].back().first;
        if (!moves[u].empty() && key_less(moves[u].back().first, last)) {
            anchor[u] = last;
        }
    }
    std::vector<std::tuple<Key, Node, Color>> all;
    for (Node v = 0; v < n; ++v) {
        for (const auto& [key, color] : moves[v]) {
            all.emplace_back(key, v, color);
        }
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const auto& a, const auto& b) { return key_less(std::get<0>(a), std::get<0>(b)); });
    std::size_t i = 0;
    while (i < all.size()) {
        std::vector<std::pair<Node, Color>> step;
        std::size_t j = i;
        while (j < all.size() && !key_less(std::get<0>(all[i]), std::get<0>(all[j]))) {
            step.emplace_back(std::get<1>(all[j]), std::get<2>(all[j]));
            ++j;
        }
        builder.step(step);
        i = j;
    }
}

// Moves the builder's coloring to `target`: each step moves an independent
// set of nodes whose target color no neighbor holds, shallow nodes first.
// Falls back to dodge_transition when every remaining node is blocked.
void transition(ScheduleBuilder& builder, const Graph& tree, const IdentificationForest& f, const Coloring& target,
                const ListAssignment& lists) {
    std::vector<Node> pending;
    for (Node v = 0; v < tree.size(); ++v) {
        if (builder.current()[v] != target[v]) {
            pending.push_back(v);
        }
    }
    std::stable_sort(pending.begin(), pending.end(), [&](Node a, Node b) { return f.depth[a] < f.depth[b]; });
    std::vector<char> chosen(tree.size(), 0);
    while (!pending.empty()) {
        const Coloring& cur = builder.current();
        std::vector<std::pair<Node, Color>> step;
        for (Node v : pending) {
            bool ok = true;
            for (Node u : tree.neighbors(v)) {
                if (cur[u] == target[v] || chosen[u]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen[v] = 1;
                step.emplace_back(v, target[v]);
            }
        }
        if (step.empty()) {
            dodge_transition(builder, tree, f.root, target, lists);
            return;
        }
        for (auto [v, c] : step) {
            chosen[v] = 0;
        }
        builder.step(step);
        std::erase_if(pending, [&](Node v) { return builder.current()[v] == target[v]; });
    }
}

void check_identified(const IdentificationForest& f, const ListAssignment& lists, const Coloring& x, int upto) {
    for (Node u = 0; u < static_cast<Node>(x.size()); ++u) {
        if (f.phase[u] >= 1 && f.phase[u] <= upto) {
            require(x[u] == same_color_wrt(lists[u], lists[f.witness[u]], x[f.rep[u]], x[f.witness[u]]),
                    ErrorKind::precondition, "identified node lost track of its representative");
        }
    }
}

// Single-move path between two colorings of the edge (a, b).
std::vector<std::pair<Color, Color>> edge_path(const std::vector<Color>& la, const std::vector<Color>& lb,
                                                std::pair<Color, Color> from, std::pair<Color, Color> to) {
    std::map<std::pair<Color, Color>, std::pair<Color, Color>> prev;
    std::vector<std::pair<Color, Color>> queue{from};
    prev[from] = from;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [a, b] = queue[head];
        if (std::make_pair(a, b) == to) {
            break;
        }
        auto visit = [&](std::pair<Color, Color> next) {
            if (next.first != next.second && !prev.count(next)) {
                prev[next] = {a, b};
                queue.push_back(next);
            }
        };
        for (Color c : la) {
            visit({c, b});
        }
        for (Color c : lb) {
            visit({a, c});
        }
    }
    require(prev.count(to) > 0, ErrorKind::infeasible, "edge colorings are not connected");
    std::vector<std::pair<Color, Color>> path;
    for (auto cur = to; cur != from; cur = prev[cur]) {
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// start -> coloring forced by the edge coloring `edge`.
Schedule contract_and_expand(const Graph& tree, const IdentificationForest& f, const ListAssignment& lists,
                             const Coloring& start, std::pair<Color, Color> edge) {
    ScheduleBuilder builder(start);
    for (int j = 1; j <= f.phases; ++j) {
        const auto target = canonical_after_phase(f, lists, builder.current(), j);
        transition(builder, tree, f, target, lists);
        check_identified(f, lists, builder.current(), j);
    }
    if (f.partner >= 0) {
        const auto from = std::make_pair(builder.current()[f.root], builder.current()[f.partner]);
        for (auto [a, b] : edge_path(lists[f.root], lists[f.partner], from, edge)) {
            const auto target = expand_edge_coloring(f, lists, a, b);
            transition(builder, tree, f, target, lists);
            check_identified(f, lists, builder.current(), f.phases);
        }
    } else if (builder.current()[f.root] != edge.first) {
        const std::pair<Node, Color> move[] = {{f.root, edge.first}};
        builder.step(move);
    }
    return builder.finish();
}

} // namespace

Coloring expand_edge_coloring(const IdentificationForest& f, const ListAssignment& lists, Color color_root,
                              Color color_partner) {
    Coloring base(f.phase.size(), 0);
    base[f.root] = color_root;
    if (f.partner >= 0) {
        base[f.partner] = color_partner;
    }
    return canonical_after_phase(f, lists, base, f.phases);
}

Recoloring recolor_tree_list(const Graph& tree, const Coloring& alpha, const Coloring& beta,
                             const ListAssignment& lists, std::optional<Node> root) {
    require(is_tree(tree), ErrorKind::precondition, "list recoloring needs a tree");
    require(static_cast<int>(lists.size()) == tree.size(), ErrorKind::length_mismatch, "one list per node");
    for (const auto& list : lists) {
        require(list.size() >= 3, ErrorKind::precondition, "tree list recoloring needs lists of size >= 3");
    }
    require(is_proper_list(tree, alpha, lists) && is_proper_list(tree, beta, lists), ErrorKind::precondition,
            "alpha and beta must be proper list colorings");
    const Node r = root.value_or(tree_center(tree));
    require(r >= 0 && r < tree.size(), ErrorKind::precondition, "root out of range");
    const auto f = build_identification(tree, r);
    const int ecc = *std::max_element(f.depth.begin(), f.depth.end());
    // The common meeting point: alpha's colors on the contracted edge.
    const std::pair<Color, Color> edge{alpha[r], f.partner >= 0 ? alpha[f.partner] : alpha[r]};
    const auto forward = contract_and_expand(tree, f, lists, alpha, edge);
    const auto backward = contract_and_expand(tree, f, lists, beta, edge);
    return {concat(forward, reverse(backward)), 2 * ecc + 1};
}

Recoloring recolor_tree_plain(const Graph& tree, const Coloring& alpha, const Coloring& beta,
                              std::optional<Node> root) {
    const ListAssignment lists(tree.size(), std::vector<Color>{1, 2, 3});
    return recolor_tree_list(tree, alpha, beta, lists, root);
}

Recoloring recolor_tree_3plus1(const RecoloringInstance& inst) {
    validate(inst);
    require(inst.c >= 1, ErrorKind::precondition, "tree recoloring needs c >= 1");
    const Graph& tree = inst.g;
    require(is_tree(tree), ErrorKind::precondition, "tree recoloring needs a tree");
    if (inst.k <= 2) {
        // Two colors leave no room inside small components; the input
        // coloring is already a bipartition.
        std::vector<Node> v1;
        for (Node v = 0; v < tree.size(); ++v) {
            if (inst.s[v] == 1) {
                v1.push_back(v);
            }
        }
        return recolor_bipartite(inst, v1);
    }
    const auto labeling = light_labeling(tree);
    const auto x3 = tree_3coloring(tree, labeling);
    const auto dec = decompose_small_components(tree, labeling, x3.colors);
    ScheduleBuilder builder(inst.s);
    builder.step_all(dec.S, inst.k + 1);
    std::vector<char> rest(tree.size(), 1);
    for (Node v : dec.S) {
        rest[v] = 0;
    }
    std::vector<Color> palette;
    for (Color c = 1; c <= inst.k; ++c) {
        palette.push_back(c);
    }
    ExactSolver solver(palette);
    recolor_components(builder, tree, rest, inst.t, solver);
    builder.step_to(dec.S, inst.t);
    return {builder.finish(), labeling.rounds + x3.rounds + dec.rounds + 1};
}

Recoloring recolor_tree_list4(const Graph& tree, const Coloring& alpha, const Coloring& beta,
                              const ListAssignment& lists) {
    require(is_tree(tree), ErrorKind::precondition, "list recoloring needs a tree");
    require(static_cast<int>(lists.size()) == tree.size(), ErrorKind::length_mismatch, "one list per node");
    for (const auto& list : lists) {
        require(list.size() >= 4, ErrorKind::precondition, "tree 4-list recoloring needs lists of size >= 4");
    }
    require(is_proper_list(tree, alpha, lists) && is_proper_list(tree, beta, lists), ErrorKind::precondition,
            "alpha and beta must be proper list colorings");
    const int n = tree.size();
    const auto labeling = light_labeling(tree);
    const auto dec = decompose_for_lists(tree, labeling);
    std::vector<char> in_s(n, 0);
    for (Node v : dec.S) {
        in_s[v] = 1;
    }
    std::vector<Node> s_neighbor(n, -1);
    for (Node v = 0; v < n; ++v) {
        for (Node u : tree.neighbors(v)) {
            if (in_s[u]) {
                require(s_neighbor[v] < 0, ErrorKind::precondition, "node with two neighbors in S");
                s_neighbor[v] = u;
            }
        }
    }

    // gamma: greedy top-down in each component, avoiding the parent and both
    // colors of the adjacent S node.
    Coloring gamma = alpha;
    int radius = 0;
    for (const auto& comp : dec.components) {
        std::vector<Node> order{comp.front()};
        std::vector<int> dist(n, -1);
        dist[comp.front()] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            const Node v = order[head];
            radius = std::max(radius, dist[v]);
            for (Node u : tree.neighbors(v)) {
                if (!in_s[u] && dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    order.push_back(u);
                }
            }
        }
        for (Node v : order) {
            std::vector<Color> forbidden;
            for (Node u : tree.neighbors(v)) {
                if (!in_s[u] && dist[u] < dist[v]) {
                    forbidden.push_back(gamma[u]);
                }
            }
            if (s_neighbor[v] >= 0) {
                forbidden.push_back(alpha[s_neighbor[v]]);
                forbidden.push_back(beta[s_neighbor[v]]);
            }
            Color pick = -1;
            for (Color c : lists[v]) {
                if (std::find(forbidden.begin(), forbidden.end(), c) == forbidden.end()) {
                    pick = c;
                    break;
                }
            }
            require(pick > 0, ErrorKind::precondition, "no color left for gamma");
            gamma[v] = pick;
        }
    }

    auto phase = [&](ScheduleBuilder& builder, const Coloring& from, const Coloring& to, const Coloring& s_colors) {
        std::vector<std::pair<std::vector<Node>, Schedule>> parts;
        int rounds = 0;
        for (const auto& comp : dec.components) {
            const auto sub = induced_subgraph(tree, comp);
            ListAssignment local_lists;
            for (Node v : comp) {
                auto list = lists[v];
                if (s_neighbor[v] >= 0) {
                    std::erase(list, s_colors[s_neighbor[v]]);
                }
                local_lists.push_back(std::move(list));
            }
            auto part = recolor_tree_list(sub.graph, restrict_to(from, comp), restrict_to(to, comp), local_lists);
            rounds = std::max(rounds, part.rounds);
            parts.emplace_back(comp, std::move(part.schedule));
        }
        builder.parallel(parts);
        return rounds;
    };

    ScheduleBuilder builder(alpha);
    const int first = phase(builder, alpha, gamma, alpha);
    builder.step_to(dec.S, beta);
    const int second = phase(builder, gamma, beta, beta);
    return {builder.finish(), labeling.rounds + dec.rounds + radius + 1 + std::max(first, second)};
}

} // namespace recolor
