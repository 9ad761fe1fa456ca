#include "recolor/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace recolor {

namespace {

constexpr std::uint64_t bit_array_limit = std::uint64_t{1} << 26;

// Visited set: flat bits for small spaces, hashing above that.
class Visited {
public:
    Visited(std::uint64_t space, std::uint64_t cap) : cap_(cap) {
        if (space <= bit_array_limit) {
            bits_.assign((space + 63) / 64, 0);
            dense_ = true;
        }
    }

    // Returns true when the state was new.
    bool insert(std::uint64_t state) {
        if (dense_) {
            auto& word = bits_[state / 64];
            const std::uint64_t mask = std::uint64_t{1} << (state % 64);
            if (word & mask) {
                return false;
            }
            word |= mask;
            ++count_;
            return true;
        }
        if (!sparse_.insert(state).second) {
            return false;
        }
        ++count_;
        require(count_ <= cap_, ErrorKind::size_guard,
                "oracle exploration exceeded " + std::to_string(cap_) + " states");
        return true;
    }

    std::uint64_t count() const { return count_; }

private:
    bool dense_ = false;
    std::vector<std::uint64_t> bits_;
    std::unordered_set<std::uint64_t> sparse_;
    std::uint64_t count_ = 0;
    std::uint64_t cap_;
};

} // namespace

SearchResult search(const Graph& g, const Coloring& s, const Coloring& t,
                    const std::vector<std::vector<Color>>& allowed, const OracleOptions& options) {
    const int n = g.size();
    require(static_cast<int>(s.size()) == n && static_cast<int>(t.size()) == n &&
                static_cast<int>(allowed.size()) == n,
            ErrorKind::length_mismatch, "oracle inputs must match the graph");
    require(is_proper(g, s), ErrorKind::precondition, "oracle start coloring must be proper");
    Color top = 1;
    for (const auto& list : allowed) {
        require(!list.empty(), ErrorKind::precondition, "empty color list");
        top = std::max(top, list.back());
    }
    for (Node v = 0; v < n; ++v) {
        require(std::binary_search(allowed[v].begin(), allowed[v].end(), s[v]), ErrorKind::precondition,
                "start coloring uses a color outside the palette");
    }

    // Mixed-radix encoding with radix `top`; digit v is x(v) - 1.
    const auto radix = static_cast<std::uint64_t>(top);
    std::vector<std::uint64_t> place(n + 1, 1);
    for (int v = 0; v < n; ++v) {
        require(place[v] <= std::numeric_limits<std::uint64_t>::max() / radix, ErrorKind::size_guard,
                "state encoding does not fit in 64 bits");
        place[v + 1] = place[v] * radix;
    }
    auto encode = [&](const Coloring& x) {
        std::uint64_t code = 0;
        for (int v = 0; v < n; ++v) {
            code += static_cast<std::uint64_t>(x[v] - 1) * place[v];
        }
        return code;
    };
    auto decode = [&](std::uint64_t code, Coloring& x) {
        for (int v = 0; v < n; ++v) {
            x[v] = static_cast<Color>(code % radix) + 1;
            code /= radix;
        }
    };

    SearchResult result;
    const std::uint64_t start = encode(s);
    const std::uint64_t goal = encode(t);
    Visited visited(place[n], options.max_states);
    visited.insert(start);
    std::vector<std::vector<std::uint64_t>> levels{{start}};
    bool found = start == goal;
    Coloring x(n);
    while (!found && !levels.back().empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t code : levels.back()) {
            decode(code, x);
            for (Node v = 0; v < n && !found; ++v) {
                for (Color col : allowed[v]) {
                    if (col == x[v]) {
                        continue;
                    }
                    bool clash = false;
                    for (Node u : g.neighbors(v)) {
                        clash = clash || x[u] == col;
                    }
                    if (clash) {
                        continue;
                    }
                    const std::uint64_t moved = code + static_cast<std::uint64_t>(col) * place[v] -
                                                static_cast<std::uint64_t>(x[v]) * place[v];
                    if (visited.insert(moved)) {
                        next.push_back(moved);
                        if (moved == goal) {
                            found = true;
                            break;
                        }
                    }
                }
            }
            if (found) {
                break;
            }
        }
        levels.push_back(std::move(next));
    }
    result.states_explored = visited.count();
    result.reachable = found;
    if (!found) {
        return result;
    }

    // Walk back through the levels: any state one move away in the previous
    // level is a valid predecessor since the move relation is symmetric.
    std::uint64_t current = goal;
    Coloring cur(n);
    Coloring prev(n);
    for (std::size_t level = levels.size() - 1; level > 0; --level) {
        decode(current, cur);
        for (std::uint64_t candidate : levels[level - 1]) {
            decode(candidate, prev);
            int diff = 0;
            Node changed = -1;
            for (Node v = 0; v < n && diff <= 1; ++v) {
                if (prev[v] != cur[v]) {
                    ++diff;
                    changed = v;
                }
            }
            if (diff == 1) {
                result.moves.push_back({changed, prev[changed], cur[changed]});
                current = candidate;
                break;
            }
        }
    }
    std::reverse(result.moves.begin(), result.moves.end());
    return result;
}

std::vector<std::vector<Color>> allowed_colors(const RecoloringInstance& inst) {
    std::vector<std::vector<Color>> allowed(inst.g.size());
    for (Node v = 0; v < inst.g.size(); ++v) {
        if (inst.lists) {
            allowed[v] = (*inst.lists)[v];
        } else {
            for (Color col = 1; col <= inst.k; ++col) {
                allowed[v].push_back(col);
            }
        }
        for (Color col = inst.k + 1; col <= inst.k + inst.c; ++col) {
            allowed[v].push_back(col);
        }
    }
    return allowed;
}

SearchResult search(const RecoloringInstance& inst, const OracleOptions& options) {
    return search(inst.g, inst.s, inst.t, allowed_colors(inst), options);
}

bool reachable(const RecoloringInstance& inst, const OracleOptions& options) {
    return search(inst, options).reachable;
}

std::optional<std::vector<Move>> shortest(const RecoloringInstance& inst, const OracleOptions& options) {
    auto result = search(inst, options);
    if (!result.reachable) {
        return std::nullopt;
    }
    return std::move(result.moves);
}

bool is_frozen(const Graph& g, const Coloring& s, int k, int c) {
    require(is_proper(g, s), ErrorKind::precondition, "frozenness is defined for proper colorings");
    for (Node v = 0; v < g.size(); ++v) {
        for (Color col = 1; col <= k + c; ++col) {
            if (col == s[v]) {
                continue;
            }
            bool clash = false;
            for (Node u : g.neighbors(v)) {
                clash = clash || s[u] == col;
            }
            if (!clash) {
                return false;
            }
        }
    }
    return true;
}

Schedule schedule_from_moves(const Coloring& s, std::span<const Move> moves) {
    std::vector<Coloring> trajectory{s};
    for (const auto& m : moves) {
        auto x = trajectory.back();
        require(m.v >= 0 && m.v < static_cast<int>(x.size()) && x[m.v] == m.from, ErrorKind::precondition,
                "move does not start from the current color");
        x[m.v] = m.to;
        trajectory.push_back(std::move(x));
    }
    return Schedule::from_trajectory(trajectory);
}

std::vector<Move> moves_from_schedule(const RecoloringInstance& inst, const Schedule& sch) {
    require(verify_strong(inst, sch).ok, ErrorKind::precondition, "only feasible schedules serialize");
    std::vector<Move> moves;
    for (int i = 1; i <= sch.length(); ++i) {
        for (Node v : sch.changes(i)) {
            moves.push_back({v, sch.at(v, i - 1), sch.at(v, i)});
        }
    }
    return moves;
}

} // namespace recolor

namespace recolor {

ExactSolver::ExactSolver(std::vector<Color> palette, OracleOptions options)
    : palette_(std::move(palette)), options_(options) {
    std::sort(palette_.begin(), palette_.end());
}

const Schedule& ExactSolver::solve(const Graph& g, const Coloring& s, const Coloring& t) {
    std::vector<int> key{g.size()};
    for (auto [u, v] : g.edges()) {
        key.push_back(u);
        key.push_back(v);
    }
    key.push_back(-1);
    key.insert(key.end(), s.begin(), s.end());
    key.insert(key.end(), t.begin(), t.end());
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    const std::vector<std::vector<Color>> allowed(g.size(), palette_);
    const auto result = search(g, s, t, allowed, options_);
    require(result.reachable, ErrorKind::infeasible, "component cannot be recolored within the palette");
    return memo_.emplace(std::move(key), schedule_from_moves(s, result.moves)).first->second;
}

void recolor_components(ScheduleBuilder& builder, const Graph& g, const std::vector<char>& mask,
                        const Coloring& target, ExactSolver& solver) {
    std::vector<std::pair<std::vector<Node>, Schedule>> parts;
    for (const auto& comp : components_of(g, mask)) {
        const auto sub = induced_subgraph(g, comp);
        const auto& sch = solver.solve(sub.graph, restrict_to(builder.current(), comp), restrict_to(target, comp));
        parts.emplace_back(comp, sch);
    }
    builder.parallel(parts);
}

} // namespace recolor
