#include "recolor/schedule.hpp"

#include <algorithm>
#include <string>

namespace recolor {

Schedule::Schedule(std::vector<std::vector<Color>> per_node) : per_node_(std::move(per_node)) {
    for (const auto& seq : per_node_) {
        require(!seq.empty(), ErrorKind::format, "schedule sequences must be non-empty");
    }
}

Schedule Schedule::constant(const Coloring& x) {
    std::vector<std::vector<Color>> per_node;
    per_node.reserve(x.size());
    for (Color c : x) {
        per_node.push_back({c});
    }
    return Schedule(std::move(per_node));
}

Schedule Schedule::from_trajectory(const std::vector<Coloring>& trajectory) {
    require(!trajectory.empty(), ErrorKind::format, "trajectory must contain x_0");
    const std::size_t n = trajectory.front().size();
    std::vector<std::vector<Color>> per_node(n);
    for (const auto& x : trajectory) {
        require(x.size() == n, ErrorKind::length_mismatch, "trajectory colorings differ in length");
        for (std::size_t v = 0; v < n; ++v) {
            per_node[v].push_back(x[v]);
        }
    }
    return Schedule(std::move(per_node));
}

int Schedule::length() const noexcept {
    std::size_t best = 1;
    for (const auto& seq : per_node_) {
        best = std::max(best, seq.size());
    }
    return static_cast<int>(best) - 1;
}

Color Schedule::at(Node v, int i) const {
    const auto& seq = per_node_[v];
    return seq[std::min<std::size_t>(static_cast<std::size_t>(i), seq.size() - 1)];
}

Coloring Schedule::coloring_at(int i) const {
    Coloring x(per_node_.size());
    for (Node v = 0; v < size(); ++v) {
        x[v] = at(v, i);
    }
    return x;
}

std::vector<Node> Schedule::changes(int i) const {
    std::vector<Node> out;
    for (Node v = 0; v < size(); ++v) {
        if (at(v, i - 1) != at(v, i)) {
            out.push_back(v);
        }
    }
    return out;
}

Schedule Schedule::padded() const {
    const int len = length();
    auto per_node = per_node_;
    for (auto& seq : per_node) {
        seq.resize(len + 1, seq.back());
    }
    return Schedule(std::move(per_node));
}

bool operator==(const Schedule& a, const Schedule& b) {
    if (a.size() != b.size() || a.length() != b.length()) {
        return false;
    }
    return a.padded().per_node_ == b.padded().per_node_;
}

ScheduleBuilder::ScheduleBuilder(Coloring start) : current_(std::move(start)), per_node_(current_.size()) {
    for (std::size_t v = 0; v < current_.size(); ++v) {
        per_node_[v].push_back(current_[v]);
    }
}

void ScheduleBuilder::set(Node v, Color c, int at_time) {
    auto& seq = per_node_[v];
    while (static_cast<int>(seq.size()) < at_time) {
        seq.push_back(seq.back());
    }
    if (static_cast<int>(seq.size()) == at_time + 1) {
        seq.back() = c;
    } else {
        seq.push_back(c);
    }
    current_[v] = c;
}

void ScheduleBuilder::step(std::span<const std::pair<Node, Color>> changes) {
    bool any = false;
    for (auto [v, c] : changes) {
        any = any || current_[v] != c;
    }
    if (!any) {
        return;
    }
    ++time_;
    for (auto [v, c] : changes) {
        if (current_[v] != c) {
            set(v, c, time_);
        }
    }
}

void ScheduleBuilder::step_all(std::span<const Node> nodes, Color color) {
    std::vector<std::pair<Node, Color>> changes;
    changes.reserve(nodes.size());
    for (Node v : nodes) {
        changes.emplace_back(v, color);
    }
    step(changes);
}

void ScheduleBuilder::step_to(std::span<const Node> nodes, const Coloring& target) {
    std::vector<std::pair<Node, Color>> changes;
    changes.reserve(nodes.size());
    for (Node v : nodes) {
        changes.emplace_back(v, target[v]);
    }
    step(changes);
}

void ScheduleBuilder::parallel(std::span<const std::pair<std::vector<Node>, Schedule>> parts) {
    const int base = time_;
    int longest = 0;
    for (const auto& [to_global, sch] : parts) {
        require(static_cast<int>(to_global.size()) == sch.size(), ErrorKind::length_mismatch,
                "sub-schedule size does not match its node map");
        for (Node i = 0; i < sch.size(); ++i) {
            require(current_[to_global[i]] == sch.at(i, 0), ErrorKind::length_mismatch,
                    "sub-schedule does not start from the current coloring");
        }
        longest = std::max(longest, sch.length());
    }
    for (const auto& [to_global, sch] : parts) {
        for (Node i = 0; i < sch.size(); ++i) {
            const auto& seq = sch.sequence(i);
            for (std::size_t j = 1; j < seq.size(); ++j) {
                if (seq[j] != seq[j - 1]) {
                    set(to_global[i], seq[j], base + static_cast<int>(j));
                }
            }
        }
    }
    time_ = base + longest;
}

void ScheduleBuilder::run(std::span<const Node> to_global, const Schedule& schedule) {
    const std::pair<std::vector<Node>, Schedule> part{{to_global.begin(), to_global.end()}, schedule};
    parallel(std::span(&part, 1));
}

void ScheduleBuilder::run(const Schedule& schedule) {
    std::vector<Node> all(current_.size());
    for (std::size_t v = 0; v < all.size(); ++v) {
        all[v] = static_cast<Node>(v);
    }
    run(all, schedule);
}

Schedule ScheduleBuilder::finish() const {
    auto per_node = per_node_;
    for (auto& seq : per_node) {
        seq.resize(time_ + 1, seq.back());
    }
    return Schedule(std::move(per_node));
}

void validate(const RecoloringInstance& inst) {
    const auto n = static_cast<std::size_t>(inst.g.size());
    require(inst.s.size() == n && inst.t.size() == n, ErrorKind::length_mismatch,
            "s and t must have one color per node");
    require(inst.k >= 1 && inst.c >= 0, ErrorKind::precondition, "need k >= 1 and c >= 0");
    for (const auto* x : {&inst.s, &inst.t}) {
        for (Color col : *x) {
            require(col >= 1 && col <= inst.k, ErrorKind::precondition, "input colors must lie in [k]");
        }
        require(is_proper(inst.g, *x), ErrorKind::precondition, "input colorings must be proper");
    }
    if (inst.lists) {
        require(inst.lists->size() == n, ErrorKind::length_mismatch, "one list per node");
        require(is_proper_list(inst.g, inst.s, *inst.lists) && is_proper_list(inst.g, inst.t, *inst.lists),
                ErrorKind::precondition, "input colorings must respect the lists");
    }
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::endpoint_s: return "endpoint-s";
    case ViolationKind::endpoint_t: return "endpoint-t";
    case ViolationKind::improper: return "improper";
    case ViolationKind::adjacent_change: return "adjacent-change";
    case ViolationKind::palette: return "palette";
    }
    return "unknown";
}

namespace {

VerifyReport failure(int step, ViolationKind kind, Node u, Node v = -1) {
    return {false, Violation{step, kind, u, v}};
}

bool in_palette(const RecoloringInstance& inst, Node v, Color col) {
    if (col < 1 || col > inst.k + inst.c) {
        return false;
    }
    if (inst.lists && col <= inst.k) {
        const auto& list = (*inst.lists)[v];
        return std::binary_search(list.begin(), list.end(), col);
    }
    return true;
}

VerifyReport verify(const RecoloringInstance& inst, const Schedule& sch, bool strong) {
    const Graph& g = inst.g;
    require(sch.size() == g.size() && static_cast<int>(inst.s.size()) == g.size() &&
                static_cast<int>(inst.t.size()) == g.size(),
            ErrorKind::length_mismatch, "schedule size does not match graph");
    const int len = sch.length();
    Coloring prev;
    for (int i = 0; i <= len; ++i) {
        Coloring x = sch.coloring_at(i);
        if (i == 0) {
            for (Node v = 0; v < g.size(); ++v) {
                if (x[v] != inst.s[v]) {
                    return failure(0, ViolationKind::endpoint_s, v);
                }
            }
        }
        for (Node v = 0; v < g.size(); ++v) {
            if (!in_palette(inst, v, x[v])) {
                return failure(i, ViolationKind::palette, v);
            }
        }
        for (Node u = 0; u < g.size(); ++u) {
            for (Node v : g.neighbors(u)) {
                if (u < v && x[u] == x[v]) {
                    return failure(i, ViolationKind::improper, u, v);
                }
            }
        }
        if (i > 0) {
            for (Node u = 0; u < g.size(); ++u) {
                if (prev[u] == x[u]) {
                    continue;
                }
                for (Node v : g.neighbors(u)) {
                    if (u >= v || prev[v] == x[v]) {
                        continue;
                    }
                    const bool disjoint = prev[u] != prev[v] && prev[u] != x[v] && x[u] != prev[v] && x[u] != x[v];
                    if (strong || !disjoint) {
                        return failure(i, ViolationKind::adjacent_change, u, v);
                    }
                }
            }
        }
        if (i == len) {
            for (Node v = 0; v < g.size(); ++v) {
                if (x[v] != inst.t[v]) {
                    return failure(len, ViolationKind::endpoint_t, v);
                }
            }
        }
        prev = std::move(x);
    }
    return {};
}

} // namespace

VerifyReport verify_strong(const RecoloringInstance& inst, const Schedule& sch) {
    return verify(inst, sch, true);
}

VerifyReport verify_weak(const RecoloringInstance& inst, const Schedule& sch) {
    return verify(inst, sch, false);
}

Schedule weak_to_strong(const RecoloringInstance& inst, const Schedule& sch) {
    const auto report = verify_weak(inst, sch);
    require(report.ok, ErrorKind::precondition, "input schedule is not weakly feasible");
    ScheduleBuilder builder(inst.s);
    for (int i = 1; i <= sch.length(); ++i) {
        const auto changed = sch.changes(i);
        for (Color j = 1; j <= inst.k; ++j) {
            std::vector<std::pair<Node, Color>> moves;
            for (Node v : changed) {
                if (inst.s[v] == j) {
                    moves.emplace_back(v, sch.at(v, i));
                }
            }
            builder.step(moves);
        }
    }
    return builder.finish();
}

Schedule concat(const Schedule& a, const Schedule& b) {
    require(a.size() == b.size(), ErrorKind::length_mismatch, "schedules cover different node counts");
    require(a.final() == b.initial(), ErrorKind::length_mismatch,
            "final coloring of the first schedule differs from the start of the second");
    const int len_a = a.length();
    std::vector<std::vector<Color>> per_node(a.size());
    for (Node v = 0; v < a.size(); ++v) {
        auto& seq = per_node[v];
        for (int i = 0; i <= len_a; ++i) {
            seq.push_back(a.at(v, i));
        }
        const auto& tail = b.sequence(v);
        seq.insert(seq.end(), tail.begin() + 1, tail.end());
    }
    return Schedule(std::move(per_node));
}

Schedule reverse(const Schedule& sch) {
    const int len = sch.length();
    std::vector<std::vector<Color>> per_node(sch.size());
    for (Node v = 0; v < sch.size(); ++v) {
        for (int i = len; i >= 0; --i) {
            per_node[v].push_back(sch.at(v, i));
        }
    }
    return Schedule(std::move(per_node));
}

Schedule reverse(const RecoloringInstance& inst, const Schedule& sch) {
    require(verify_strong(inst, sch).ok, ErrorKind::precondition, "only feasible schedules can be reversed");
    return reverse(sch);
}

RecoloringInstance swapped(const RecoloringInstance& inst) {
    auto out = inst;
    std::swap(out.s, out.t);
    return out;
}

} // namespace recolor
