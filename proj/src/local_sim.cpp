#include "recolor/local_sim.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace recolor {

int default_round_cap(int n) {
    const int log_n = n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
    return 64 * (log_n + 1) * 8;
}

RunStats run(const Graph& g, const NodeProgram& program, const std::vector<std::vector<std::int64_t>>& inputs,
             const RunOptions& options) {
    const int n = g.size();
    require(static_cast<int>(inputs.size()) == n, ErrorKind::length_mismatch, "one input per node");
    std::vector<Node> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (options.order) {
        order = *options.order;
        auto check = order;
        std::sort(check.begin(), check.end());
        std::vector<Node> expected(n);
        std::iota(expected.begin(), expected.end(), 0);
        require(check == expected, ErrorKind::precondition, "execution order must be a permutation");
    }
    const int cap = options.round_cap.value_or(default_round_cap(n));

    std::vector<std::unique_ptr<NodeProcess>> nodes(n);
    for (Node v : order) {
        nodes[v] = program(LocalInput{g.id(v), g.degree(v), inputs[v]});
    }
    // port_of[v][p] is the port number of v at its p-th neighbor.
    std::vector<std::vector<int>> port_of(n);
    for (Node v = 0; v < n; ++v) {
        for (Node u : g.neighbors(v)) {
            const auto nb = g.neighbors(u);
            port_of[v].push_back(static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin()));
        }
    }

    auto all_halted = [&] {
        return std::all_of(nodes.begin(), nodes.end(), [](const auto& p) { return p->halted(); });
    };
    int rounds = 0;
    std::vector<std::vector<Message>> outbox(n);
    std::vector<std::vector<Message>> inbox(n);
    while (!all_halted()) {
        require(rounds < cap, ErrorKind::round_limit, "round cap of " + std::to_string(cap) + " exceeded");
        ++rounds;
        for (Node v : order) {
            if (nodes[v]->halted()) {
                outbox[v].assign(g.degree(v), Message{});
            } else {
                outbox[v] = nodes[v]->send();
                require(static_cast<int>(outbox[v].size()) == g.degree(v), ErrorKind::precondition,
                        "a node must send one message per port");
            }
        }
        for (Node v = 0; v < n; ++v) {
            inbox[v].resize(g.degree(v));
            const auto nb = g.neighbors(v);
            for (std::size_t p = 0; p < nb.size(); ++p) {
                inbox[v][p] = outbox[nb[p]][port_of[v][p]];
            }
        }
        for (Node v : order) {
            if (!nodes[v]->halted()) {
                nodes[v]->receive(inbox[v]);
            }
        }
    }
    RunStats stats{rounds, {}};
    stats.outputs.reserve(n);
    for (Node v = 0; v < n; ++v) {
        stats.outputs.push_back(nodes[v]->output());
    }
    return stats;
}

namespace {

class IdProcess : public NodeProcess {
public:
    explicit IdProcess(std::int64_t id) : id_(id) {}
    bool halted() const override { return true; }
    std::vector<Message> send() override { return {}; }
    void receive(std::span<const Message>) override {}
    std::vector<std::int64_t> output() const override { return {id_}; }

private:
    std::int64_t id_;
};

class GatherProcess : public NodeProcess {
public:
    GatherProcess(const LocalInput& in, int radius) : degree_(in.degree), remaining_(radius) {
        known_.insert(in.id);
    }
    bool halted() const override { return remaining_ == 0; }
    std::vector<Message> send() override {
        return std::vector<Message>(degree_, Message(known_.begin(), known_.end()));
    }
    void receive(std::span<const Message> inbox) override {
        for (const auto& msg : inbox) {
            known_.insert(msg.begin(), msg.end());
        }
        --remaining_;
    }
    std::vector<std::int64_t> output() const override { return {known_.begin(), known_.end()}; }

private:
    int degree_;
    int remaining_;
    std::set<std::int64_t> known_;
};

class MisSweepProcess : public NodeProcess {
public:
    explicit MisSweepProcess(const LocalInput& in) : degree_(in.degree) {
        require(!in.data.empty() && in.data[0] >= 1, ErrorKind::precondition, "sweep needs a color >= 1");
        color_ = in.data[0];
    }
    bool halted() const override { return round_ >= color_; }
    std::vector<Message> send() override {
        // Members announce in the round equal to their color; by then every
        // lower-colored neighbor has already announced.
        if (round_ + 1 == color_) {
            return std::vector<Message>(degree_, Message{blocked_ ? 0 : 1});
        }
        return std::vector<Message>(degree_);
    }
    void receive(std::span<const Message> inbox) override {
        for (const auto& msg : inbox) {
            blocked_ = blocked_ || (!msg.empty() && msg[0] == 1);
        }
        ++round_;
    }
    std::vector<std::int64_t> output() const override { return {blocked_ ? 0 : 1}; }

private:
    int degree_;
    std::int64_t color_ = 1;
    std::int64_t round_ = 0;
    bool blocked_ = false;
};

} // namespace

NodeProgram id_program() {
    return [](const LocalInput& in) { return std::make_unique<IdProcess>(in.id); };
}

NodeProgram gather_program(int radius) {
    require(radius >= 0, ErrorKind::precondition, "radius must be non-negative");
    return [radius](const LocalInput& in) { return std::make_unique<GatherProcess>(in, radius); };
}

NodeProgram mis_sweep_program() {
    return [](const LocalInput& in) { return std::make_unique<MisSweepProcess>(in); };
}

Ball gather_ball(const Graph& g, Node v, int r) {
    require(r >= 0, ErrorKind::precondition, "radius must be non-negative");
    const Node sources[] = {v};
    const auto dist = bfs_distances(g, sources);
    std::vector<Node> nodes;
    for (Node u = 0; u < g.size(); ++u) {
        if (dist[u] >= 0 && dist[u] <= r) {
            nodes.push_back(u);
        }
    }
    Ball ball{induced_subgraph(g, nodes), 0, r};
    ball.center = static_cast<Node>(std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
    return ball;
}

} // namespace recolor
