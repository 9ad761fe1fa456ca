#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

using Message = std::vector<std::int64_t>;

/// What a node knows before the first round.
struct LocalInput {
    std::int64_t id = 0;
    int degree = 0;
    std::vector<std::int64_t> data;
};

/// State machine of one node. Ports are numbered by the node's sorted
/// neighbor list; the node only ever sees port numbers and message contents.
class NodeProcess {
public:
    virtual ~NodeProcess() = default;

    virtual bool halted() const = 0;
    /// One message per port for the current round.
    virtual std::vector<Message> send() = 0;
    /// inbox[p] is what the neighbor on port p sent this round (empty when
    /// that neighbor has halted).
    virtual void receive(std::span<const Message> inbox) = 0;
    virtual std::vector<std::int64_t> output() const = 0;
};

using NodeProgram = std::function<std::unique_ptr<NodeProcess>(const LocalInput&)>;

struct RunOptions {
    /// Defaults to 64 * (ceil(log2 n) + 1) * 8.
    std::optional<int> round_cap;
    /// Order in which nodes are stepped inside a round; must not affect the
    /// result.
    std::optional<std::vector<Node>> order;
};

struct RunStats {
    int rounds = 0;
    std::vector<std::vector<std::int64_t>> outputs;
};

int default_round_cap(int n);

/// Runs synchronous rounds until every node halts. All messages of a round
/// are produced before any node receives. Throws round_limit at the cap.
RunStats run(const Graph& g, const NodeProgram& program, const std::vector<std::vector<std::int64_t>>& inputs,
             const RunOptions& options = {});

/// Halts at once and outputs the node's id.
NodeProgram id_program();

/// Floods identifiers for r rounds, then outputs the sorted ids seen.
NodeProgram gather_program(int radius);

/// Color-class MIS sweep; input data[0] is the node's color. A node of color
/// j announces its decision in round j, so the run takes max-color rounds.
/// Output is {1} for members, {0} otherwise.
NodeProgram mis_sweep_program();

/// Radius-r view of a node: the induced ball and the LOCAL cost to learn it.
struct Ball {
    InducedSubgraph sub;
    Node center = 0;  // index of v inside sub
    int rounds = 0;
};

Ball gather_ball(const Graph& g, Node v, int r);

} // namespace recolor
