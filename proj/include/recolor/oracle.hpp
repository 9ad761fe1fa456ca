#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/schedule.hpp"

namespace recolor {

/// Single-node recoloring step.
struct Move {
    Node v = 0;
    Color from = 0;
    Color to = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

struct OracleOptions {
    /// Visited states allowed before giving up with size_guard. Instances
    /// whose whole state space has at most 2^26 states use a bit array and
    /// are never cut off.
    std::uint64_t max_states = std::uint64_t{1} << 24;
};

struct SearchResult {
    bool reachable = false;
    std::vector<Move> moves;  // a shortest move sequence when reachable
    std::uint64_t states_explored = 0;
};

/// Breadth-first search over proper colorings connected by single-node
/// moves. allowed[v] lists the colors node v may take (sorted). Neighbors
/// are expanded by node, then by color, both ascending.
/// Throws size_guard when the encoding does not fit 64 bits or the
/// exploration cap is hit.
SearchResult search(const Graph& g, const Coloring& s, const Coloring& t,
                    const std::vector<std::vector<Color>>& allowed, const OracleOptions& options = {});

/// Colors available to each node of an instance: [k+c], or the node's list
/// together with k+1..k+c.
std::vector<std::vector<Color>> allowed_colors(const RecoloringInstance& inst);

SearchResult search(const RecoloringInstance& inst, const OracleOptions& options = {});
bool reachable(const RecoloringInstance& inst, const OracleOptions& options = {});
std::optional<std::vector<Move>> shortest(const RecoloringInstance& inst, const OracleOptions& options = {});

/// True iff no node can switch to any other color of [k+c].
bool is_frozen(const Graph& g, const Coloring& s, int k, int c);

/// One move per step.
Schedule schedule_from_moves(const Coloring& s, std::span<const Move> moves);

/// Serializes a strongly feasible schedule; moves within a step go in
/// ascending node order. Throws precondition for infeasible schedules.
std::vector<Move> moves_from_schedule(const RecoloringInstance& inst, const Schedule& sch);

/// Shortest single-move schedules for small subgraphs over a fixed palette,
/// memoized by (graph shape, s, t).
class ExactSolver {
public:
    explicit ExactSolver(std::vector<Color> palette, OracleOptions options = {});

    /// Throws infeasible when t is unreachable from s.
    const Schedule& solve(const Graph& g, const Coloring& s, const Coloring& t);

private:
    std::vector<Color> palette_;
    OracleOptions options_;
    std::map<std::vector<int>, Schedule> memo_;
};

/// Recolors every component of g[mask] from the builder's current coloring
/// to `target`, all components side by side.
void recolor_components(ScheduleBuilder& builder, const Graph& g, const std::vector<char>& mask,
                        const Coloring& target, ExactSolver& solver);

} // namespace recolor
