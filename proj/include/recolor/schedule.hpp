#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

/// Per-node color sequences x(v) = (x_0(v), ..., x_l(v)). Sequences may have
/// different lengths; a node keeps its last color once its sequence ends.
class Schedule {
public:
    Schedule() = default;
    /// Every sequence must be non-empty.
    explicit Schedule(std::vector<std::vector<Color>> per_node);

    /// Zero-length schedule that keeps every node at `x`.
    static Schedule constant(const Coloring& x);
    /// Schedule whose i-th coloring is `trajectory[i]`.
    static Schedule from_trajectory(const std::vector<Coloring>& trajectory);

    int size() const noexcept { return static_cast<int>(per_node_.size()); }
    /// L = max over nodes of l(v).
    int length() const noexcept;

    const std::vector<Color>& sequence(Node v) const { return per_node_[v]; }
    /// x_i(v) with the padding rule applied.
    Color at(Node v, int i) const;
    Coloring coloring_at(int i) const;
    Coloring initial() const { return coloring_at(0); }
    Coloring final() const { return coloring_at(length()); }

    /// C_i for 1 <= i <= L, ascending.
    std::vector<Node> changes(int i) const;

    /// Same schedule with every sequence padded to exactly L + 1 entries.
    Schedule padded() const;

    /// Equality of the padded color matrices.
    friend bool operator==(const Schedule& a, const Schedule& b);

private:
    std::vector<std::vector<Color>> per_node_;
};

/// Incremental construction of a schedule step by step. Empty steps are
/// dropped so they do not count towards L.
class ScheduleBuilder {
public:
    explicit ScheduleBuilder(Coloring start);

    const Coloring& current() const noexcept { return current_; }
    int time() const noexcept { return time_; }

    /// One synchronous step in which each listed node moves to its color.
    /// Entries that do not change the color are ignored.
    void step(std::span<const std::pair<Node, Color>> changes);
    /// Moves every node of `nodes` to `color` in one step.
    void step_all(std::span<const Node> nodes, Color color);
    /// Moves every node v of `nodes` to target[v] in one step.
    void step_to(std::span<const Node> nodes, const Coloring& target);

    /// Runs sub-schedules on disjoint node subsets side by side. Part p maps
    /// local node i of its schedule to global node parts[p].first[i]. Time
    /// advances by the longest part.
    void parallel(std::span<const std::pair<std::vector<Node>, Schedule>> parts);
    /// Single-part form of `parallel`; `schedule` may cover the whole graph.
    void run(std::span<const Node> to_global, const Schedule& schedule);
    void run(const Schedule& schedule);

    Schedule finish() const;

private:
    Coloring current_;
    std::vector<std::vector<Color>> per_node_;
    int time_ = 0;

    void set(Node v, Color c, int at_time);
};

/// Output of a recoloring algorithm: the schedule and the LOCAL rounds spent
/// computing it.
struct Recoloring {
    Schedule schedule;
    int rounds = 0;
};

/// A k+c recoloring instance. When `lists` is set, colors up to k must also
/// come from the node's list; colors k+1..k+c stay available to everyone.
struct RecoloringInstance {
    Graph g;
    Coloring s;
    Coloring t;
    int k = 0;
    int c = 0;
    std::optional<ListAssignment> lists;
};

/// Checks lengths, properness of s and t, and that both use colors in [k].
void validate(const RecoloringInstance& inst);

enum class ViolationKind { endpoint_s, endpoint_t, improper, adjacent_change, palette };

const char* to_string(ViolationKind kind);

struct Violation {
    int step = 0;
    ViolationKind kind = ViolationKind::endpoint_s;
    Node u = -1;
    Node v = -1;  // second endpoint for edge violations, else -1
};

struct VerifyReport {
    bool ok = true;
    std::optional<Violation> violation;
};

/// Strong feasibility: endpoints, properness of every x_i, independent change
/// sets, palette. Reports the first violation by step, then by check order
/// (endpoint, palette, improper, adjacent change), then by node or edge.
VerifyReport verify_strong(const RecoloringInstance& inst, const Schedule& sch);

/// Weak feasibility: adjacent nodes may change together if their old and new
/// color pairs are disjoint.
VerifyReport verify_weak(const RecoloringInstance& inst, const Schedule& sch);

/// Splits each weak step into k substeps keyed on the input color s.
/// Empty substeps are dropped. Throws precondition if `sch` is not weakly
/// feasible.
Schedule weak_to_strong(const RecoloringInstance& inst, const Schedule& sch);

/// Runs `a` then `b`. Throws length_mismatch when a's final coloring differs
/// from b's initial coloring.
Schedule concat(const Schedule& a, const Schedule& b);

/// Time reversal; feasible for the instance with s and t swapped.
Schedule reverse(const Schedule& sch);
/// Checked form: throws precondition unless `sch` is strongly feasible for
/// `inst`.
Schedule reverse(const RecoloringInstance& inst, const Schedule& sch);

/// The instance with s and t exchanged.
RecoloringInstance swapped(const RecoloringInstance& inst);

} // namespace recolor
