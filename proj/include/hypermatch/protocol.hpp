#pragma once

#include "hypermatch/layout.hpp"
#include "hypermatch/matching_state.hpp"
#include "hypermatch/monitors.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hypermatch {

/// Dual variables accumulated alongside the primal solution.
class DualState {
public:
    explicit DualState(NodeId num_offline)
        : offline_y_(static_cast<std::size_t>(num_offline), 0.0) {}

    void add_offline(NodeId v, double dy) {
        offline_y_[static_cast<std::size_t>(v)] += dy;
        total_ += dy;
    }
    void add_online(NodeId w, double dy) {
        online_y_[w] += dy;
        total_ += dy;
    }

    double offline_y(NodeId v) const { return offline_y_.at(static_cast<std::size_t>(v)); }
    double online_y(NodeId w) const {
        auto it = online_y_.find(w);
        return it == online_y_.end() ? 0.0 : it->second;
    }
    double total() const { return total_; }
    double min_value() const;

private:
    std::vector<double> offline_y_;
    std::unordered_map<NodeId, double> online_y_;
    double total_ = 0.0;
};

struct DualDelta {
    bool online = false;
    NodeId node = -1;
    double dy = 0.0;
};

struct ArrivalDecision {
    Allocation alloc;
    std::vector<DualDelta> dual_increments;
};

/// An online algorithm reacts to one arrival at a time. It sees the full
/// (read-only) state but may only add value on the revealed hyperedges.
class OnlineAlgorithm {
public:
    virtual ~OnlineAlgorithm() = default;
    virtual std::string name() const = 0;
    virtual ArrivalDecision on_arrival(const MatchingState& state, const ArrivalEvent& ev) = 0;
};

/// A stream of arrivals. Adaptive sources inspect the state between events;
/// static sources ignore it.
class InstanceSource {
public:
    virtual ~InstanceSource() = default;
    virtual int k() const = 0;
    virtual NodeId num_offline() const = 0;
    virtual std::optional<ArrivalEvent> next(const MatchingState& state) = 0;
    /// Component layout when the source arranges offline nodes in U/V pairs.
    virtual const ComponentLayout* layout() const { return nullptr; }
    /// Number of phases when the source is phase-structured.
    virtual std::optional<int> phase_horizon() const { return std::nullopt; }
};

/// All hyperedges revealed during a run, in dense-id order.
struct InstanceLog {
    std::vector<Hyperedge> hyperedges;
};

struct TranscriptRow {
    int arrival_index;
    NodeId online_id;
    EdgeId hyperedge_id;
    double allocation;
    double phi_after;
};

/// Per-(arrival, hyperedge) record of the run, sufficient for exact replay
/// comparison. Floats are written with 17 significant digits.
struct Transcript {
    std::vector<TranscriptRow> rows;
    void write_csv(std::ostream& os) const;
    std::string to_csv() const;
};

enum class SymmetryCheckpoint { off, per_phase, per_arrival };

struct RunOptions {
    StateOptions state;
    bool retain_hyperedges = true;
    bool record_transcript = false;
    bool monitor_threshold = true;
    double threshold_epsilon = 0.0;
    double threshold_tolerance = 1e-9;
    SymmetryCheckpoint symmetry = SymmetryCheckpoint::per_arrival;
};

struct RunResult {
    MatchingState state;
    DualState duals;
    InstanceLog log;
    Transcript transcript;
    std::optional<ThresholdMonitorReport> threshold_report;
    std::optional<SymmetryMonitorReport> symmetry_report;
    int arrivals = 0;
    double runtime_seconds = 0.0;
};

/// Plays one full game: pulls events from the source, lets the algorithm
/// respond, applies allocations and dual increments, and evaluates monitors
/// after every arrival. Deterministic given the algorithm/source seeds.
RunResult run_game(OnlineAlgorithm& algo, InstanceSource& source, const RunOptions& opts = {});

} // namespace hypermatch
