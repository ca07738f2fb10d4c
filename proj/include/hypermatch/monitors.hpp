#pragma once

#include "hypermatch/layout.hpp"
#include "hypermatch/matching_state.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace hypermatch {

struct ThresholdViolation {
    NodeId online_id;
    EdgeId hyperedge;
    double phi;
};

/// Snapshot-based check of the threshold-respecting property: at the end of
/// each monitored arrival, every incident hyperedge with positive value must
/// have priority at most 1 + epsilon. Later arrivals may push priorities
/// higher; only the snapshot at the owning arrival counts.
struct ThresholdMonitorReport {
    double epsilon = 0.0;
    std::vector<ThresholdViolation> violations;
    double max_excess = 0.0;
    bool respected() const { return violations.empty(); }
};

class ThresholdMonitor {
public:
    struct Config {
        double epsilon = 0.0;
        double tolerance = 1e-9;
        /// Arrivals tagged with phase >= phase_limit are not monitored
        /// (the construction only constrains phases before the last).
        int phase_limit = std::numeric_limits<int>::max();
    };

    explicit ThresholdMonitor(Config cfg) : cfg_(cfg) { report_.epsilon = cfg.epsilon; }

    void after_arrival(const MatchingState& state, const ArrivalEvent& ev,
                       const Allocation& alloc);

    const ThresholdMonitorReport& report() const { return report_; }

private:
    Config cfg_;
    ThresholdMonitorReport report_;
    bool any_positive_ = false;
};

/// Tracks the largest |load(U_i[r]) - load(V_i[r])| seen at any checkpoint.
struct SymmetryMonitorReport {
    double max_asymmetry = 0.0;
    bool symmetric(double tol = 1e-9) const { return max_asymmetry <= tol; }
};

class SymmetryMonitor {
public:
    explicit SymmetryMonitor(ComponentLayout layout) : layout_(layout) {}

    /// Checks only the (component, rank) pairs touched by this allocation;
    /// untouched pairs cannot have changed since their last checkpoint.
    void after_arrival(const MatchingState& state, const ArrivalEvent& ev,
                       const Allocation& alloc);

    void full_scan(const MatchingState& state);

    const SymmetryMonitorReport& report() const { return report_; }

private:
    void check_pair(const MatchingState& state, int component, int rank);

    ComponentLayout layout_;
    SymmetryMonitorReport report_;
};

} // namespace hypermatch
