#pragma once

#include "hypermatch/protocol.hpp"

namespace hypermatch {

enum class WaterFillMode { exact_disjoint, discretized };

struct WaterFillConfig {
    WaterFillMode mode = WaterFillMode::exact_disjoint;
    /// Increment per step in discretized mode.
    double step = 1e-4;
    /// Bisection tolerance on the water level in exact mode.
    double level_tolerance = 1e-12;
    /// Two priorities within this of the minimum advance together.
    double tie_tolerance = 1e-12;
};

/// Water-filling response to one arrival: raises the lowest-priority
/// hyperedges at equal rates until the online budget is spent or every
/// incident hyperedge has priority at least 1.
///
/// exact_disjoint solves the continuous dynamics in closed form via the water
/// level and requires the arrival's hyperedges to be pairwise offline-disjoint
/// (NotDisjoint otherwise). discretized handles arbitrary overlaps by stepped
/// simultaneous increases with shared-load recomputation after each step.
Allocation waterfill_arrival(const MatchingState& state, const ArrivalEvent& ev,
                             const WaterFillConfig& cfg);

/// Dual increments matching the allocation: each offline node v gains
/// f(end load) - f(start load) (the exact integral of f over its load
/// increase), and the online node receives the remainder, so the total dual
/// increase equals the total allocation exactly.
std::vector<DualDelta> waterfill_duals(const MatchingState& state_before, const ArrivalEvent& ev,
                                       const Allocation& alloc);

class WaterfillAlgorithm : public OnlineAlgorithm {
public:
    explicit WaterfillAlgorithm(WaterFillConfig cfg = {}) : cfg_(cfg) {}
    std::string name() const override {
        return cfg_.mode == WaterFillMode::exact_disjoint ? "waterfill" : "waterfill-discretized";
    }
    ArrivalDecision on_arrival(const MatchingState& state, const ArrivalEvent& ev) override {
        ArrivalDecision d;
        d.alloc = waterfill_arrival(state, ev, cfg_);
        d.dual_increments = waterfill_duals(state, ev, d.alloc);
        return d;
    }

private:
    WaterFillConfig cfg_;
};

} // namespace hypermatch
