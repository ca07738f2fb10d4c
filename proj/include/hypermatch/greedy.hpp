#pragma once

#include "hypermatch/protocol.hpp"

#include <optional>

namespace hypermatch {

/// First hyperedge (in canonical id order) disjoint from the current
/// matching, or nothing. Integral mode.
std::optional<EdgeId> greedy_integral_arrival(const MatchingState& state, const ArrivalEvent& ev);

class GreedyIntegralAlgorithm : public OnlineAlgorithm {
public:
    std::string name() const override { return "greedy"; }
    ArrivalDecision on_arrival(const MatchingState& state, const ArrivalEvent& ev) override {
        ArrivalDecision d;
        if (auto id = greedy_integral_arrival(state, ev)) d.alloc.emplace_back(*id, 1.0);
        return d;
    }
};

/// Fractional baseline: fills hyperedges to their capacity limit in canonical
/// order, ignoring priorities. Not threshold respecting.
class GreedyFractionalAlgorithm : public OnlineAlgorithm {
public:
    std::string name() const override { return "greedy-frac"; }
    ArrivalDecision on_arrival(const MatchingState& state, const ArrivalEvent& ev) override;
};

} // namespace hypermatch
