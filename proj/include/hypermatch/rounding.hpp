#pragma once

#include "hypermatch/protocol.hpp"
#include "hypermatch/rng.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace hypermatch {

/// Online rounding of a fractional solution into a b-matching: each revealed
/// hyperedge is sampled with probability (1 - epsilon) * x_h and accepted as
/// long as no node of it has reached degree b.
struct RoundingState {
    double epsilon = 0.25;
    int b = 1;
    std::vector<EdgeId> sampled;   // S
    std::vector<EdgeId> accepted;  // M, subset of S
    std::unordered_map<NodeId, int> offline_degree;
    std::unordered_map<NodeId, int> online_degree;

    RoundingState(double epsilon, int b);
    int degree(NodeId v, bool online) const;
};

/// Processes one arrival in canonical hyperedge order; returns the accepted
/// subset. `frac_alloc` carries the fractional values x_h for this arrival.
std::vector<EdgeId> rounding_arrival(RoundingState& rs, const ArrivalEvent& ev,
                                     const Allocation& frac_alloc, CounterRng& rng);

/// Replays rounding over a completed fractional run (log + retained values);
/// one trial keyed by `trial`. Returns |M|.
int rounding_replay(const InstanceLog& log, const MatchingState& fractional, double epsilon,
                    int b, std::uint64_t seed, std::uint64_t trial, RoundingState* out = nullptr);

/// Online wrapper running an inner fractional algorithm and rounding its
/// allocations on the fly.
class RoundingAlgorithm : public OnlineAlgorithm {
public:
    RoundingAlgorithm(std::unique_ptr<OnlineAlgorithm> inner, double epsilon, int b,
                      std::uint64_t seed)
        : inner_(std::move(inner)), rs_(epsilon, b), root_(seed) {}
    std::string name() const override { return "rounding(" + inner_->name() + ")"; }
    ArrivalDecision on_arrival(const MatchingState& state, const ArrivalEvent& ev) override;
    const RoundingState& rounding_state() const { return rs_; }

private:
    std::unique_ptr<OnlineAlgorithm> inner_;
    RoundingState rs_;
    CounterRng root_;
};

} // namespace hypermatch
