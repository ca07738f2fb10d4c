#pragma once

#include "hypermatch/protocol.hpp"
#include "hypermatch/rng.hpp"

#include <cstdint>
#include <optional>

namespace hypermatch {

/// Parameters of the RANDOM integral algorithm for degree-d online nodes on
/// k-uniform hypergraphs. Dual values are exact rationals:
///   rho       = min(1/(k-1), d/((d-1)k+1))   per matched offline node,
///   y_online  = max(0, (d-k+1)/((d-1)k+1))   per matched online node,
/// and (k-1)*rho + y_online = 1 holds exactly.
struct RandomAlgConfig {
    int k = 3;
    int d = 2;
    std::uint64_t seed = 0;

    long long rho_num = 0, rho_den = 1;
    long long y_online_num = 0, y_online_den = 1;

    static RandomAlgConfig make(int k, int d, std::uint64_t seed);

    double rho() const { return static_cast<double>(rho_num) / static_cast<double>(rho_den); }
    double y_offline() const { return rho(); }
    double y_online() const {
        return static_cast<double>(y_online_num) / static_cast<double>(y_online_den);
    }
    /// Unit dual increase per match, verified in integer arithmetic.
    bool unit_identity_exact() const;
};

/// Uniform choice among the revealed hyperedges that are disjoint from the
/// current matching; nothing when none is available. Throws DegreeBound when
/// the arrival exceeds d hyperedges.
std::optional<EdgeId> random_arrival(const MatchingState& state, const ArrivalEvent& ev,
                                     const RandomAlgConfig& cfg, CounterRng& rng);

class RandomAlgorithm : public OnlineAlgorithm {
public:
    explicit RandomAlgorithm(RandomAlgConfig cfg) : cfg_(cfg), root_(cfg.seed) {}
    std::string name() const override { return "random"; }
    ArrivalDecision on_arrival(const MatchingState& state, const ArrivalEvent& ev) override;

private:
    RandomAlgConfig cfg_;
    CounterRng root_;
};

} // namespace hypermatch
