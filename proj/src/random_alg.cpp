#include "hypermatch/random_alg.hpp"

#include <vector>

namespace hypermatch {

RandomAlgConfig RandomAlgConfig::make(int k, int d, std::uint64_t seed) {
    if (k < 2) throw ConfigError("k must be at least 2");
    if (d < 1) throw ConfigError("degree bound must be positive");
    RandomAlgConfig cfg;
    cfg.k = k;
    cfg.d = d;
    cfg.seed = seed;
    // 1/(k-1) <= d/((d-1)k+1) iff d >= k-1.
    if (d <= k - 1) {
        cfg.rho_num = 1;
        cfg.rho_den = k - 1;
    } else {
        cfg.rho_num = d;
        cfg.rho_den = static_cast<long long>(d - 1) * k + 1;
    }
    if (d - k + 1 > 0) {
        cfg.y_online_num = d - k + 1;
        cfg.y_online_den = static_cast<long long>(d - 1) * k + 1;
    }
    return cfg;
}

bool RandomAlgConfig::unit_identity_exact() const {
    // (k-1) * rho + y_online == 1 over the common denominator.
    return (k - 1) * rho_num * y_online_den + y_online_num * rho_den == rho_den * y_online_den;
}

std::optional<EdgeId> random_arrival(const MatchingState& state, const ArrivalEvent& ev,
                                     const RandomAlgConfig& cfg, CounterRng& rng) {
    if (static_cast<int>(ev.hyperedges.size()) > cfg.d)
        throw DegreeBound(ev.hyperedges.size(), cfg.d);
    std::vector<EdgeId> available;
    for (const Hyperedge& h : ev.hyperedges) {
        bool free = true;
        for (NodeId v : h.offline)
            if (state.offline_load(v) > 0.5) {
                free = false;
                break;
            }
        if (free) available.push_back(h.id);
    }
    if (available.empty()) return std::nullopt;
    return available[rng.next_below(available.size())];
}

ArrivalDecision RandomAlgorithm::on_arrival(const MatchingState& state, const ArrivalEvent& ev) {
    CounterRng rng = root_.split(static_cast<std::uint64_t>(state.arrivals_processed()));
    ArrivalDecision d;
    if (auto id = random_arrival(state, ev, cfg_, rng)) {
        d.alloc.emplace_back(*id, 1.0);
        const EdgeId first = ev.hyperedges.front().id;
        const Hyperedge& h = ev.hyperedges[static_cast<std::size_t>(*id - first)];
        for (NodeId v : h.offline) d.dual_increments.push_back({false, v, cfg_.y_offline()});
        d.dual_increments.push_back({true, ev.online_id, cfg_.y_online()});
    }
    return d;
}

} // namespace hypermatch
