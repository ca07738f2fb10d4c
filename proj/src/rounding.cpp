#include "hypermatch/rounding.hpp"

namespace hypermatch {

RoundingState::RoundingState(double epsilon, int b) : epsilon(epsilon), b(b) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) throw ConfigError("rounding epsilon must be in (0, 1/2)");
    if (b < 1) throw ConfigError("capacity b must be positive");
}

int RoundingState::degree(NodeId v, bool online) const {
    const auto& m = online ? online_degree : offline_degree;
    auto it = m.find(v);
    return it == m.end() ? 0 : it->second;
}

std::vector<EdgeId> rounding_arrival(RoundingState& rs, const ArrivalEvent& ev,
                                     const Allocation& frac_alloc, CounterRng& rng) {
    const EdgeId first = ev.hyperedges.front().id;
    std::vector<double> x(ev.hyperedges.size(), 0.0);
    for (const auto& [id, v] : frac_alloc) x[static_cast<std::size_t>(id - first)] += v;

    std::vector<EdgeId> accepted;
    for (std::size_t i = 0; i < ev.hyperedges.size(); ++i) {
        const double p = (1.0 - rs.epsilon) * x[i];
        if (rng.next_double() >= p) continue;
        const Hyperedge& h = ev.hyperedges[i];
        rs.sampled.push_back(h.id);
        bool fits = rs.degree(h.online, true) < rs.b;
        for (NodeId v : h.offline) fits = fits && rs.degree(v, false) < rs.b;
        if (!fits) continue;
        ++rs.online_degree[h.online];
        for (NodeId v : h.offline) ++rs.offline_degree[v];
        rs.accepted.push_back(h.id);
        accepted.push_back(h.id);
    }
    return accepted;
}

int rounding_replay(const InstanceLog& log, const MatchingState& fractional, double epsilon,
                    int b, std::uint64_t seed, std::uint64_t trial, RoundingState* out) {
    RoundingState rs(epsilon, b);
    CounterRng trial_rng = CounterRng(seed).split(trial);
    std::size_t pos = 0;
    int arrival = 0;
    while (pos < log.hyperedges.size()) {
        ArrivalEvent ev;
        ev.online_id = log.hyperedges[pos].online;
        Allocation frac;
        while (pos < log.hyperedges.size() && log.hyperedges[pos].online == ev.online_id) {
            const Hyperedge& h = log.hyperedges[pos];
            ev.hyperedges.push_back(h);
            frac.emplace_back(h.id, fractional.edge_value(h.id));
            ++pos;
        }
        CounterRng rng = trial_rng.split(static_cast<std::uint64_t>(arrival++));
        rounding_arrival(rs, ev, frac, rng);
    }
    const int size = static_cast<int>(rs.accepted.size());
    if (out) *out = std::move(rs);
    return size;
}

ArrivalDecision RoundingAlgorithm::on_arrival(const MatchingState& state, const ArrivalEvent& ev) {
    ArrivalDecision d = inner_->on_arrival(state, ev);
    CounterRng rng = root_.split(static_cast<std::uint64_t>(state.arrivals_processed()));
    rounding_arrival(rs_, ev, d.alloc, rng);
    return d;
}

} // namespace hypermatch
