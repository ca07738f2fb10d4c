#include "hypermatch/greedy.hpp"

#include <algorithm>
#include <unordered_map>

namespace hypermatch {

std::optional<EdgeId> greedy_integral_arrival(const MatchingState& state,
                                              const ArrivalEvent& ev) {
    for (const Hyperedge& h : ev.hyperedges) {
        bool free = true;
        for (NodeId v : h.offline)
            if (state.offline_load(v) > 0.5) {
                free = false;
                break;
            }
        if (free) return h.id;
    }
    return std::nullopt;
}

ArrivalDecision GreedyFractionalAlgorithm::on_arrival(const MatchingState& state,
                                                      const ArrivalEvent& ev) {
    double budget = 1.0 - state.online_load(ev.online_id);
    std::unordered_map<NodeId, double> load;
    for (const Hyperedge& h : ev.hyperedges)
        for (NodeId v : h.offline) load.emplace(v, state.offline_load(v));

    ArrivalDecision d;
    for (const Hyperedge& h : ev.hyperedges) {
        if (budget <= 0.0) break;
        double x = budget;
        for (NodeId v : h.offline) x = std::min(x, 1.0 - load[v]);
        if (x <= 0.0) continue;
        for (NodeId v : h.offline) load[v] += x;
        budget -= x;
        d.alloc.emplace_back(h.id, x);
    }
    return d;
}

} // namespace hypermatch
