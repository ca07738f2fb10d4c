#include "hypermatch/monitors.hpp"

#include <algorithm>
#include <cmath>

namespace hypermatch {

void ThresholdMonitor::after_arrival(const MatchingState& state, const ArrivalEvent& ev,
                                     const Allocation& alloc) {
    if (ev.phase && *ev.phase >= cfg_.phase_limit) return;

    const EdgeId first = ev.hyperedges.front().id;
    std::vector<double> value(ev.hyperedges.size(), 0.0);
    for (const auto& [id, x] : alloc) value[static_cast<std::size_t>(id - first)] += x;

    for (std::size_t i = 0; i < ev.hyperedges.size(); ++i) {
        if (value[i] <= 0.0) continue;
        const double phi = offline_fill_sum(state, ev.hyperedges[i]);
        const double excess = phi - 1.0;
        if (!any_positive_ || excess > report_.max_excess) report_.max_excess = excess;
        any_positive_ = true;
        if (phi > 1.0 + cfg_.epsilon + cfg_.tolerance)
            report_.violations.push_back({ev.online_id, ev.hyperedges[i].id, phi});
    }
}

void SymmetryMonitor::check_pair(const MatchingState& state, int component, int rank) {
    const double lu = state.offline_load(layout_.node(component, Side::U, rank));
    const double lv = state.offline_load(layout_.node(component, Side::V, rank));
    report_.max_asymmetry = std::max(report_.max_asymmetry, std::abs(lu - lv));
}

void SymmetryMonitor::after_arrival(const MatchingState& state, const ArrivalEvent& ev,
                                    const Allocation& alloc) {
    const EdgeId first = ev.hyperedges.front().id;
    for (const auto& [id, x] : alloc) {
        if (x == 0.0) continue;
        const Hyperedge& h = ev.hyperedges[static_cast<std::size_t>(id - first)];
        for (NodeId v : h.offline) {
            const OfflineNodeInfo info = layout_.info(v);
            check_pair(state, info.component, info.rank);
        }
    }
}

void SymmetryMonitor::full_scan(const MatchingState& state) {
    for (int c = 0; c < layout_.components(); ++c)
        for (int r = 1; r <= layout_.ranks(); ++r) check_pair(state, c, r);
}

} // namespace hypermatch
