#include "hypermatch/waterfill.hpp"

#include "hypermatch/priority.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace hypermatch {

namespace {

Allocation exact_disjoint_arrival(const MatchingState& state, const ArrivalEvent& ev,
                                  const WaterFillConfig& cfg) {
    std::unordered_set<NodeId> seen;
    for (const Hyperedge& h : ev.hyperedges)
        for (NodeId v : h.offline)
            if (!seen.insert(v).second) throw NotDisjoint();

    const std::size_t n = ev.hyperedges.size();
    const double budget = 1.0 - state.online_load(ev.online_id);

    // Work in u = ln(lambda). Allocating x to hyperedge j multiplies its
    // priority by e^x, so x_j = clamp(u - base_j, 0, -base_j) where
    // base_j = ln(p_j); the cap lands the priority exactly on 1.
    std::vector<double> base(n);
    double u_lo = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        base[j] = std::log(priority(state, ev.hyperedges[j]));
        u_lo = std::min(u_lo, base[j]);
    }
    auto spent = [&](double u) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            s += std::max(0.0, std::min(u - base[j], -base[j]));
        return s;
    };

    double level = 0.0; // lambda = 1
    const bool budget_bound = spent(0.0) > budget;
    if (budget_bound) {
        double lo = u_lo, hi = 0.0;
        while (hi - lo > cfg.level_tolerance) {
            const double mid = 0.5 * (lo + hi);
            (spent(mid) > budget ? hi : lo) = mid;
        }
        level = 0.5 * (lo + hi);
    }

    Allocation alloc;
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double x = std::max(0.0, std::min(level - base[j], -base[j]));
        if (x > 0.0) {
            alloc.emplace_back(ev.hyperedges[j].id, x);
            total += x;
        }
    }
    if (budget_bound && total > 0.0) {
        // Land the online load exactly on its budget.
        const double scale = budget / total;
        for (auto& [id, x] : alloc) x *= scale;
    }
    return alloc;
}

Allocation discretized_arrival(const MatchingState& state, const ArrivalEvent& ev,
                               const WaterFillConfig& cfg) {
    const std::size_t n = ev.hyperedges.size();
    double budget = 1.0 - state.online_load(ev.online_id);

    std::unordered_map<NodeId, double> load;
    for (const Hyperedge& h : ev.hyperedges)
        for (NodeId v : h.offline) load.emplace(v, state.offline_load(v));

    std::vector<double> x(n, 0.0);
    std::vector<bool> saturated(n, false);
    const long long max_iters = static_cast<long long>(10.0 / cfg.step) + 1000;

    for (long long iter = 0; iter < max_iters; ++iter) {
        double min_phi = 2.0;
        std::vector<double> phi(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (saturated[j]) continue;
            double p = 0.0;
            for (NodeId v : ev.hyperedges[j].offline) p += fill_rate(load[v]);
            phi[j] = p;
            if (p < 1.0) min_phi = std::min(min_phi, p);
        }
        if (min_phi >= 1.0 || budget <= 0.0) break;

        std::vector<std::size_t> argmin;
        for (std::size_t j = 0; j < n; ++j)
            if (!saturated[j] && phi[j] < 1.0 && phi[j] <= min_phi + cfg.tie_tolerance)
                argmin.push_back(j);

        double step = cfg.step;
        bool last = false;
        if (step * static_cast<double>(argmin.size()) >= budget) {
            step = budget / static_cast<double>(argmin.size());
            last = true;
        }

        double consumed = 0.0;
        bool clamped = false;
        for (std::size_t j : argmin) {
            double cap = step;
            for (NodeId v : ev.hyperedges[j].offline) cap = std::min(cap, 1.0 - load[v]);
            if (cap < 1e-15) {
                saturated[j] = true;
                clamped = true;
                continue;
            }
            if (cap < step) clamped = true;
            x[j] += cap;
            for (NodeId v : ev.hyperedges[j].offline) load[v] += cap;
            consumed += cap;
        }
        // The final fractional step exhausts the budget exactly unless an
        // offline capacity cut it short.
        budget = (last && !clamped) ? 0.0 : budget - consumed;
    }

    Allocation alloc;
    for (std::size_t j = 0; j < n; ++j)
        if (x[j] > 0.0) alloc.emplace_back(ev.hyperedges[j].id, x[j]);
    return alloc;
}

} // namespace

Allocation waterfill_arrival(const MatchingState& state, const ArrivalEvent& ev,
                             const WaterFillConfig& cfg) {
    if (state.k() != 3) throw WrongUniformity(state.k());
    if (cfg.mode == WaterFillMode::exact_disjoint) return exact_disjoint_arrival(state, ev, cfg);
    return discretized_arrival(state, ev, cfg);
}

std::vector<DualDelta> waterfill_duals(const MatchingState& state_before, const ArrivalEvent& ev,
                                       const Allocation& alloc) {
    std::unordered_map<NodeId, double> delta;
    double total = 0.0;
    const EdgeId first = ev.hyperedges.front().id;
    for (const auto& [id, x] : alloc) {
        for (NodeId v : ev.hyperedges.at(static_cast<std::size_t>(id - first)).offline)
            delta[v] += x;
        total += x;
    }

    std::vector<DualDelta> duals;
    if (total == 0.0) return duals;
    double offline_sum = 0.0;
    for (const auto& [v, dv] : delta) {
        const double before = state_before.offline_load(v);
        const double dy = fill_rate(before + dv) - fill_rate(before);
        duals.push_back({false, v, dy});
        offline_sum += dy;
    }
    std::sort(duals.begin(), duals.end(),
              [](const DualDelta& a, const DualDelta& b) { return a.node < b.node; });
    duals.push_back({true, ev.online_id, total - offline_sum});
    return duals;
}

} // namespace hypermatch
