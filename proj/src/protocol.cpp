#include "hypermatch/protocol.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace hypermatch {

double DualState::min_value() const {
    double m = std::numeric_limits<double>::infinity();
    for (double y : offline_y_) m = std::min(m, y);
    for (const auto& [w, y] : online_y_) m = std::min(m, y);
    return offline_y_.empty() && online_y_.empty() ? 0.0 : m;
}

void Transcript::write_csv(std::ostream& os) const {
    os << "arrival_index,online_id,hyperedge_id,allocation,phi_after\n";
    char buf[128];
    for (const TranscriptRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%lld,%.17g,%.17g\n", r.arrival_index,
                      static_cast<int>(r.online_id), static_cast<long long>(r.hyperedge_id),
                      r.allocation, r.phi_after);
        os << buf;
    }
}

std::string Transcript::to_csv() const {
    std::ostringstream ss;
    write_csv(ss);
    return ss.str();
}

RunResult run_game(OnlineAlgorithm& algo, InstanceSource& source, const RunOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();

    StateOptions sopts = opts.state;
    MatchingState state(source.k(), source.num_offline(), sopts);
    DualState duals(source.num_offline());
    InstanceLog log;
    Transcript transcript;

    std::optional<ThresholdMonitor> threshold;
    if (opts.monitor_threshold) {
        ThresholdMonitor::Config cfg;
        cfg.epsilon = opts.threshold_epsilon;
        cfg.tolerance = opts.threshold_tolerance;
        if (auto T = source.phase_horizon()) cfg.phase_limit = *T;
        threshold.emplace(cfg);
    }
    std::optional<SymmetryMonitor> symmetry;
    if (opts.symmetry != SymmetryCheckpoint::off && source.layout() != nullptr)
        symmetry.emplace(*source.layout());

    int arrivals = 0;
    std::optional<int> last_phase;
    while (auto ev = source.next(state)) {
        state.begin_arrival(*ev);
        ArrivalDecision decision = algo.on_arrival(state, *ev);
        state.apply_allocation(*ev, decision.alloc);
        for (const DualDelta& d : decision.dual_increments) {
            if (d.online)
                duals.add_online(d.node, d.dy);
            else
                duals.add_offline(d.node, d.dy);
        }

        if (threshold) threshold->after_arrival(state, *ev, decision.alloc);
        if (symmetry) {
            if (opts.symmetry == SymmetryCheckpoint::per_arrival)
                symmetry->after_arrival(state, *ev, decision.alloc);
            else if (ev->phase && last_phase && *ev->phase != *last_phase)
                symmetry->full_scan(state);
        }
        last_phase = ev->phase;

        if (opts.record_transcript) {
            const EdgeId first = ev->hyperedges.front().id;
            std::vector<double> value(ev->hyperedges.size(), 0.0);
            for (const auto& [id, x] : decision.alloc)
                value[static_cast<std::size_t>(id - first)] += x;
            for (std::size_t i = 0; i < ev->hyperedges.size(); ++i)
                transcript.rows.push_back({arrivals, ev->online_id, ev->hyperedges[i].id,
                                           value[i], offline_fill_sum(state, ev->hyperedges[i])});
        }
        if (opts.retain_hyperedges)
            for (Hyperedge& h : ev->hyperedges) log.hyperedges.push_back(std::move(h));
        ++arrivals;
    }

    if (symmetry) symmetry->full_scan(state);

    RunResult result{std::move(state), std::move(duals), std::move(log), std::move(transcript),
                     std::nullopt,     std::nullopt,     arrivals,       0.0};
    if (threshold) result.threshold_report = threshold->report();
    if (symmetry) result.symmetry_report = symmetry->report();
    result.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace hypermatch
