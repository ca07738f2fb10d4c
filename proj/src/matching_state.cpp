#include "hypermatch/matching_state.hpp"

#include "hypermatch/priority.hpp"

#include <algorithm>
#include <cmath>

namespace hypermatch {

MatchingState::MatchingState(int k, NodeId num_offline, StateOptions opts)
    : k_(k), opts_(opts), offline_load_(static_cast<std::size_t>(num_offline), 0.0) {
    if (k < 2) throw ConfigError("uniformity k must be at least 2");
    if (num_offline < 0) throw ConfigError("negative offline node count");
}

void MatchingState::begin_arrival(ArrivalEvent& ev) {
    if (ev.hyperedges.empty()) throw ConfigError("arrival carries no hyperedges");
    for (auto& h : ev.hyperedges) {
        if (h.online != ev.online_id)
            throw ConfigError("hyperedge online node differs from the arriving node");
        if (h.k() != k_) throw WrongUniformity(h.k());
        for (NodeId v : h.offline)
            if (v < 0 || v >= num_offline()) throw ConfigError("offline id out of range");
        h.id = next_edge_id_++;
    }
    current_first_edge_ = ev.hyperedges.front().id;
    if (opts_.retain_edge_values)
        edge_value_.resize(static_cast<std::size_t>(next_edge_id_), 0.0);
    online_load_.emplace(ev.online_id, 0.0);
    arrival_open_ = true;
}

void MatchingState::apply_allocation(const ArrivalEvent& ev, const Allocation& alloc) {
    if (!arrival_open_ || ev.hyperedges.empty() || ev.hyperedges.front().id != current_first_edge_)
        throw ConfigError("allocation applied to an arrival that is not current");

    const EdgeId lo = current_first_edge_;
    const EdgeId hi = next_edge_id_;
    std::unordered_map<NodeId, double> offline_delta;
    double online_delta = 0.0;
    for (const auto& [id, value] : alloc) {
        if (id < lo || id >= hi) throw UnknownHyperedge(id);
        if (value < 0.0) throw ConfigError("negative allocation value");
        if (opts_.mode == MatchMode::integral && value != 0.0 && value != 1.0)
            throw ConfigError("integral mode requires 0/1 allocations");
        const Hyperedge& h = ev.hyperedges[static_cast<std::size_t>(id - lo)];
        for (NodeId v : h.offline) offline_delta[v] += value;
        online_delta += value;
    }

    for (const auto& [v, dv] : offline_delta) {
        const double load = offline_load_[static_cast<std::size_t>(v)] + dv;
        if (load > 1.0 + kFeasibilityTol)
            throw CapacityViolation("v" + std::to_string(v), load);
    }
    auto& wload = online_load_[ev.online_id];
    if (wload + online_delta > 1.0 + kFeasibilityTol)
        throw CapacityViolation("w" + std::to_string(ev.online_id), wload + online_delta);

    for (const auto& [v, dv] : offline_delta) offline_load_[static_cast<std::size_t>(v)] += dv;
    wload += online_delta;
    total_value_ += online_delta;
    phase_value_[ev.phase.value_or(0)] += online_delta;
    for (const auto& [id, value] : alloc) {
        if (value == 0.0) continue;
        if (opts_.retain_edge_values) edge_value_[static_cast<std::size_t>(id)] += value;
        const Hyperedge& h = ev.hyperedges[static_cast<std::size_t>(id - lo)];
        if (h.offline.size() == 2) pair_value_[OfflinePair(h.offline[0], h.offline[1])] += value;
    }

    arrival_open_ = false;
    ++arrivals_processed_;
}

double MatchingState::online_load(NodeId w) const {
    auto it = online_load_.find(w);
    return it == online_load_.end() ? 0.0 : it->second;
}

double MatchingState::max_offline_load() const {
    double m = 0.0;
    for (double l : offline_load_) m = std::max(m, l);
    return m;
}

double MatchingState::edge_value(EdgeId h) const {
    if (!opts_.retain_edge_values)
        throw ConfigError("per-hyperedge values were not retained in this run");
    return edge_value_.at(static_cast<std::size_t>(h));
}

double MatchingState::pair_value(const OfflinePair& e) const {
    auto it = pair_value_.find(e);
    return it == pair_value_.end() ? 0.0 : it->second;
}

double priority(const MatchingState& state, const Hyperedge& h) {
    if (h.k() != 3 || state.k() != 3) throw WrongUniformity(h.k());
    return fill_rate(state.offline_load(h.offline[0])) +
           fill_rate(state.offline_load(h.offline[1]));
}

double offline_fill_sum(const MatchingState& state, const Hyperedge& h) {
    double s = 0.0;
    for (NodeId v : h.offline) s += fill_rate(state.offline_load(v));
    return s;
}

InducedGraphMatching induced_graph_matching(const MatchingState& state,
                                            const std::vector<Hyperedge>& revealed) {
    if (state.k() != 3) throw WrongUniformity(state.k());
    InducedGraphMatching out;
    for (const Hyperedge& h : revealed) {
        const double x = state.edge_value(h.id);
        if (x == 0.0) continue;
        out.edges[OfflinePair(h.offline[0], h.offline[1])] += x;
        out.total += x;
    }
    return out;
}

} // namespace hypermatch
