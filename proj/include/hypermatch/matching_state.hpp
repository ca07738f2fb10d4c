#pragma once

#include "hypermatch/errors.hpp"
#include "hypermatch/model.hpp"

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hypermatch {

enum class MatchMode { fractional, integral };

/// Sparse allocation for one arrival: (hyperedge id, nonnegative value).
using Allocation = std::vector<std::pair<EdgeId, double>>;

struct StateOptions {
    MatchMode mode = MatchMode::fractional;
    /// Keep per-hyperedge values. Required for transcripts, certificates and
    /// induced-matching recomputation; switched off for very large sweeps.
    bool retain_edge_values = true;
};

/// The evolving primal solution: per-hyperedge values plus per-node loads.
///
/// Values are irrevocable (never decrease) and every node, offline or online,
/// carries unit capacity. Loads are maintained incrementally and always agree
/// with the sum of incident values by construction.
class MatchingState {
public:
    MatchingState(int k, NodeId num_offline, StateOptions opts = {});

    int k() const { return k_; }
    MatchMode mode() const { return opts_.mode; }
    NodeId num_offline() const { return static_cast<NodeId>(offline_load_.size()); }
    int arrivals_processed() const { return arrivals_processed_; }
    EdgeId num_hyperedges() const { return next_edge_id_; }
    bool retains_edge_values() const { return opts_.retain_edge_values; }

    /// Assigns dense hyperedge ids to the event and opens it for allocation.
    void begin_arrival(ArrivalEvent& ev);

    /// Irrevocably adds `alloc` on the hyperedges of the current arrival.
    /// Throws UnknownHyperedge for ids outside the arrival and
    /// CapacityViolation if any resulting load exceeds 1 + 1e-9; on error the
    /// state is left unchanged.
    void apply_allocation(const ArrivalEvent& ev, const Allocation& alloc);

    double offline_load(NodeId v) const { return offline_load_.at(static_cast<std::size_t>(v)); }
    double online_load(NodeId w) const;
    double max_offline_load() const;

    double edge_value(EdgeId h) const;
    double total_value() const { return total_value_; }
    const std::map<int, double>& phase_values() const { return phase_value_; }

    /// Aggregated value on an unordered offline pair (3-uniform runs only).
    double pair_value(const OfflinePair& e) const;
    const std::unordered_map<OfflinePair, double, OfflinePairHash>& pair_values() const {
        return pair_value_;
    }

private:
    int k_;
    StateOptions opts_;
    std::vector<double> offline_load_;
    std::unordered_map<NodeId, double> online_load_;
    std::vector<double> edge_value_;
    std::unordered_map<OfflinePair, double, OfflinePairHash> pair_value_;
    double total_value_ = 0.0;
    std::map<int, double> phase_value_;
    int arrivals_processed_ = 0;
    EdgeId next_edge_id_ = 0;
    EdgeId current_first_edge_ = 0;   // id range of the open arrival
    bool arrival_open_ = false;
};

/// Priority phi(h) = f(load(u)) + f(load(v)) of a 3-uniform hyperedge.
/// Throws WrongUniformity unless h has exactly two offline nodes.
double priority(const MatchingState& state, const Hyperedge& h);

/// Sum of f over all offline nodes of h; coincides with priority() for k = 3
/// and extends it to other uniformities for monitoring.
double offline_fill_sum(const MatchingState& state, const Hyperedge& h);

/// Fractional matching induced on offline pairs: x'_(u,v) = sum of x over
/// hyperedges containing both u and v.
struct InducedGraphMatching {
    std::map<OfflinePair, double> edges;
    double total = 0.0;
};

/// Recomputes the induced matching from retained per-hyperedge values.
InducedGraphMatching induced_graph_matching(const MatchingState& state,
                                            const std::vector<Hyperedge>& revealed);

} // namespace hypermatch
