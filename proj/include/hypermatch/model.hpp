#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypermatch {

using NodeId = std::int32_t;
using EdgeId = std::int64_t;

inline constexpr double kFeasibilityTol = 1e-9;

enum class Side : std::uint8_t { U, V };

/// Optional structural metadata attached to an offline node, used by the
/// adversary bookkeeping and the symmetry monitor.
struct OfflineNodeInfo {
    NodeId id = -1;
    int component = -1;      // -1 when not part of a component layout
    Side side = Side::U;
    int rank = 0;            // 1-based within the side; 0 when absent
};

/// One hyperedge: a single online node plus k-1 distinct offline nodes.
struct Hyperedge {
    EdgeId id = -1;          // dense id, assigned by the game loop at reveal
    NodeId online = -1;
    std::vector<NodeId> offline;

    int k() const { return static_cast<int>(offline.size()) + 1; }
};

/// Everything revealed when one online node arrives.
struct ArrivalEvent {
    NodeId online_id = -1;
    std::vector<Hyperedge> hyperedges;
    std::optional<int> phase;
};

/// Unordered offline pair, normalized so first <= second.
struct OfflinePair {
    NodeId a;
    NodeId b;

    OfflinePair(NodeId x, NodeId y) : a(x < y ? x : y), b(x < y ? y : x) {}
    bool operator==(const OfflinePair&) const = default;
    auto operator<=>(const OfflinePair&) const = default;
};

struct OfflinePairHash {
    std::size_t operator()(const OfflinePair& p) const {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.a)) << 32) |
            static_cast<std::uint32_t>(p.b));
    }
};

} // namespace hypermatch
