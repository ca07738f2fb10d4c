#pragma once

#include "hypermatch/model.hpp"

#include <vector>

namespace hypermatch {

/// Dense id scheme for offline nodes arranged as m components, each a
/// bipartition U/V with `ranks` nodes per side. Component c occupies the id
/// block [c*2R, (c+1)*2R): U ranks first, then V ranks.
class ComponentLayout {
public:
    ComponentLayout(int components, int ranks)
        : components_(components), ranks_(ranks) {}

    int components() const { return components_; }
    int ranks() const { return ranks_; }
    NodeId num_offline() const { return static_cast<NodeId>(components_) * 2 * ranks_; }

    NodeId node(int component, Side side, int rank) const {
        return static_cast<NodeId>(component) * 2 * ranks_ +
               (side == Side::V ? ranks_ : 0) + (rank - 1);
    }

    OfflineNodeInfo info(NodeId v) const {
        const int block = static_cast<int>(v) / (2 * ranks_);
        const int within = static_cast<int>(v) % (2 * ranks_);
        OfflineNodeInfo i;
        i.id = v;
        i.component = block;
        i.side = within < ranks_ ? Side::U : Side::V;
        i.rank = within % ranks_ + 1;
        return i;
    }

private:
    int components_;
    int ranks_;
};

} // namespace hypermatch
