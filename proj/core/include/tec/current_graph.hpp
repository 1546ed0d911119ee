#pragma once

#include <functional>
#include <vector>

#include "tec/chains.hpp"
#include "tec/multigraph.hpp"

namespace tec {

enum class VertexState : unsigned char { Inactive, NonBranch, Branch };

/// The evolving subdivision G_c of added chains. Non-branch vertices are
/// partitioned into links, each a doubly-linked vertex sequence lying on one
/// chain's tree path (head = deepest end). Splitting a link at a promoted
/// vertex walks from both ends in lockstep; the longer part keeps its link id,
/// ties keep the part containing the smaller-disc end.
class CurrentGraph {
public:
    struct Link {
        int head = -1, tail = -1;
        int size = 0;
        bool alive = false;
    };

    // Called for every vertex looked at during a lockstep walk (both sides
    // plus the promoted vertex itself). The greedy algorithm hangs its
    // pending-chain processing here.
    using Visitor = std::function<void(int)>;

    CurrentGraph(const MultiGraph& g, const ChainDecomposition& cd);

    VertexState state(int v) const { return state_[v]; }
    bool chain_added(int c) const { return in_gc_[c] != 0; }
    int link_of(int v) const { return link_of_[v]; }
    const Link& link(int id) const { return links_[id]; }
    int link_slots() const { return static_cast<int>(links_.size()); }
    int next_in_link(int v) const { return next_[v]; }
    int prev_in_link(int v) const { return prev_[v]; }
    long long lockstep_steps() const { return lockstep_steps_; }

    // Seeds G_c with the first chain (a cycle through the root).
    void add_first_cycle(int chain_id);

    // Adds a chain whose endpoints are active. Unless `relaxed`, the chain
    // must be a Mader-path: endpoints not inner vertices of one link (a logic
    // error otherwise; the algorithms never violate it).
    void add_chain(int chain_id, bool relaxed = false, const Visitor& visitor = {});

    // True iff the chain's endpoints are active and not inner vertices of the
    // same link.
    bool is_mader_path(int chain_id) const;

    void make_branch(int v, const Visitor& visitor = {});

private:
    int new_link();
    void split_link(int u, const Visitor& visitor);

    const MultiGraph* g_;
    const ChainDecomposition* cd_;
    std::vector<VertexState> state_;
    std::vector<char> in_gc_;  // 1-based chain ids
    std::vector<int> next_, prev_, link_of_;
    std::vector<Link> links_;
    long long lockstep_steps_ = 0;
};

}  // namespace tec
