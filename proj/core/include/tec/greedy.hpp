#pragma once

#include "tec/certificate.hpp"
#include "tec/multigraph.hpp"

namespace tec {

struct GreedyStats {
    long long lockstep_steps = 0;  // total link-split walk steps
};

// Greedy chain addition: maintains a FIFO of addable chains (Mader-paths with
// respect to the current graph) and per-vertex lists of chains waiting on
// their link to split. Kept as an independent second implementation for
// differential testing of the linear algorithm; O((n+m) log(n+m)).
Certificate certify_greedy(const MultiGraph& g, int root = 0, GreedyStats* stats = nullptr);

}  // namespace tec
