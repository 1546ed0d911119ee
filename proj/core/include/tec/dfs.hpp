#pragma once

#include <vector>

#include "tec/multigraph.hpp"

namespace tec {

/// Depth-first search forest rooted at a single vertex. Tree edges are
/// oriented towards the root, back-edges away from it: a back-edge (x, y) has
/// disc[x] < disc[y], and x is an ancestor of y. Vertices not reached keep
/// disc == -1 (the input was disconnected).
struct DfsForest {
    int root = 0;
    std::vector<int> parent;        // -1 for root and unreached vertices
    std::vector<int> parent_edge;   // tree edge to parent, -1 likewise
    std::vector<int> disc;          // discovery index, -1 if unreached
    std::vector<int> subtree_last;  // max disc within the subtree
    std::vector<int> order;         // order[k] = vertex with disc k
    std::vector<char> is_tree_edge;
    // Back-edges grouped by source vertex in discovery order; within one
    // source, in adjacency order. This is the chain creation order.
    std::vector<int> back_edges;

    bool reached(int v) const { return disc[v] >= 0; }
    // Ancestor test including u == v; both vertices must be reached.
    bool is_ancestor(int u, int v) const {
        return disc[u] <= disc[v] && disc[v] <= subtree_last[u];
    }
    int back_source(const MultiGraph& g, int e) const {
        auto [u, v] = g.edges[e];
        return disc[u] < disc[v] ? u : v;
    }
    int back_target(const MultiGraph& g, int e) const {
        auto [u, v] = g.edges[e];
        return disc[u] < disc[v] ? v : u;
    }
};

// Iterative DFS scanning adjacency in stored (ascending) order.
DfsForest dfs(const MultiGraph& g, int root);

}  // namespace tec
