#include "tec/dfs.hpp"

namespace tec {

DfsForest dfs(const MultiGraph& g, int root) {
    internal_check(root >= 0 && root < g.n, "dfs root out of range");
    DfsForest f;
    f.root = root;
    f.parent.assign(g.n, -1);
    f.parent_edge.assign(g.n, -1);
    f.disc.assign(g.n, -1);
    f.subtree_last.assign(g.n, -1);
    f.is_tree_edge.assign(g.m(), 0);
    f.order.reserve(g.n);

    // Explicit stack of (vertex, next adjacency slot); recursion depth can
    // reach n on path-like graphs.
    std::vector<std::pair<int, size_t>> stack;
    int counter = 0;
    f.disc[root] = counter++;
    f.order.push_back(root);
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
        auto& [v, slot] = stack.back();
        if (slot == g.adj[v].size()) {
            f.subtree_last[v] = counter - 1;
            stack.pop_back();
            continue;
        }
        auto [w, e] = g.adj[v][slot++];
        if (f.disc[w] < 0) {
            f.disc[w] = counter++;
            f.order.push_back(w);
            f.parent[w] = v;
            f.parent_edge[w] = e;
            f.is_tree_edge[e] = 1;
            stack.emplace_back(w, 0);
        }
    }

    // Back-edges by (source discovery, adjacency position). Each non-tree
    // edge within the reached set appears exactly once, sourced at its
    // ancestor endpoint.
    for (int v : f.order) {
        for (auto [w, e] : g.adj[v]) {
            if (f.is_tree_edge[e] || !f.reached(w)) continue;
            if (f.disc[v] < f.disc[w]) f.back_edges.push_back(e);
        }
    }
    return f;
}

}  // namespace tec
