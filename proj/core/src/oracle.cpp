#include "tec/oracle.hpp"

#include <algorithm>

namespace tec {
namespace oracle {

namespace {

bool connected_without(const MultiGraph& g, int skip1, int skip2) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : g.adj[v]) {
            if (e == skip1 || e == skip2 || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == g.n;
}

// Unit-capacity max-flow (repeated BFS augmentation), capped at `limit`.
// Every undirected edge becomes an arc pair with one unit each way.
class UnitFlow {
public:
    explicit UnitFlow(const MultiGraph& g) : g_(g), cap_(2 * g.m()) {}

    int max_flow(int s, int t, int limit) {
        std::fill(cap_.begin(), cap_.end(), 1);
        int flow = 0;
        while (flow < limit && augment(s, t)) ++flow;
        return flow;
    }

private:
    bool augment(int s, int t) {
        prev_arc_.assign(g_.n, -1);
        std::vector<int> queue{s};
        prev_arc_[s] = -2;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (v == t) break;
            for (auto [w, e] : g_.adj[v]) {
                int arc = 2 * e + (g_.edges[e].first == v ? 0 : 1);
                if (!cap_[arc] || prev_arc_[w] != -1) continue;
                prev_arc_[w] = arc;
                queue.push_back(w);
            }
        }
        if (prev_arc_[t] == -1) return false;
        for (int v = t; v != s;) {
            int arc = prev_arc_[v];
            cap_[arc] = 0;
            cap_[arc ^ 1] = 1;
            int e = arc / 2;
            v = (arc % 2 == 0) ? g_.edges[e].first : g_.edges[e].second;
        }
        return true;
    }

    const MultiGraph& g_;
    std::vector<char> cap_;
    std::vector<int> prev_arc_;
};

}  // namespace

std::set<std::pair<int, int>> brute_two_cuts(const MultiGraph& g) {
    std::set<std::pair<int, int>> cuts;
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f)
            if (!connected_without(g, e, f)) cuts.insert({e, f});
    return cuts;
}

int edge_connectivity(const MultiGraph& g) {
    if (g.n < 2) return 0;
    UnitFlow flow(g);
    int lambda = g.m() + 1;
    for (int t = 1; t < g.n; ++t) lambda = std::min(lambda, flow.max_flow(0, t, lambda));
    return lambda;
}

std::vector<std::vector<int>> brute_three_components(const MultiGraph& g) {
    UnitFlow flow(g);
    std::vector<std::vector<char>> rel(g.n, std::vector<char>(g.n, 0));
    for (int u = 0; u < g.n; ++u) {
        rel[u][u] = 1;
        for (int v = u + 1; v < g.n; ++v)
            rel[u][v] = rel[v][u] = flow.max_flow(u, v, 3) >= 3 ? 1 : 0;
    }
    // verify transitivity before using it
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            for (int c = 0; c < g.n; ++c)
                internal_check(!(rel[a][b] && rel[b][c]) || rel[a][c],
                               "pairwise 3-edge-connectivity must be transitive");
    std::vector<std::vector<int>> classes;
    std::vector<char> placed(g.n, 0);
    for (int u = 0; u < g.n; ++u) {
        if (placed[u]) continue;
        classes.emplace_back();
        for (int v = u; v < g.n; ++v)
            if (rel[u][v]) {
                classes.back().push_back(v);
                placed[v] = 1;
            }
    }
    return classes;
}

MultiGraph random_3ec(int n_target, uint64_t seed, int extra_edges) {
    internal_check(n_target >= 2, "random_3ec needs at least two vertices");
    Rng rng(seed);
    MultiGraph g;
    g.n = 2;
    g.edges = {{0, 1}, {0, 1}, {0, 1}};
    while (g.n < n_target) {
        int remaining = n_target - g.n;
        int op = remaining >= 2 ? rng.below_int(3) : rng.below_int(2);
        if (op == 0) {
            int u = rng.below_int(g.n);
            int v = rng.below_int(g.n - 1);
            if (v >= u) ++v;
            g.edges.emplace_back(u, v);
        } else if (op == 1) {
            // subdivide an edge and connect the new vertex somewhere
            int e = rng.below_int(g.m());
            int z = g.n++;
            int v = g.edges[e].second;
            g.edges[e].second = z;
            g.edges.emplace_back(z, v);
            int w = rng.below_int(g.n - 1);
            g.edges.emplace_back(z, w);
        } else {
            // subdivide two distinct edges and join the new vertices
            int e1 = rng.below_int(g.m());
            int e2 = rng.below_int(g.m() - 1);
            if (e2 >= e1) ++e2;
            int z1 = g.n++;
            int z2 = g.n++;
            int v1 = g.edges[e1].second;
            g.edges[e1].second = z1;
            g.edges.emplace_back(z1, v1);
            int v2 = g.edges[e2].second;
            g.edges[e2].second = z2;
            g.edges.emplace_back(z2, v2);
            g.edges.emplace_back(z1, z2);
        }
    }
    if (extra_edges < 0) extra_edges = rng.below_int(4);
    for (int i = 0; i < extra_edges && g.n >= 2; ++i) {
        int u = rng.below_int(g.n);
        int v = rng.below_int(g.n - 1);
        if (v >= u) ++v;
        g.edges.emplace_back(u, v);
    }
    g.build_adjacency();
    return g;
}

}  // namespace oracle
}  // namespace tec
