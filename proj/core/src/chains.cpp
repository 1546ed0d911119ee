#include "tec/chains.hpp"

#include <algorithm>
#include <ostream>

namespace tec {

const char* to_string(ChainKind k) {
    switch (k) {
        case ChainKind::Cycle: return "cycle";
        case ChainKind::Unclassified: return "unclassified";
        case ChainKind::Interlacing: return "interlacing";
        case ChainKind::Nested: return "nested";
    }
    return "?";
}

int ChainPath::edge_between(int pos, int pos_next) const {
    internal_check(pos_next == pos + 1 && pos >= 1 && pos <= length(), "bad chain position");
    if (pos == length()) return c->back_edge;  // past the deepest vertex
    // parent edge of the deeper endpoint verts[pos]
    return c->tree_edges[c->tree_edges.size() - pos];
}

ChainPath chain_path(const MultiGraph& g, const DfsForest& f, const Chain& c) {
    (void)g;
    ChainPath p;
    p.c = &c;
    p.verts.reserve(c.tree_edges.size() + 1);
    p.verts.push_back(c.dst);
    int v = c.dst;
    for (auto it = c.tree_edges.rbegin(); it != c.tree_edges.rend(); ++it) {
        // each tree edge is the parent edge of the vertex below v
        int below = g.other_end(*it, v);
        internal_check(f.parent[below] == v && f.parent_edge[below] == *it,
                       "chain tree path broken");
        p.verts.push_back(below);
        v = below;
    }
    return p;
}

ChainDecomposition decompose(const MultiGraph& g, DfsForest forest) {
    ChainDecomposition cd;
    cd.forest = std::move(forest);
    cd.sbelongs.assign(g.n, 0);
    cd.edge_chain.assign(g.m(), 0);
    cd.pos_in_path.assign(g.n, -1);
    const DfsForest& f = cd.forest;

    std::vector<char> visited(g.n, 0);
    size_t next_back = 0;
    for (int v : f.order) {
        visited[v] = 1;
        while (next_back < f.back_edges.size() && f.back_source(g, f.back_edges[next_back]) == v) {
            int be = f.back_edges[next_back++];
            Chain c;
            c.id = cd.count() + 1;
            c.src = v;
            c.back_edge = be;
            cd.edge_chain[be] = c.id;
            int x = f.back_target(g, be);
            while (!visited[x]) {
                visited[x] = 1;
                cd.sbelongs[x] = c.id;
                cd.pos_in_path[x] = static_cast<int>(c.tree_edges.size());
                cd.edge_chain[f.parent_edge[x]] = c.id;
                c.tree_edges.push_back(f.parent_edge[x]);
                x = f.parent[x];
            }
            c.dst = x;
            if (c.id == 1) c.kind = ChainKind::Cycle;
            cd.chains.push_back(std::move(c));
        }
    }
    if (g.n > 0 && f.reached(f.root)) cd.sbelongs[f.root] = cd.chains.empty() ? 0 : 1;
    return cd;
}

std::optional<Certificate> check_2ec(const MultiGraph& g, const ChainDecomposition& cd) {
    for (int v = 0; v < g.n; ++v)
        if (!cd.forest.reached(v)) return Certificate::disconnected(v);
    int best = -1;
    for (int v : cd.forest.order) {
        int e = cd.forest.parent_edge[v];
        if (e >= 0 && cd.edge_chain[e] == 0) {
            best = e;
            break;  // order is by disc, so the first hit is the smallest disc
        }
    }
    if (best >= 0) return Certificate::bridge(best);
    return std::nullopt;
}

void build_parents(ChainDecomposition& cd) {
    for (int id = 2; id <= cd.count(); ++id) {
        Chain& c = cd.chain(id);
        c.parent = cd.sbelongs[c.dst];
        internal_check(c.parent >= 1 && c.parent < id, "parent chain must have a smaller id");
        if (id >= 3) c.kind = classify(cd, id);
    }
}

ChainKind classify(const ChainDecomposition& cd, int chain_id) {
    internal_check(chain_id >= 3, "classify applies from the third chain on");
    const Chain& c = cd.chain(chain_id);
    const Chain& up = cd.chain(c.parent);
    const DfsForest& f = cd.forest;
    // s(C) lies on the parent's path, so it is comparable with t(parent):
    // a proper descendant of t(parent) makes C nested, otherwise interlacing.
    if (f.disc[c.src] > f.disc[up.dst]) {
        internal_check(f.is_ancestor(up.dst, c.src), "chain source not comparable with parent target");
        return ChainKind::Nested;
    }
    internal_check(f.is_ancestor(c.src, up.dst), "chain source not comparable with parent target");
    internal_check(f.is_ancestor(up.src, c.src), "chain source above parent source");
    return ChainKind::Interlacing;
}

void serialize_chains(const ChainDecomposition& cd, std::ostream& out) {
    for (const Chain& c : cd.chains) {
        out << c.id << ' ' << c.src << ' ' << c.dst << ' ' << to_string(c.kind) << ' '
            << c.parent << ':';
        out << ' ' << c.back_edge;
        for (int e : c.tree_edges) out << ' ' << e;
        out << '\n';
    }
}

}  // namespace tec
