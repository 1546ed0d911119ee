#include "tec/verify.hpp"

#include <numeric>

namespace tec {

namespace {

// BFS skipping up to two edges.
bool connected_without(const MultiGraph& g, int skip1, int skip2) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (auto [w, e] : g.adj[v]) {
            if (e == skip1 || e == skip2 || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            queue.push_back(w);
        }
    }
    return reached == g.n;
}

}  // namespace

bool verify_cut(const MultiGraph& g, int e1, int e2) {
    if (e1 == e2 || e1 < 0 || e2 < 0 || e1 >= g.m() || e2 >= g.m()) return false;
    return !connected_without(g, e1, e2);
}

bool verify_bridge(const MultiGraph& g, int e) {
    if (e < 0 || e >= g.m()) return false;
    return !connected_without(g, e, -1);
}

bool verify_disconnected(const MultiGraph& g, int v) {
    if (v < 0 || v >= g.n) return false;
    if (g.n < 2) return true;
    return !connected_without(g, -1, -1);
}

const char* to_string(MaderCheck c) {
    switch (c) {
        case MaderCheck::Ok: return "ok";
        case MaderCheck::MinDegree: return "min-degree";
        case MaderCheck::Partition: return "partition";
        case MaderCheck::NotAnEar: return "not-an-ear";
        case MaderCheck::SameLinkTwice: return "same-link-twice";
        case MaderCheck::NotK23: return "not-k23";
    }
    return "?";
}

std::string MaderVerifyResult::reason() const {
    std::string s = to_string(failed);
    if (path_index >= 0) s += " at path " + std::to_string(path_index);
    return s;
}

namespace {

// Working multigraph for the reverse deconstruction. Suppression merges the
// two edges of a degree-two vertex; the union-find over original edge ids
// records which originals each live super-edge covers.
class Suppressible {
public:
    explicit Suppressible(const MultiGraph& g)
        : u_(g.m()), v_(g.m()), alive_edge_(g.m(), 1), covers_(g.m(), 1),
          super_root_(g.m()), alive_vertex_(g.n, 1), degree_(g.n, 0),
          inc_head_(g.n, -1), inc_next_(2 * g.m(), -1), inc_prev_(2 * g.m(), -1) {
        std::iota(super_root_.begin(), super_root_.end(), 0);
        for (int e = 0; e < g.m(); ++e) {
            u_[e] = g.edges[e].first;
            v_[e] = g.edges[e].second;
            attach(2 * e, u_[e]);
            attach(2 * e + 1, v_[e]);
        }
        for (int x = 0; x < g.n; ++x) degree_[x] = slot_count(x);
    }

    int find(int e) {
        while (super_root_[e] != e) {
            super_root_[e] = super_root_[super_root_[e]];
            e = super_root_[e];
            ++ops_;
        }
        return e;
    }

    bool edge_alive(int super) const { return alive_edge_[super] != 0; }
    int covers(int super) const { return covers_[super]; }
    int end_u(int super) const { return u_[super]; }
    int end_v(int super) const { return v_[super]; }
    int degree(int x) const { return degree_[x]; }
    bool is_loop(int super) const { return u_[super] == v_[super]; }
    long long ops() const { return ops_; }

    int live_vertices() const {
        int n = 0;
        for (char a : alive_vertex_) n += a;
        return n;
    }

    bool adjacent(int x, int y) const {
        for (int s = inc_head_[x]; s >= 0; s = inc_next_[s]) {
            int e = s / 2;
            if (u_[e] == y || v_[e] == y) return true;
        }
        return false;
    }

    void remove_edge(int super) {
        internal_check(alive_edge_[super], "removing a dead super-edge");
        alive_edge_[super] = 0;
        detach(2 * super);
        detach(2 * super + 1);
        degree_[u_[super]] -= is_loop(super) ? 2 : 1;
        if (!is_loop(super)) degree_[v_[super]] -= 1;
        ++ops_;
    }

    // Suppresses x if it has degree two over two distinct incident edges.
    // Live super-edges are hosted at their union-find roots; the merge keeps
    // that invariant by rooting the pair at the surviving host.
    void suppress_if_degree_two(int x) {
        if (!alive_vertex_[x] || degree_[x] != 2) return;
        int s1 = inc_head_[x];
        int s2 = inc_next_[s1];
        internal_check(s2 >= 0, "degree-two vertex has two incident slots");
        int h1 = s1 / 2, h2 = s2 / 2;
        if (h1 == h2) return;  // a bare loop: nothing to suppress
        int a = other_end(h1, x), b = other_end(h2, x);
        remove_edge(h1);
        remove_edge(h2);
        alive_vertex_[x] = 0;
        super_root_[h2] = h1;
        covers_[h1] += covers_[h2];
        u_[h1] = a;
        v_[h1] = b;
        alive_edge_[h1] = 1;
        attach(2 * h1, a);
        attach(2 * h1 + 1, b);
        degree_[a] += 1;
        degree_[b] += 1;
        ++ops_;
    }

    int other_end(int e, int x) const { return u_[e] == x ? v_[e] : u_[e]; }

private:
    void attach(int slot, int x) {
        inc_prev_[slot] = -1;
        inc_next_[slot] = inc_head_[x];
        if (inc_head_[x] >= 0) inc_prev_[inc_head_[x]] = slot;
        inc_head_[x] = slot;
    }
    void detach(int slot) {
        int p = inc_prev_[slot], n = inc_next_[slot];
        int e = slot / 2;
        int x = (slot % 2 == 0) ? u_[e] : v_[e];
        if (p >= 0) inc_next_[p] = n; else inc_head_[x] = n;
        if (n >= 0) inc_prev_[n] = p;
        inc_prev_[slot] = inc_next_[slot] = -1;
    }
    int slot_count(int x) const {
        int d = 0;
        for (int s = inc_head_[x]; s >= 0; s = inc_next_[s]) ++d;
        return d;
    }

    std::vector<int> u_, v_;
    std::vector<char> alive_edge_;
    std::vector<int> covers_;
    std::vector<int> super_root_;
    std::vector<char> alive_vertex_;
    std::vector<int> degree_;
    std::vector<int> inc_head_, inc_next_, inc_prev_;
    long long ops_ = 0;
};

}  // namespace

MaderVerifyResult verify_mader(const MultiGraph& g, const std::vector<MaderStep>& seq) {
    MaderVerifyResult res;
    auto fail = [&](MaderCheck c, int idx = -1) {
        res.failed = c;
        res.path_index = idx;
        return res;
    };

    // (a) minimum degree three
    for (int x = 0; x < g.n; ++x)
        if (g.degree(x) < 3) return fail(MaderCheck::MinDegree);

    // (b) the paths partition E(G)
    if (seq.size() < 2) return fail(MaderCheck::NotK23);
    std::vector<char> used(g.m(), 0);
    long long total = 0;
    for (const MaderStep& s : seq) {
        if (s.edges.empty()) return fail(MaderCheck::Partition);
        for (int e : s.edges) {
            if (e < 0 || e >= g.m() || used[e]) return fail(MaderCheck::Partition);
            used[e] = 1;
            ++total;
        }
    }
    if (total != g.m()) return fail(MaderCheck::Partition);

    // Reverse deconstruction with eager suppression.
    Suppressible work(g);
    for (int i = static_cast<int>(seq.size()) - 1; i >= 2; --i) {
        const MaderStep& s = seq[i];
        // (c) the path must have been reduced to a single live edge
        int super = work.find(s.edges[0]);
        for (int e : s.edges)
            if (work.find(e) != super) return fail(MaderCheck::NotAnEar, i);
        if (!work.edge_alive(super) || work.covers(super) != static_cast<int>(s.edges.size()))
            return fail(MaderCheck::NotAnEar, i);

        int a = work.end_u(super), b = work.end_v(super);
        work.remove_edge(super);

        // (d) evaluated before suppression: endpoints must not both have
        // degree two while adjacent (or equal, when the path was a loop)
        if (a == b) {
            if (work.degree(a) == 2) return fail(MaderCheck::SameLinkTwice, i);
        } else if (work.degree(a) == 2 && work.degree(b) == 2 && work.adjacent(a, b)) {
            return fail(MaderCheck::SameLinkTwice, i);
        }

        work.suppress_if_degree_two(a);
        if (a != b) work.suppress_if_degree_two(b);
    }

    // (e) what the first two paths leave behind must be a K_2^3
    res.operations = work.ops();
    if (work.live_vertices() != 2) return fail(MaderCheck::NotK23);
    int live_edges = 0;
    int x = -1, y = -1;
    for (int e = 0; e < g.m(); ++e) {
        if (work.find(e) != e || !work.edge_alive(e)) continue;
        ++live_edges;
        if (work.is_loop(e)) return fail(MaderCheck::NotK23);
        if (x < 0) {
            x = work.end_u(e);
            y = work.end_v(e);
        } else if ((work.end_u(e) != x || work.end_v(e) != y) &&
                   (work.end_u(e) != y || work.end_v(e) != x)) {
            return fail(MaderCheck::NotK23);
        }
    }
    if (live_edges != 3) return fail(MaderCheck::NotK23);
    return res;
}

bool verify_certificate(const MultiGraph& g, const Certificate& c, std::string* why) {
    auto bad = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    switch (c.kind) {
        case Certificate::Kind::Disconnected:
            return verify_disconnected(g, c.vertex) || bad("graph is connected");
        case Certificate::Kind::Bridge:
            return verify_bridge(g, c.e1) || bad("edge is not a bridge");
        case Certificate::Kind::TwoEdgeCut:
            return verify_cut(g, c.e1, c.e2) || bad("edges are not a 2-edge-cut");
        case Certificate::Kind::MaderSequence: {
            MaderVerifyResult r = verify_mader(g, c.sequence);
            return r.ok() || bad(r.reason());
        }
    }
    return bad("unknown certificate");
}

}  // namespace tec
