#include "tec/cactus.hpp"

#include <algorithm>
#include <ostream>

#include "tec/dfs.hpp"

namespace tec {

int Cactus::blob_of(int v) const {
    for (size_t b = 0; b < blobs.size(); ++b)
        for (int x : blobs[b])
            if (x == v) return static_cast<int>(b);
    return -1;
}

std::vector<std::vector<int>> cut_block_positions(std::vector<std::pair<int, int>> spans,
                                                  const std::vector<int>& branch_positions) {
    std::vector<std::vector<int>> blocks;
    if (spans.empty()) return blocks;
    std::sort(spans.begin(), spans.end());

    // The spans of distinct overlap components form a laminar family with
    // pairwise distinct endpoints and no branch vertex on them.
    for (size_t i = 0; i + 1 < spans.size(); ++i) {
        auto [a, b] = spans[i];
        auto [c, d] = spans[i + 1];
        internal_check(a < c, "span endpoints must be distinct");
        internal_check(d < b || c > b, "spans must be laminar");
        internal_check(b != c && d != b, "spans must not share endpoints");
    }
    for (auto [a, b] : spans) {
        auto it = std::lower_bound(branch_positions.begin(), branch_positions.end(), a);
        internal_check(it == branch_positions.end() || *it > b,
                       "no branch vertex may lie on a cut span");
    }

    std::vector<char> used(spans.size(), 0);
    // contact partner lookup: a span starting at hi+1 continues the block
    std::vector<std::pair<int, int>> by_lo;  // (lo, index)
    std::vector<int> rights;
    by_lo.reserve(spans.size());
    rights.reserve(spans.size());
    for (size_t i = 0; i < spans.size(); ++i) by_lo.emplace_back(spans[i].first, static_cast<int>(i));
    for (const auto& s : spans) rights.push_back(s.second);
    std::sort(rights.begin(), rights.end());
    auto find_lo = [&](int lo) -> int {
        auto it = std::lower_bound(by_lo.begin(), by_lo.end(), std::make_pair(lo, -1));
        if (it == by_lo.end() || it->first != lo) return -1;
        return it->second;
    };

    for (size_t i = 0; i < spans.size(); ++i) {
        if (used[i]) continue;
        // a block head has no span ending just before it
        if (std::binary_search(rights.begin(), rights.end(), spans[i].first - 1)) continue;
        std::vector<int> positions{spans[i].first - 1};
        int cur = static_cast<int>(i);
        while (cur >= 0) {
            used[cur] = 1;
            positions.push_back(spans[cur].second);
            cur = find_lo(spans[cur].second + 1);
        }
        blocks.push_back(std::move(positions));
    }
    for (char u : used) internal_check(u, "every span belongs to one block");
    return blocks;
}

std::vector<CutBlock> cut_blocks(const ChainPath& path,
                                 const std::vector<std::pair<int, int>>& spans,
                                 const std::vector<int>& branch_positions) {
    std::vector<CutBlock> out;
    for (const auto& positions : cut_block_positions(spans, branch_positions)) {
        CutBlock b;
        b.chain = path.c->id;
        for (int p : positions) b.edges.push_back(path.edge_between(p, p + 1));
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

struct BlobStore {
    std::vector<std::vector<int>> members;
    std::vector<int> blob_of;

    explicit BlobStore(int n) : blob_of(n, -1) {}
    int fresh() {
        members.emplace_back();
        return static_cast<int>(members.size()) - 1;
    }
    void assign(int v, int b) {
        internal_check(blob_of[v] < 0 || v >= 0, "vertex assigned twice");
        blob_of[v] = b;
        members[b].push_back(v);
    }
};

}  // namespace

BuildCactusResult build_cactus(const MultiGraph& g, int root) {
    BuildCactusResult out;
    {
        ChainDecomposition probe = decompose(g, dfs(g, root));
        if (auto cert = check_2ec(g, probe)) {
            out.not_2ec = std::move(*cert);
            return out;
        }
    }

    // Attach a private triangle to every degree-two vertex; the triangle
    // forms a one-attachment segment on the vertex's chain, so its two
    // incident edges surface as a cut block.
    MultiGraph aug = g;
    const int n_real = g.n;
    for (int v = 0; v < n_real; ++v) {
        if (g.degree(v) != 2) continue;
        int x = aug.n++;
        int y = aug.n++;
        aug.edges.emplace_back(v, x);
        aug.edges.emplace_back(x, y);
        aug.edges.emplace_back(y, v);
    }
    aug.build_adjacency();

    ChainDecomposition cd = decompose(aug, dfs(aug, root));
    internal_check(!check_2ec(aug, cd).has_value(), "augmentation preserves 2-edge-connectivity");
    build_parents(cd);

    LinearOptions opt;
    opt.continue_on_cut = true;
    LinearRunResult run = run_linear_phases(aug, cd, opt);

    std::vector<const PhaseCutRecord*> record_of(cd.count() + 1, nullptr);
    for (const PhaseCutRecord& r : run.cut_records) record_of[r.chain] = &r;

    BlobStore store(aug.n);
    Cactus& cx = out.cactus;
    store.assign(cd.forest.root, store.fresh());

    for (int i = 1; i <= cd.count(); ++i) {
        const Chain& c = cd.chain(i);
        const int base = store.blob_of[c.src];
        internal_check(base >= 0 && base == store.blob_of[c.dst],
                       "chain endpoints must share a blob");
        ChainPath path = chain_path(aug, cd.forest, c);
        const PhaseCutRecord* rec = record_of[i];
        if (!rec) {
            for (int p = 2; p <= path.length(); ++p) store.assign(path.vertex_at(p), base);
            continue;
        }

        auto blocks = cut_block_positions(rec->spans, rec->branch_positions);
        if (rec->chain == 1 && !blocks.empty()) {
            // keep deterministic block order along the chain
        }
        // event per cut-edge position: (block, index within block)
        std::vector<std::pair<int, int>> event(path.length() + 1, {-1, -1});
        for (size_t b = 0; b < blocks.size(); ++b)
            for (size_t j = 0; j < blocks[b].size(); ++j) {
                internal_check(event[blocks[b][j]].first < 0, "cut edge in two blocks");
                event[blocks[b][j]] = {static_cast<int>(b), static_cast<int>(j)};
            }

        std::vector<int> parent_blob(blocks.size(), -1);
        std::vector<std::vector<int>> gap_blobs(blocks.size());
        std::vector<std::pair<int, int>> stack;  // (block, blob of its current gap)
        auto on_edge = [&](int pos) {
            auto [b, j] = event[pos];
            if (b < 0) return;
            const int last = static_cast<int>(blocks[b].size()) - 1;
            if (j > 0) {
                internal_check(!stack.empty() && stack.back().first == b,
                               "cut blocks must nest along the chain");
                stack.pop_back();
            }
            if (j < last) {
                parent_blob[b] = parent_blob[b] >= 0
                                     ? parent_blob[b]
                                     : (stack.empty() ? base : stack.back().second);
                int blob = store.fresh();
                gap_blobs[b].push_back(blob);
                stack.emplace_back(b, blob);
            } else if (last == 0) {
                internal_check(false, "a block has at least two edges");
            }
        };
        for (int p = 2; p <= path.length(); ++p) {
            on_edge(p - 1);
            store.assign(path.vertex_at(p), stack.empty() ? base : stack.back().second);
        }
        on_edge(path.length());
        internal_check(stack.empty(), "all blocks closed at the chain's end");

        for (size_t b = 0; b < blocks.size(); ++b) {
            const auto& pos = blocks[b];
            const auto& gaps = gap_blobs[b];
            int cycle = cx.cycles++;
            int from = parent_blob[b];
            for (size_t j = 0; j < pos.size(); ++j) {
                int to = j + 1 < pos.size() ? gaps[j] : parent_blob[b];
                cx.cedges.push_back({from, to, path.edge_between(pos[j], pos[j] + 1), cycle});
                from = to;
            }
            CutBlock cb;
            cb.chain = i;
            for (int p : pos) cb.edges.push_back(path.edge_between(p, p + 1));
            out.blocks.push_back(std::move(cb));
        }
    }

    // Drop the helper vertices; every blob keeps at least one real vertex.
    cx.blobs.assign(store.members.size(), {});
    for (size_t b = 0; b < store.members.size(); ++b)
        for (int v : store.members[b])
            if (v < n_real) cx.blobs[b].push_back(v);
    for (auto& blob : cx.blobs) {
        internal_check(!blob.empty(), "no empty blobs");
        std::sort(blob.begin(), blob.end());
    }
    return out;
}

std::vector<std::vector<int>> three_edge_components(const Cactus& cx) { return cx.blobs; }

namespace {

// Outgoing cactus edges of a blob paired by cycle id; each pair is the
// (u, v) of the paths leaving and re-entering the blob.
struct Pairing {
    std::vector<std::pair<int, int>> joins;  // g-vertex pairs, u may equal v
    bool ok = true;
};

Pairing pair_outgoing(const MultiGraph& g, const Cactus& cx, const std::vector<int>& blob_of,
                      int blob) {
    Pairing p;
    std::map<int, std::vector<int>> by_cycle;  // cycle -> local endpoints in the blob
    for (const Cactus::Edge& ce : cx.cedges) {
        if (ce.blob_a != blob && ce.blob_b != blob) continue;
        auto [u, v] = g.edges[ce.g_edge];
        int mine = blob_of[u] == blob ? u : v;
        if (blob_of[mine] != blob) {
            p.ok = false;
            return p;
        }
        by_cycle[ce.cycle].push_back(mine);
    }
    for (auto& [cycle, ends] : by_cycle) {
        if (ends.size() != 2) {
            p.ok = false;
            return p;
        }
        p.joins.emplace_back(ends[0], ends[1]);
    }
    return p;
}

std::vector<int> blob_map(const MultiGraph& g, const Cactus& cx) {
    std::vector<int> blob_of(g.n, -1);
    for (size_t b = 0; b < cx.blobs.size(); ++b)
        for (int v : cx.blobs[b]) {
            if (v < 0 || v >= g.n || blob_of[v] >= 0) return {};
            blob_of[v] = static_cast<int>(b);
        }
    for (int v = 0; v < g.n; ++v)
        if (blob_of[v] < 0) return {};
    return blob_of;
}

}  // namespace

BlobGraph blob_graph(const MultiGraph& g, const Cactus& cx, int blob) {
    std::vector<int> blob_of = blob_map(g, cx);
    internal_check(!blob_of.empty(), "blob_graph needs a valid partition");
    BlobGraph out;
    out.vertices = cx.blobs[blob];  // ascending
    std::vector<int> local(g.n, -1);
    for (size_t i = 0; i < out.vertices.size(); ++i) local[out.vertices[i]] = static_cast<int>(i);
    out.graph.n = static_cast<int>(out.vertices.size());
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        if (blob_of[u] == blob && blob_of[v] == blob)
            out.graph.edges.emplace_back(local[u], local[v]);
    }
    Pairing p = pair_outgoing(g, cx, blob_of, blob);
    internal_check(p.ok, "blob_graph needs consistent outgoing pairings");
    for (auto [u, v] : p.joins)
        if (u != v) out.graph.edges.emplace_back(local[u], local[v]);
    out.graph.build_adjacency();
    return out;
}

std::map<int, std::vector<MaderStep>> blob_certificates(const MultiGraph& g, const Cactus& cx) {
    std::map<int, std::vector<MaderStep>> certs;
    for (size_t b = 0; b < cx.blobs.size(); ++b) {
        if (cx.blobs[b].size() < 2) continue;
        BlobGraph bg = blob_graph(g, cx, static_cast<int>(b));
        Certificate cert = certify_linear(bg.graph);
        internal_check(cert.is_mader(), "every blob contracts to a 3-edge-connected graph");
        certs[static_cast<int>(b)] = std::move(cert.sequence);
    }
    return certs;
}

CactusVerifyResult verify_cactus(const MultiGraph& g, const Cactus& cx,
                                 const std::map<int, std::vector<MaderStep>>& blob_certs) {
    auto fail = [](const std::string& r) { return CactusVerifyResult{false, r}; };

    // (b) blobs partition V(G), none empty
    for (const auto& blob : cx.blobs)
        if (blob.empty()) return fail("(b) empty blob");
    std::vector<int> blob_of = blob_map(g, cx);
    if (blob_of.empty()) return fail("(b) blobs do not partition the vertex set");
    const int nb = static_cast<int>(cx.blobs.size());

    // (c) cross-blob edges of G equal the cactus edge list
    std::vector<std::array<int, 3>> cross, claimed;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        if (blob_of[u] != blob_of[v])
            cross.push_back({std::min(blob_of[u], blob_of[v]), std::max(blob_of[u], blob_of[v]), e});
    }
    for (const Cactus::Edge& ce : cx.cedges) {
        if (ce.blob_a < 0 || ce.blob_a >= nb || ce.blob_b < 0 || ce.blob_b >= nb)
            return fail("(a) cactus edge endpoint out of range");
        if (ce.blob_a == ce.blob_b) return fail("(a) cactus edge is a loop");
        if (ce.g_edge < 0 || ce.g_edge >= g.m()) return fail("(c) cactus edge names no graph edge");
        claimed.push_back({std::min(ce.blob_a, ce.blob_b), std::max(ce.blob_a, ce.blob_b), ce.g_edge});
    }
    std::sort(cross.begin(), cross.end());
    std::sort(claimed.begin(), claimed.end());
    if (cross != claimed) return fail("(c) cross-blob edges differ from the cactus edge list");

    // (a) every cactus edge lies on exactly one cycle; claimed cycle ids must
    // match the recomputed cycles
    std::vector<std::vector<std::pair<int, int>>> badj(nb);  // (blob, cedge index)
    for (size_t i = 0; i < cx.cedges.size(); ++i) {
        const auto& ce = cx.cedges[i];
        badj[ce.blob_a].emplace_back(ce.blob_b, static_cast<int>(i));
        badj[ce.blob_b].emplace_back(ce.blob_a, static_cast<int>(i));
    }
    std::vector<int> parent(nb, -1), parent_edge(nb, -1), depth(nb, -1);
    std::vector<int> stack{0};
    depth[0] = 0;
    std::vector<int> preorder;
    while (!stack.empty()) {
        int b = stack.back();
        stack.pop_back();
        preorder.push_back(b);
        for (auto [w, i] : badj[b])
            if (depth[w] < 0 && i != parent_edge[b]) {
                depth[w] = depth[b] + 1;
                parent[w] = b;
                parent_edge[w] = i;
                stack.push_back(w);
            }
    }
    for (int b = 0; b < nb; ++b)
        if (depth[b] < 0) return fail("(a) cactus is disconnected");
    std::vector<int> mark(cx.cedges.size(), -1);
    int cycles = 0;
    for (size_t i = 0; i < cx.cedges.size(); ++i) {
        if (static_cast<int>(i) == parent_edge[cx.cedges[i].blob_a] ||
            static_cast<int>(i) == parent_edge[cx.cedges[i].blob_b])
            continue;  // tree edge
        int cyc = cycles++;
        if (mark[i] >= 0) return fail("(a) edge on two cycles");
        mark[i] = cyc;
        int u = cx.cedges[i].blob_a, v = cx.cedges[i].blob_b;
        while (u != v) {
            if (depth[u] < depth[v]) std::swap(u, v);
            int pe = parent_edge[u];
            if (pe < 0 || mark[pe] >= 0) return fail("(a) edge on two cycles or none");
            mark[pe] = cyc;
            u = parent[u];
        }
    }
    for (int m : mark)
        if (m < 0) return fail("(a) edge on no cycle");
    // claimed ids consistent with recomputed cycles
    std::map<int, int> claimed_of;  // recomputed -> claimed
    std::map<int, int> seen_claimed;
    for (size_t i = 0; i < cx.cedges.size(); ++i) {
        auto it = claimed_of.find(mark[i]);
        if (it == claimed_of.end()) {
            if (!seen_claimed.emplace(cx.cedges[i].cycle, mark[i]).second)
                return fail("(a) one claimed cycle id spans two cycles");
            claimed_of.emplace(mark[i], cx.cedges[i].cycle);
        } else if (it->second != cx.cedges[i].cycle) {
            return fail("(a) cycle ids disagree with the cactus cycles");
        }
    }
    if (cx.cycles != cycles) return fail("(a) cycle count mismatch");

    // (d) every multi-vertex blob contracts to a 3-edge-connected graph
    for (int b = 0; b < nb; ++b) {
        Pairing p = pair_outgoing(g, cx, blob_of, b);
        if (!p.ok) return fail("(d) outgoing edges do not pair up by cycle");
        if (cx.blobs[b].size() < 2) continue;
        auto it = blob_certs.find(b);
        if (it == blob_certs.end())
            return fail("(d) missing certificate for blob " + std::to_string(b));
        BlobGraph bg = blob_graph(g, cx, b);
        MaderVerifyResult r = verify_mader(bg.graph, it->second);
        if (!r.ok())
            return fail("(d) blob " + std::to_string(b) + " certificate rejected: " + r.reason());
    }
    // (e) maximality is structural: every cactus edge lies on a cycle of
    // length >= 2, hence in a 2-edge-cut of the cactus.
    return {true, ""};
}

void write_cactus(const Cactus& cx, std::ostream& out) {
    for (size_t b = 0; b < cx.blobs.size(); ++b) {
        out << "blob " << b << ':';
        for (int v : cx.blobs[b]) out << ' ' << v;
        out << '\n';
    }
    for (const Cactus::Edge& ce : cx.cedges)
        out << "cedge " << ce.blob_a << ' ' << ce.blob_b << ' ' << ce.g_edge << ' ' << ce.cycle
            << '\n';
}

}  // namespace tec
