#include "tec/mader_linear.hpp"

#include <algorithm>
#include <numeric>

namespace tec {

namespace {

MaderStep make_step(const Chain& c) {
    MaderStep s;
    s.chain = c.id;
    s.edges.reserve(c.tree_edges.size() + 1);
    s.edges.push_back(c.back_edge);
    s.edges.insert(s.edges.end(), c.tree_edges.begin(), c.tree_edges.end());
    return s;
}

}  // namespace

std::optional<Certificate> initial_k23(const ChainDecomposition& cd, CurrentGraph& gc,
                                       int& second_chain, bool continue_mode) {
    internal_check(cd.count() >= 2, "at least two chains after the degree screen");
    const int root = cd.forest.root;
    second_chain = 2;
    if (!continue_mode && cd.chain(2).dst == root) {
        // The second chain closed a cycle in another root subtree. Look for a
        // later chain from the root that ends on C_1 and take it instead.
        second_chain = -1;
        for (int j = 3; j <= cd.count() && cd.chain(j).src == root; ++j) {
            if (cd.chain(j).dst != root && cd.sbelongs[cd.chain(j).dst] == 1) {
                second_chain = j;
                break;
            }
        }
        if (second_chain < 0) {
            // C_1's subtree hangs on a single back-edge.
            const Chain& c1 = cd.chain(1);
            return Certificate::two_edge_cut(c1.tree_edges.back(), c1.back_edge);
        }
    }
    gc.add_first_cycle(1);
    gc.add_chain(second_chain, continue_mode);
    return std::nullopt;
}

std::pair<std::vector<Segment>, std::vector<int>> collect_segments(
    CurrentGraph& gc, const ChainDecomposition& cd, int i, const std::vector<int>& positions) {
    // Standalone variant with per-call scratch; the engine below keeps the
    // mark array across phases.
    std::vector<int> seg_of(cd.count() + 1, 0);
    std::vector<Segment> segments;
    std::vector<int> added;
    std::vector<int> walk;

    auto source_pos = [&](int chain_id) {
        int p = positions[cd.chain(chain_id).src];
        internal_check(p >= 2, "segment attachment below the chain target");
        return p;
    };

    for (int c = 2; c <= cd.count(); ++c) {
        if (cd.sbelongs[cd.chain(c).src] != i || gc.chain_added(c)) continue;
        walk.clear();
        int d = c;
        while (!gc.chain_added(d) && seg_of[d] == 0) {
            walk.push_back(d);
            d = cd.chain(d).parent;
        }
        if (walk.empty()) continue;
        if (gc.chain_added(d)) {
            int root_chain = walk.back();
            if (cd.chain(root_chain).kind != ChainKind::Nested) {
                for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
                    gc.add_chain(*it);
                    added.push_back(*it);
                }
                continue;
            }
            Segment s;
            s.root_chain = root_chain;
            s.kind = SegmentKind::NestedRoot;
            segments.push_back(std::move(s));
            int sid = static_cast<int>(segments.size());
            Segment& seg = segments.back();
            int tpos = positions[cd.chain(root_chain).dst];
            internal_check(tpos >= 2, "nested root target below position 2");
            seg.attachments.push_back(tpos);
            for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
                seg_of[*it] = sid;
                seg.members.push_back(*it);
                seg.attachments.push_back(source_pos(*it));
            }
        } else {
            Segment& seg = segments[seg_of[d] - 1];
            int sid = seg_of[d];
            for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
                seg_of[*it] = sid;
                seg.members.push_back(*it);
                seg.attachments.push_back(source_pos(*it));
            }
        }
    }
    for (Segment& s : segments) {
        std::sort(s.members.begin(), s.members.end());
        std::sort(s.attachments.begin(), s.attachments.end());
        s.attachments.erase(std::unique(s.attachments.begin(), s.attachments.end()),
                            s.attachments.end());
    }
    return {std::move(segments), std::move(added)};
}

void attachment_intervals(const Segment& s, int tag, std::vector<Interval>& out) {
    const auto& a = s.attachments;
    const int k = static_cast<int>(a.size()) - 1;
    for (int l = 1; l <= k; ++l)
        out.push_back({a[0], a[l], tag, static_cast<int>(out.size())});
    for (int l = 1; l < k; ++l)
        out.push_back({a[l], a[k], tag, static_cast<int>(out.size())});
}

SegmentOrdering order_segments(const std::vector<Interval>& intervals, int segment_count) {
    const int r_tag = segment_count;
    std::vector<int> root(segment_count + 1);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) {
            root[x] = root[root[x]];
            x = root[x];
        }
        return x;
    };

    std::vector<std::vector<int>> adj(segment_count + 1);
    for (auto [x, y] : spanning_forest(intervals)) {
        int a = intervals[x].tag, b = intervals[y].tag;
        if (a == b) continue;
        int ra = find(a), rb = find(b);
        if (ra != rb) root[ra] = rb;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    SegmentOrdering out;
    // Preorder over the spanning forest, starting from R.
    std::vector<char> visited(segment_count + 1, 0);
    std::vector<int> stack{r_tag};
    visited[r_tag] = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        if (t != r_tag) out.order.push_back(t);
        for (int w : adj[t])
            if (!visited[w]) {
                visited[w] = 1;
                stack.push_back(w);
            }
    }
    // Group what is left by overlap component, smallest segment id first.
    std::vector<int> comp_slot(segment_count + 1, -1);
    for (int s = 0; s < segment_count; ++s) {
        if (visited[s]) continue;
        int r = find(s);
        if (comp_slot[r] < 0) {
            comp_slot[r] = static_cast<int>(out.cut_components.size());
            out.cut_components.emplace_back();
        }
        out.cut_components[comp_slot[r]].push_back(s);
    }
    return out;
}

std::pair<int, int> interval_cut_edges(const ChainPath& path, int lo, int hi) {
    internal_check(lo >= 2 && hi >= lo && hi <= path.length(), "cut span out of range");
    return {path.edge_between(lo - 1, lo), path.edge_between(hi, hi + 1)};
}

Certificate extract_cut(const ChainPath& path, int lo, int hi) {
    auto [e1, e2] = interval_cut_edges(path, lo, hi);
    return Certificate::two_edge_cut(e1, e2);
}

namespace {

class PhaseEngine {
public:
    PhaseEngine(const MultiGraph& g, const ChainDecomposition& cd, const LinearOptions& opt)
        : g_(g), cd_(cd), opt_(opt), gc_(g, cd), seg_of_(cd.count() + 1, 0), pos_of_(g.n, 0) {
        bucket_.assign(cd.count() + 1, {});
        for (int c = 2; c <= cd.count(); ++c)
            bucket_[cd_.sbelongs[cd_.chain(c).src]].push_back(c);
    }

    LinearRunResult run() {
        LinearRunResult res;
        int second = 0;
        if (auto cert = initial_k23(cd_, gc_, second, opt_.continue_on_cut)) {
            res.cut = std::move(*cert);
            return res;
        }
        res.sequence.push_back(make_step(cd_.chain(1)));
        res.sequence.push_back(make_step(cd_.chain(second)));
        for (int i = 1; i <= cd_.count(); ++i) {
            internal_check(gc_.chain_added(i), "current chain missing from G_c at phase start");
            phase(i, res);
            if (opt_.after_phase) opt_.after_phase(i, gc_);
            if (res.cut && !opt_.continue_on_cut) return res;
        }
        return res;
    }

private:
    void add_to_gc(int chain_id, LinearRunResult& res, bool relaxed) {
        gc_.add_chain(chain_id, relaxed);
        res.sequence.push_back(make_step(cd_.chain(chain_id)));
    }

    void phase(int i, LinearRunResult& res) {
        const ChainPath path = chain_path(g_, cd_.forest, cd_.chain(i));
        for (int p = 1; p <= path.length(); ++p) pos_of_[path.vertex_at(p)] = p;

        // Part I: walk the chains sourced on C_i; all-interlacing paths go in
        // immediately, the rest form nested-root segments.
        segments_.clear();
        for (int c : bucket_[i]) {
            if (gc_.chain_added(c)) continue;
            internal_check(seg_of_[c] == 0 || gc_.chain_added(c), "bucket chain pre-marked");
            walk_.clear();
            int d = c;
            while (!gc_.chain_added(d) && seg_of_[d] == 0) {
                walk_.push_back(d);
                d = cd_.chain(d).parent;
            }
            internal_check(!walk_.empty(), "empty segment walk");
            if (gc_.chain_added(d)) {
                int root_chain = walk_.back();
                if (cd_.chain(root_chain).kind != ChainKind::Nested) {
                    for (auto it = walk_.rbegin(); it != walk_.rend(); ++it)
                        add_to_gc(*it, res, false);
                    continue;
                }
                segments_.emplace_back();
                Segment& seg = segments_.back();
                seg.root_chain = root_chain;
                int sid = static_cast<int>(segments_.size());
                seg.attachments.push_back(pos_of_[cd_.chain(root_chain).dst]);
                join_segment(sid, seg);
            } else {
                join_segment(seg_of_[d], segments_[seg_of_[d] - 1]);
            }
        }

        if (!segments_.empty()) part_two(i, path, res);

        for (int p = 1; p <= path.length(); ++p) pos_of_[path.vertex_at(p)] = 0;
    }

    void join_segment(int sid, Segment& seg) {
        for (auto it = walk_.rbegin(); it != walk_.rend(); ++it) {
            seg_of_[*it] = sid;
            seg.members.push_back(*it);
            int p = pos_of_[cd_.chain(*it).src];
            internal_check(p >= 2, "attachment position out of range");
            seg.attachments.push_back(p);
        }
    }

    void part_two(int i, const ChainPath& path, LinearRunResult& res) {
        intervals_.clear();
        for (size_t s = 0; s < segments_.size(); ++s) {
            Segment& seg = segments_[s];
            std::sort(seg.members.begin(), seg.members.end());
            std::sort(seg.attachments.begin(), seg.attachments.end());
            seg.attachments.erase(
                std::unique(seg.attachments.begin(), seg.attachments.end()),
                seg.attachments.end());
            attachment_intervals(seg, static_cast<int>(s), intervals_);
        }
        const int r_tag = static_cast<int>(segments_.size());
        for (int p = 1; p <= path.length(); ++p)
            if (gc_.state(path.vertex_at(p)) == VertexState::Branch)
                intervals_.push_back({0, p, r_tag, static_cast<int>(intervals_.size())});

        SegmentOrdering ord = order_segments(intervals_, r_tag);
        for (int s : ord.order)
            for (int member : segments_[s].members) add_to_gc(member, res, false);

        if (ord.cut_components.empty()) return;

        // Cuts: the extremal attachment positions of every component not
        // reached from R certify a 2-edge-cut on C_i.
        PhaseCutRecord record;
        record.chain = i;
        for (const auto& comp : ord.cut_components) {
            int lo = path.length() + 1, hi = 0;
            for (int s : comp) {
                lo = std::min(lo, segments_[s].attachments.front());
                hi = std::max(hi, segments_[s].attachments.back());
            }
            record.spans.emplace_back(lo, hi);
        }
        if (!res.cut) res.cut = extract_cut(path, record.spans[0].first, record.spans[0].second);
        if (!opt_.continue_on_cut) return;

        for (int p = 1; p <= path.length(); ++p)
            if (gc_.state(path.vertex_at(p)) == VertexState::Branch)
                record.branch_positions.push_back(p);
        res.cut_records.push_back(std::move(record));

        // Keep building the subdivision: the blocked segments are still ears.
        for (const auto& comp : ord.cut_components)
            for (int s : comp)
                for (int member : segments_[s].members) add_to_gc(member, res, true);
    }

    const MultiGraph& g_;
    const ChainDecomposition& cd_;
    LinearOptions opt_;
    CurrentGraph gc_;
    std::vector<std::vector<int>> bucket_;
    std::vector<int> seg_of_;
    std::vector<int> pos_of_;
    std::vector<Segment> segments_;
    std::vector<Interval> intervals_;
    std::vector<int> walk_;
};

}  // namespace

LinearRunResult run_linear_phases(const MultiGraph& g, const ChainDecomposition& cd,
                                  const LinearOptions& opt) {
    return PhaseEngine(g, cd, opt).run();
}

Certificate certify_linear(const MultiGraph& g, int root) {
    if (auto cert = min_degree_screen(g)) return *cert;
    ChainDecomposition cd = decompose(g, dfs(g, root));
    if (auto cert = check_2ec(g, cd)) return *cert;
    build_parents(cd);
    LinearRunResult res = run_linear_phases(g, cd);
    if (res.cut) return *res.cut;
    return Certificate::mader(std::move(res.sequence));
}

}  // namespace tec
