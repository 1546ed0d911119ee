#include "tec/greedy.hpp"

#include <deque>
#include <list>

#include "tec/chains.hpp"
#include "tec/current_graph.hpp"
#include "tec/dfs.hpp"
#include "tec/mader_linear.hpp"

namespace tec {

namespace {

class Greedy {
public:
    Greedy(const MultiGraph& g, const ChainDecomposition& cd)
        : g_(g),
          cd_(cd),
          gc_(g, cd),
          children_(cd.count() + 1),
          pending_(g.n),
          where_(cd.count() + 1),
          queued_(cd.count() + 1, 0),
          registered_(cd.count() + 1, 0) {
        for (int c = 2; c <= cd_.count(); ++c) children_[cd_.chain(c).parent].push_back(c);
    }

    Certificate run() {
        int second = 0;
        if (auto cert = initial_k23(cd_, gc_, second, false)) return *cert;
        std::vector<MaderStep> seq;
        seq.push_back(step(1));
        seq.push_back(step(second));
        process_children(1);
        process_children(second);

        while (!addable_.empty()) {
            int c = addable_.front();
            addable_.pop_front();
            const Chain& chain = cd_.chain(c);
            internal_check(gc_.is_mader_path(c), "addability is monotone");
            auto visitor = [this](int w) { reconsider(w); };
            if (gc_.state(chain.src) == VertexState::NonBranch) gc_.make_branch(chain.src, visitor);
            if (gc_.state(chain.dst) == VertexState::NonBranch) gc_.make_branch(chain.dst, visitor);
            gc_.add_chain(c);
            seq.push_back(step(c));
            process_children(c);
        }
        for (int c = 1; c <= cd_.count(); ++c)
            if (!gc_.chain_added(c)) return link_cut();
        return Certificate::mader(std::move(seq));
    }

private:
    MaderStep step(int c) const {
        MaderStep s;
        s.chain = c;
        s.edges.push_back(cd_.chain(c).back_edge);
        const auto& t = cd_.chain(c).tree_edges;
        s.edges.insert(s.edges.end(), t.begin(), t.end());
        return s;
    }

    void enqueue(int c) {
        if (queued_[c]) return;
        queued_[c] = 1;
        addable_.push_back(c);
    }

    void consider(int c) {
        if (queued_[c] || registered_[c] || gc_.chain_added(c)) return;
        const Chain& chain = cd_.chain(c);
        internal_check(gc_.state(chain.src) != VertexState::Inactive &&
                           gc_.state(chain.dst) != VertexState::Inactive,
                       "child endpoints must lie in the current graph");
        if (gc_.is_mader_path(c)) {
            enqueue(c);
            return;
        }
        // both endpoints are inner vertices of one link: wait at both ends
        internal_check(chain.src != chain.dst, "cycle chains are always addable");
        pending_[chain.src].push_front(c);
        where_[c].first = pending_[chain.src].begin();
        pending_[chain.dst].push_front(c);
        where_[c].second = pending_[chain.dst].begin();
        registered_[c] = 1;
    }

    void reconsider(int w) {
        auto it = pending_[w].begin();
        while (it != pending_[w].end()) {
            int c = *it++;  // advance first: the erase below may drop *this* entry
            if (!gc_.is_mader_path(c)) continue;
            const Chain& chain = cd_.chain(c);
            pending_[chain.src].erase(where_[c].first);
            pending_[chain.dst].erase(where_[c].second);
            registered_[c] = 0;
            enqueue(c);
        }
    }

    void process_children(int c) {
        for (int child : children_[c]) consider(child);
    }

    // Every remaining link with an inner vertex certifies a cut; take the one
    // with the smallest live id and return its extremal edges.
    Certificate link_cut() {
        for (int id = 0; id < gc_.link_slots(); ++id) {
            const auto& L = gc_.link(id);
            if (!L.alive || L.size == 0) continue;
            return Certificate::two_edge_cut(edge_towards_source(L.head),
                                             edge_towards_target(L.tail));
        }
        internal_check(false, "no link with an inner vertex despite unadded chains");
        return {};
    }

    int edge_towards_source(int v) const {
        int c = cd_.sbelongs[v];
        int idx = cd_.pos_in_path[v];
        return idx == 0 ? cd_.chain(c).back_edge : cd_.chain(c).tree_edges[idx - 1];
    }
    int edge_towards_target(int v) const {
        return cd_.chain(cd_.sbelongs[v]).tree_edges[cd_.pos_in_path[v]];
    }

    const MultiGraph& g_;
    const ChainDecomposition& cd_;
    CurrentGraph gc_;
    std::vector<std::vector<int>> children_;
    std::vector<std::list<int>> pending_;
    std::vector<std::pair<std::list<int>::iterator, std::list<int>::iterator>> where_;
    std::vector<char> queued_, registered_;
    std::deque<int> addable_;

public:
    long long lockstep_steps() const { return gc_.lockstep_steps(); }
};

}  // namespace

Certificate certify_greedy(const MultiGraph& g, int root, GreedyStats* stats) {
    if (auto cert = min_degree_screen(g)) return *cert;
    ChainDecomposition cd = decompose(g, dfs(g, root));
    if (auto cert = check_2ec(g, cd)) return *cert;
    build_parents(cd);
    Greedy greedy(g, cd);
    Certificate cert = greedy.run();
    if (stats) stats->lockstep_steps = greedy.lockstep_steps();
    return cert;
}

}  // namespace tec
