#include "tec/current_graph.hpp"

namespace tec {

CurrentGraph::CurrentGraph(const MultiGraph& g, const ChainDecomposition& cd)
    : g_(&g),
      cd_(&cd),
      state_(g.n, VertexState::Inactive),
      in_gc_(cd.count() + 1, 0),
      next_(g.n, -1),
      prev_(g.n, -1),
      link_of_(g.n, -1) {}

int CurrentGraph::new_link() {
    links_.push_back({});
    return static_cast<int>(links_.size()) - 1;
}

void CurrentGraph::add_first_cycle(int chain_id) {
    const Chain& c = cd_->chain(chain_id);
    internal_check(c.is_cycle() && state_[c.src] == VertexState::Inactive,
                   "first chain must be a fresh cycle");
    state_[c.src] = VertexState::Branch;
    in_gc_[chain_id] = 1;

    int id = new_link();
    Link& L = links_[id];
    L.alive = true;
    int prev = -1;
    // inner vertices in path order: back-edge head towards the root
    int v = cd_->forest.back_target(*g_, c.back_edge);
    for (size_t i = 0; i < c.tree_edges.size(); ++i) {
        state_[v] = VertexState::NonBranch;
        link_of_[v] = id;
        prev_[v] = prev;
        next_[v] = -1;
        if (prev >= 0) next_[prev] = v;
        if (L.head < 0) L.head = v;
        L.tail = v;
        ++L.size;
        prev = v;
        v = cd_->forest.parent[v];
    }
    internal_check(v == c.dst, "cycle path must close at the root");
    if (L.size == 0) L.alive = false;
}

bool CurrentGraph::is_mader_path(int chain_id) const {
    const Chain& c = cd_->chain(chain_id);
    if (state_[c.src] == VertexState::Inactive || state_[c.dst] == VertexState::Inactive)
        return false;
    if (state_[c.src] == VertexState::Branch || state_[c.dst] == VertexState::Branch)
        return true;  // a loop at a branch vertex is allowed
    return link_of_[c.src] != link_of_[c.dst];
}

void CurrentGraph::add_chain(int chain_id, bool relaxed, const Visitor& visitor) {
    const Chain& c = cd_->chain(chain_id);
    internal_check(!in_gc_[chain_id], "chain added twice");
    internal_check(state_[c.src] != VertexState::Inactive && state_[c.dst] != VertexState::Inactive,
                   "chain endpoints must be in the current graph");
    if (!relaxed) internal_check(is_mader_path(chain_id), "chain is not a Mader-path");

    if (state_[c.src] == VertexState::NonBranch) make_branch(c.src, visitor);
    if (state_[c.dst] == VertexState::NonBranch) make_branch(c.dst, visitor);
    in_gc_[chain_id] = 1;

    int id = new_link();
    Link& L = links_[id];
    L.alive = true;
    int prev = -1;
    int v = cd_->forest.back_target(*g_, c.back_edge);
    for (size_t i = 0; i < c.tree_edges.size(); ++i) {
        state_[v] = VertexState::NonBranch;
        link_of_[v] = id;
        prev_[v] = prev;
        next_[v] = -1;
        if (prev >= 0) next_[prev] = v;
        if (L.head < 0) L.head = v;
        L.tail = v;
        ++L.size;
        prev = v;
        v = cd_->forest.parent[v];
    }
    internal_check(v == c.dst, "chain path must end at its target");
    if (L.size == 0) L.alive = false;  // a bare back-edge contributes an empty link
}

void CurrentGraph::make_branch(int v, const Visitor& visitor) {
    internal_check(state_[v] == VertexState::NonBranch, "only non-branch vertices become branch");
    split_link(v, visitor);
    state_[v] = VertexState::Branch;
    link_of_[v] = -1;
    next_[v] = prev_[v] = -1;
}

void CurrentGraph::split_link(int u, const Visitor& visitor) {
    int id = link_of_[u];
    Link& L = links_[id];
    if (visitor) visitor(u);
    if (L.size == 1) {
        L.alive = false;
        L.head = L.tail = -1;
        L.size = 0;
        return;
    }
    // Lockstep walk from both ends towards u; stops as soon as one side
    // reaches it, so the walk is bounded by twice the shorter side.
    int a = L.head, b = L.tail;
    int walked = 0;
    while (a != u && b != u) {
        if (visitor) {
            visitor(a);
            visitor(b);
        }
        a = next_[a];
        b = prev_[b];
        lockstep_steps_ += 2;
        ++walked;
    }
    bool head_side_shorter;
    if (a == u && b == u) {
        // equal halves: the part containing the smaller-disc end keeps the id
        head_side_shorter = cd_->forest.disc[L.head] > cd_->forest.disc[L.tail];
    } else {
        head_side_shorter = (a == u);
    }

    int before = prev_[u], after = next_[u];
    if (head_side_shorter) {
        if (before >= 0) {
            int nid = new_link();
            Link& N = links_[nid];
            N.alive = true;
            N.head = L.head;
            N.tail = before;
            for (int w = L.head;; w = next_[w]) {
                link_of_[w] = nid;
                ++N.size;
                ++lockstep_steps_;
                if (w == before) break;
            }
            next_[before] = -1;
        }
        L.head = after;
        L.size -= walked + 1;
        if (after >= 0) prev_[after] = -1;
    } else {
        if (after >= 0) {
            int nid = new_link();
            Link& N = links_[nid];
            N.alive = true;
            N.head = after;
            N.tail = L.tail;
            for (int w = after;; w = next_[w]) {
                link_of_[w] = nid;
                ++N.size;
                ++lockstep_steps_;
                if (w == L.tail) break;
            }
            prev_[after] = -1;
        }
        L.tail = before;
        L.size -= walked + 1;
        if (before >= 0) next_[before] = -1;
    }
    if (L.size == 0) {
        L.alive = false;
        L.head = L.tail = -1;
    }
}

}  // namespace tec
