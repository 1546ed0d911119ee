#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "tec/certificate.hpp"
#include "tec/dfs.hpp"
#include "tec/multigraph.hpp"

namespace tec {

enum class ChainKind { Cycle, Unclassified, Interlacing, Nested };

const char* to_string(ChainKind k);

/// A chain: one back-edge followed by the tree path walked from the
/// back-edge's head towards the root until a visited vertex. src/dst are s(C)
/// and t(C); src is always an ancestor of dst.
struct Chain {
    int id = 0;  // 1-based creation index
    int src = -1;
    int dst = -1;
    int back_edge = -1;
    std::vector<int> tree_edges;  // traversal order: head of back-edge -> dst
    int parent = 0;               // parent chain id, 0 for the first chain
    ChainKind kind = ChainKind::Unclassified;

    bool is_cycle() const { return src == dst; }
};

struct ChainDecomposition {
    DfsForest forest;
    std::vector<Chain> chains;     // chains[i] is C_{i+1}
    std::vector<int> sbelongs;     // vertex -> chain id, 0 if on no chain
    std::vector<int> edge_chain;   // edge -> chain id, 0 if unassigned
    std::vector<int> pos_in_path;  // inner vertex -> index from back-edge head

    int count() const { return static_cast<int>(chains.size()); }
    const Chain& chain(int id) const { return chains[id - 1]; }
    Chain& chain(int id) { return chains[id - 1]; }
};

/// The tree-path part of a chain in ancestor order: verts[0] = t(C),
/// verts.back() = head of the back-edge. Position p (1-based) is verts[p-1];
/// the edge between positions p and p+1 is the parent edge of verts[p], and
/// the edge past the last position is the back-edge.
struct ChainPath {
    const Chain* c = nullptr;
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()); }
    int vertex_at(int pos) const { return verts[pos - 1]; }
    int edge_between(int pos, int pos_next) const;  // pos_next == pos + 1
};

ChainPath chain_path(const MultiGraph& g, const DfsForest& f, const Chain& c);

// Chain decomposition in discovery order; inner vertices of each chain are
// marked visited as it is built. Edges outside every chain keep
// edge_chain == 0 (consumed by check_2ec).
ChainDecomposition decompose(const MultiGraph& g, DfsForest forest);

// Nothing iff the graph is connected and the chains partition the edge set.
// Otherwise a disconnected witness (smallest unreached vertex) or the bridge
// (v, p(v)) for the smallest-disc vertex v whose tree edge lies in no chain.
std::optional<Certificate> check_2ec(const MultiGraph& g, const ChainDecomposition& cd);

// Sets parent pointers (the chain to which t(C) s-belongs) and classifies
// every chain from C_3 on as interlacing or nested. Requires check_2ec == nothing.
void build_parents(ChainDecomposition& cd);

// Classification of one chain id >= 3 against its parent.
ChainKind classify(const ChainDecomposition& cd, int chain_id);

// One line per chain: "id s t kind parent: e_back e_1 e_2 ...".
void serialize_chains(const ChainDecomposition& cd, std::ostream& out);

}  // namespace tec
