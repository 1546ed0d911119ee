#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tec/certificate.hpp"
#include "tec/chains.hpp"
#include "tec/mader_linear.hpp"
#include "tec/multigraph.hpp"

namespace tec {

/// Cactus representation of all 2-edge-cuts: blobs partition V(G) into the
/// 3-edge-connected components, and the cactus edges are in bijection with
/// the edges of G lying in some 2-edge-cut. Every cactus edge is on exactly
/// one cycle.
struct Cactus {
    struct Edge {
        int blob_a = 0, blob_b = 0;
        int g_edge = -1;
        int cycle = 0;
    };
    std::vector<std::vector<int>> blobs;
    std::vector<Edge> cedges;
    int cycles = 0;

    int blob_of(int v) const;  // linear scan; verify builds its own map
};

/// Edges on one chain that pairwise form 2-edge-cuts, in position order.
struct CutBlock {
    int chain = 0;
    std::vector<int> edges;  // g-edge ids
};

// Blocks of the transitive closure of the contact relation over a laminar
// span family (two spans contact when one begins right after the other
// ends). Returns the cut-edge positions of each block, ascending; the edge
// between positions p and p+1 is reported as p, the chain's back-edge as the
// path length. `branch_positions` (ascending) feeds the no-branch-inside-a-
// span consistency check.
std::vector<std::vector<int>> cut_block_positions(std::vector<std::pair<int, int>> spans,
                                                  const std::vector<int>& branch_positions);

std::vector<CutBlock> cut_blocks(const ChainPath& path,
                                 const std::vector<std::pair<int, int>>& spans,
                                 const std::vector<int>& branch_positions);

struct BuildCactusResult {
    std::optional<Certificate> not_2ec;  // set when the input has no cactus
    Cactus cactus;
    std::vector<CutBlock> blocks;  // all cut blocks, grouped per chain

    bool ok() const { return !not_2ec.has_value(); }
};

// Runs the phase algorithm in continue-on-cut mode and folds the per-chain
// cut blocks into a cactus. Degree-two vertices are handled by attaching a
// private triangle before the run; the helper vertices never reach the
// output. Inputs that are not 2-edge-connected yield the witness certificate.
BuildCactusResult build_cactus(const MultiGraph& g, int root = 0);

// The blob partition, blobs already dense.
std::vector<std::vector<int>> three_edge_components(const Cactus& cx);

/// Contracted graph of one blob: its internal edges plus one edge per
/// same-cycle pairing of outgoing cactus edges (pairings meeting the blob at
/// a single vertex contribute nothing). Local vertex ids follow ascending
/// graph ids.
struct BlobGraph {
    std::vector<int> vertices;  // local id -> g vertex
    MultiGraph graph;
};

BlobGraph blob_graph(const MultiGraph& g, const Cactus& cx, int blob);

// Mader sequences for every blob with at least two vertices (singletons need
// no certificate).
std::map<int, std::vector<MaderStep>> blob_certificates(const MultiGraph& g, const Cactus& cx);

struct CactusVerifyResult {
    bool ok = false;
    std::string reason;
};

// Independent checker: (a) the structure is a cactus with consistent cycle
// ids, (b) the blobs partition V(G), (c) the cross-blob edges of G equal the
// cactus edge list, (d) every multi-vertex blob's contracted graph passes
// verify_mader on the supplied sequence. Hostile input allowed.
CactusVerifyResult verify_cactus(const MultiGraph& g, const Cactus& cx,
                                 const std::map<int, std::vector<MaderStep>>& blob_certs);

// Text format: "blob <id>: v1 v2 ..." lines, then
// "cedge <blobA> <blobB> <g-edge-id> <cycle-id>" lines.
void write_cactus(const Cactus& cx, std::ostream& out);

}  // namespace tec
