#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "tec/multigraph.hpp"

namespace tec {
namespace oracle {

// All unordered edge pairs whose removal disconnects g. O(m^2 (n+m)), desk
// scale only.
std::set<std::pair<int, int>> brute_two_cuts(const MultiGraph& g);

// Edge connectivity by unit-capacity max-flow from vertex 0 to every other
// vertex; 0 when disconnected or n < 2.
int edge_connectivity(const MultiGraph& g);

// Classes of pairwise 3-edge-connected vertices (pairwise max-flow >= 3).
// Transitivity of the relation is verified, not assumed.
std::vector<std::vector<int>> brute_three_components(const MultiGraph& g);

/// Reproducible PRNG: xorshift64*, documented so corpora regenerate
/// identically everywhere. Bounded draws take the product-high-bits path.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }
    // uniform in [0, bound)
    uint64_t below(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * bound) >> 64);
    }
    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

private:
    uint64_t state_;
};

// Grows a graph from K_2^3 by uniformly chosen edge additions, single-edge
// subdivisions with a link to an existing vertex, and double subdivisions
// joined by an edge, until n vertices; then adds extra_edges more random
// edges between distinct vertices. 3-edge-connected by construction.
MultiGraph random_3ec(int n_target, uint64_t seed, int extra_edges = -1);

}  // namespace oracle
}  // namespace tec
