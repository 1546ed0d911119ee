#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace tec {

/// Closed interval [lo, hi] with an owner tag and its input index. Two
/// intervals [a,b], [c,d] overlap iff a <= c <= b <= d under the perturbed
/// endpoint order; containment does not overlap.
struct Interval {
    int lo = 0;
    int hi = 0;
    int tag = 0;  // owner (segment id, or a reserved id for branch intervals)
    int seq = 0;  // input index, breaks ties between identical intervals

    int length() const { return hi - lo; }
};

enum class End { Left, Right };

/// Totally ordered endpoint key realizing the perturbation rules:
///  (1) a left endpoint precedes a coincident right endpoint,
///  (2) among equal left endpoints the shorter interval comes first,
///  (3) among equal right endpoints the shorter interval comes last,
///  (4) identical intervals are ordered by input index.
using PerturbKey = std::array<int64_t, 4>;

PerturbKey perturb_key(const Interval& iv, End end);

bool overlaps(const Interval& a, const Interval& b);

// Spanning forest of the interval overlap graph: at most 2k edges (pairs of
// indices into ivs) connecting each interval to its immediate left and right
// neighbors via two stack sweeps. Connected components of the result equal
// those of the full overlap graph.
std::vector<std::pair<int, int>> spanning_forest(const std::vector<Interval>& ivs);

// Dense component labels (same id iff connected in the overlap graph).
std::vector<int> components(const std::vector<Interval>& ivs);

}  // namespace tec
