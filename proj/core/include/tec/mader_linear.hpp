#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tec/certificate.hpp"
#include "tec/chains.hpp"
#include "tec/current_graph.hpp"
#include "tec/interval_overlap.hpp"

namespace tec {

enum class SegmentKind { InterlacingRoot, NestedRoot };

/// A maximal set of not-yet-added chains sharing the same minimal non-added
/// ancestor (the root chain). Attachments are the positions the segment's
/// chains share with the current chain C_i; for a nested root they all lie
/// between the root's endpoints.
struct Segment {
    int root_chain = 0;
    SegmentKind kind = SegmentKind::NestedRoot;
    std::vector<int> members;      // chain ids, ascending (parent-first)
    std::vector<int> attachments;  // positions on C_i, ascending, deduplicated
};

/// All 2-edge-cuts discovered on one chain, reported as the spans (position
/// intervals) of the overlap-graph components not connected to the branch
/// vertices. Only produced in continue-on-cut mode.
struct PhaseCutRecord {
    int chain = 0;
    std::vector<std::pair<int, int>> spans;  // [min,max] attachment positions per component
    std::vector<int> branch_positions;       // branch vertices on C_i at part II
};

struct LinearRunResult {
    std::optional<Certificate> cut;       // first cut found (strict mode stops there)
    std::vector<MaderStep> sequence;      // complete iff no cut was found
    std::vector<PhaseCutRecord> cut_records;  // continue mode only

    bool had_cuts() const { return cut.has_value() || !cut_records.empty(); }
};

struct LinearOptions {
    bool continue_on_cut = false;
    // Test hook, invoked after every phase.
    std::function<void(int phase, const CurrentGraph&)> after_phase;
};

// Seeds gc with the initial K_2^3 subdivision C_1 u C_x and reports x through
// `second_chain` (normally 2). If t(C_2) is the root, the first later chain
// from the root ending on C_1 takes its role; if none exists the returned
// certificate is the tree edge into the deficient root subtree plus its
// unique back-edge. In continue mode chain 2 is always used and the K_2^3
// requirement is waived.
std::optional<Certificate> initial_k23(const ChainDecomposition& cd, CurrentGraph& gc,
                                       int& second_chain, bool continue_mode = false);

// Part 0/I of a phase: walks every chain whose source s-belongs to chain i,
// adds all-interlacing paths to gc immediately (returned in addition order)
// and groups the rest into nested-root segments. `positions` maps each vertex
// of C_i's tree path to its position (1 = target end).
std::pair<std::vector<Segment>, std::vector<int>> collect_segments(
    CurrentGraph& gc, const ChainDecomposition& cd, int i, const std::vector<int>& positions);

// Intervals of one segment: [a_0, a_l] for 1 <= l <= k and [a_l, a_k] for
// 1 <= l < k, tagged with `tag`.
void attachment_intervals(const Segment& s, int tag, std::vector<Interval>& out);

struct SegmentOrdering {
    std::vector<int> order;  // segment ids connected to R, in addition order
    std::vector<std::vector<int>> cut_components;  // remaining segment ids, grouped
};

// Contracts same-tag intervals and orders the segments: the R component in a
// spanning-forest preorder from R, every other overlap component reported for
// cut extraction. Tags 0..segment_count-1 are segments, r_tag = segment_count.
SegmentOrdering order_segments(const std::vector<Interval>& intervals, int segment_count);

// The 2-edge-cut certified by an overlap component spanning positions
// [lo, hi] on the chain: the tree edge above the lowest position and the edge
// entering the highest position from below (possibly the chain's back-edge).
std::pair<int, int> interval_cut_edges(const ChainPath& path, int lo, int hi);
Certificate extract_cut(const ChainPath& path, int lo, int hi);

// Phase engine. Requires check_2ec(g, cd) to have passed.
LinearRunResult run_linear_phases(const MultiGraph& g, const ChainDecomposition& cd,
                                  const LinearOptions& opt = {});

// The full certifying pipeline: degree screen, DFS, chain decomposition,
// 2-edge-connectivity check, then the phase algorithm.
Certificate certify_linear(const MultiGraph& g, int root = 0);

}  // namespace tec
