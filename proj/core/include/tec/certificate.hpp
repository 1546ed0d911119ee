#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tec/multigraph.hpp"

namespace tec {

/// One step of a Mader construction sequence: a chain together with its edge
/// path (back-edge first, then tree edges in traversal order).
struct MaderStep {
    int chain = 0;
    std::vector<int> edges;
};

/// The output of the certifier. Exactly one of the variants applies:
/// a Mader construction sequence proves 3-edge-connectivity, the other three
/// variants are small cuts proving its absence.
struct Certificate {
    enum class Kind { Disconnected, Bridge, TwoEdgeCut, MaderSequence };

    Kind kind = Kind::Disconnected;
    int vertex = -1;        // Disconnected: a vertex of a proper component
    int e1 = -1, e2 = -1;   // Bridge uses e1; TwoEdgeCut uses e1 < e2
    std::vector<MaderStep> sequence;

    bool is_mader() const { return kind == Kind::MaderSequence; }

    static Certificate disconnected(int v);
    static Certificate bridge(int e);
    static Certificate two_edge_cut(int a, int b);
    static Certificate mader(std::vector<MaderStep> steps);
};

// Text format, line oriented:
//   DISCONNECTED v
//   BRIDGE e
//   CUT2 e1 e2
//   MADER            followed by one "chain <id> : e e e ..." line per step
void write_certificate(const Certificate& c, std::ostream& out);
Certificate read_certificate(std::istream& in);  // throws parse_error

// Degree screen: returns a certificate if some vertex has degree < 3
// (degree 0 -> disconnected witness, 1 -> bridge, 2 -> the incident pair as a
// 2-edge-cut), otherwise nothing.
std::optional<Certificate> min_degree_screen(const MultiGraph& g);

}  // namespace tec
