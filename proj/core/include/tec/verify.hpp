#pragma once

#include <string>
#include <vector>

#include "tec/certificate.hpp"
#include "tec/multigraph.hpp"

namespace tec {

// True iff g minus {e1, e2} is disconnected.
bool verify_cut(const MultiGraph& g, int e1, int e2);

// True iff g minus e is disconnected.
bool verify_bridge(const MultiGraph& g, int e);

// True iff v witnesses that g is not 3-edge-connected without removing
// anything: fewer than two vertices, or v lies in a proper component.
bool verify_disconnected(const MultiGraph& g, int v);

enum class MaderCheck {
    Ok,
    MinDegree,      // (a) the graph must have minimum degree three
    Partition,      // (b) the paths must partition the edge set
    NotAnEar,       // (c) a path was not reduced to a single edge
    SameLinkTwice,  // (d) removing a path left a subdivided link subdivided twice
    NotK23,         // (e) the residue of the first two paths is not a K_2^3
};

const char* to_string(MaderCheck c);

struct MaderVerifyResult {
    MaderCheck failed = MaderCheck::Ok;
    int path_index = -1;  // 0-based index into the sequence where (c)/(d) failed
    long long operations = 0;  // suppressions + merges, for the linearity check

    bool ok() const { return failed == MaderCheck::Ok; }
    std::string reason() const;
};

// Reverse deconstruction: removes the paths last-to-first from a working copy
// of g, suppressing degree-two vertices as they occur (this may create
// parallel edges and loops), and checks that every removed path had been
// reduced to a single edge, never subdivides one link twice, and that the
// first two paths leave exactly a K_2^3. Hostile input is fine.
MaderVerifyResult verify_mader(const MultiGraph& g, const std::vector<MaderStep>& seq);

// Dispatch on the certificate kind: cut-type certificates via deletion plus
// connectivity, Mader sequences via reverse deconstruction.
bool verify_certificate(const MultiGraph& g, const Certificate& c, std::string* why = nullptr);

}  // namespace tec
