#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tec {

/// Undirected multigraph with dense 0-based vertex ids. Parallel edges are
/// allowed, self-loops are not. Adjacency lists are kept sorted ascending by
/// (neighbor, edge id) so that every traversal of the graph is reproducible.
struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;                // edge id -> (u, v)
    std::vector<std::vector<std::pair<int, int>>> adj;     // vertex -> (neighbor, edge id)

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int other_end(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }

    void add_edge(int u, int v);
    // Rebuilds adjacency from the edge list (ascending (neighbor, edge id)).
    void build_adjacency();
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Reads the text format: first line "n m", then m lines "u v". Lines starting
// with '#' are comments. Throws parse_error on malformed input, a self-loop,
// or a vertex id out of range.
MultiGraph load_graph(std::istream& in);
MultiGraph load_graph_file(const std::string& path);

void serialize(const MultiGraph& g, std::ostream& out);

// Always-on internal consistency check; violations are logic errors, not
// input errors.
void internal_check(bool cond, const char* what);

}  // namespace tec
