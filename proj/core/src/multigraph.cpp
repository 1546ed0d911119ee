#include "tec/multigraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tec {

void internal_check(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("internal check failed: ") + what);
}

void MultiGraph::add_edge(int u, int v) {
    int e = m();
    edges.emplace_back(u, v);
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
}

void MultiGraph::build_adjacency() {
    adj.assign(n, {});
    for (int e = 0; e < m(); ++e) {
        auto [u, v] = edges[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
}

MultiGraph load_graph(std::istream& in) {
    MultiGraph g;
    std::string line;
    long long n = -1, m = -1;
    int read_edges = 0;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw parse_error("line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                long long probe;
                if (ls.clear(), ls.str(line), ls >> probe) fail("expected header 'n m'");
                continue;  // blank or comment-only line before the header
            }
            if (n < 0 || m < 0) fail("negative n or m");
            g.n = static_cast<int>(n);
            g.edges.reserve(static_cast<size_t>(m));
            continue;
        }
        long long u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) fail("expected 'u v'");
        long long trailing;
        if (ls >> trailing) fail("trailing tokens after 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex id out of range");
        if (u == v) fail("self-loop");
        if (read_edges == m) fail("more edges than declared");
        g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++read_edges;
    }
    if (n < 0) throw parse_error("missing header 'n m'");
    if (read_edges != m) throw parse_error("fewer edges than declared");
    g.build_adjacency();
    return g;
}

MultiGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return load_graph(in);
}

void serialize(const MultiGraph& g, std::ostream& out) {
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace tec
