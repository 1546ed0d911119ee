#include "tec/certificate.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tec {

Certificate Certificate::disconnected(int v) {
    Certificate c;
    c.kind = Kind::Disconnected;
    c.vertex = v;
    return c;
}

Certificate Certificate::bridge(int e) {
    Certificate c;
    c.kind = Kind::Bridge;
    c.e1 = e;
    return c;
}

Certificate Certificate::two_edge_cut(int a, int b) {
    Certificate c;
    c.kind = Kind::TwoEdgeCut;
    c.e1 = a < b ? a : b;
    c.e2 = a < b ? b : a;
    return c;
}

Certificate Certificate::mader(std::vector<MaderStep> steps) {
    Certificate c;
    c.kind = Kind::MaderSequence;
    c.sequence = std::move(steps);
    return c;
}

void write_certificate(const Certificate& c, std::ostream& out) {
    switch (c.kind) {
        case Certificate::Kind::Disconnected:
            out << "DISCONNECTED " << c.vertex << '\n';
            return;
        case Certificate::Kind::Bridge:
            out << "BRIDGE " << c.e1 << '\n';
            return;
        case Certificate::Kind::TwoEdgeCut:
            out << "CUT2 " << c.e1 << ' ' << c.e2 << '\n';
            return;
        case Certificate::Kind::MaderSequence:
            out << "MADER\n";
            for (const MaderStep& s : c.sequence) {
                out << "chain " << s.chain << " :";
                for (int e : s.edges) out << ' ' << e;
                out << '\n';
            }
            return;
    }
}

Certificate read_certificate(std::istream& in) {
    std::string head;
    if (!(in >> head)) throw parse_error("empty certificate");
    if (head == "DISCONNECTED") {
        int v;
        if (!(in >> v)) throw parse_error("DISCONNECTED needs a vertex");
        return Certificate::disconnected(v);
    }
    if (head == "BRIDGE") {
        int e;
        if (!(in >> e)) throw parse_error("BRIDGE needs an edge");
        return Certificate::bridge(e);
    }
    if (head == "CUT2") {
        int a, b;
        if (!(in >> a >> b)) throw parse_error("CUT2 needs two edges");
        return Certificate::two_edge_cut(a, b);
    }
    if (head != "MADER") throw parse_error("unknown certificate kind: " + head);

    std::string rest;
    std::getline(in, rest);
    std::vector<MaderStep> steps;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw, colon;
        MaderStep step;
        if (!(ls >> kw >> step.chain >> colon) || kw != "chain" || colon != ":")
            throw parse_error("bad MADER step line: " + line);
        int e;
        while (ls >> e) step.edges.push_back(e);
        steps.push_back(std::move(step));
    }
    return Certificate::mader(std::move(steps));
}

std::optional<Certificate> min_degree_screen(const MultiGraph& g) {
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d >= 3) continue;
        if (d == 0) return Certificate::disconnected(v);
        if (d == 1) return Certificate::bridge(g.adj[v][0].second);
        return Certificate::two_edge_cut(g.adj[v][0].second, g.adj[v][1].second);
    }
    return std::nullopt;
}

}  // namespace tec
