#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracesim/graph.hpp"

// Canonical edge-list format, the interchange between CLI subcommands:
//
//   # n=<N> m=<M>
//   i j
//   ...
//
// one edge per line, endpoints ASCII decimal with i < j, pairs sorted
// lexicographically. Writing always emits this canonical form; reading
// accepts endpoints in either order but rejects anything malformed, with the
// offending line in the message.

namespace tracesim {

inline void write_edge_list(const Graph& g, std::ostream& os) {
    os << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
    if (!os) throw std::runtime_error("write_edge_list: stream failure");
}

inline void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_edge_list: cannot open " + path);
    write_edge_list(g, f);
}

inline Graph read_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line))
        throw std::invalid_argument("read_edge_list: empty input, missing header");
    std::size_t n = 0, m = 0;
    {
        std::istringstream hs(line);
        std::string hash, ntok, mtok;
        hs >> hash >> ntok >> mtok;
        if (hash != "#" || ntok.rfind("n=", 0) != 0 || mtok.rfind("m=", 0) != 0)
            throw std::invalid_argument("read_edge_list: malformed header: " + line);
        try {
            n = std::stoull(ntok.substr(2));
            m = std::stoull(mtok.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("read_edge_list: malformed header: " + line);
        }
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long a = -1, b = -1;
        if (!(ls >> a >> b) || a < 0 || b < 0)
            throw std::invalid_argument("read_edge_list: malformed edge at line " +
                                        std::to_string(lineno) + ": " + line);
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("read_edge_list: trailing tokens at line " +
                                        std::to_string(lineno) + ": " + line);
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
    if (edges.size() != m)
        throw std::invalid_argument("read_edge_list: header claims m=" + std::to_string(m) +
                                    " but found " + std::to_string(edges.size()) + " edges");
    return Graph(n, edges);  // validates labels, self-loops, duplicates
}

inline Graph read_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_edge_list: cannot open " + path);
    return read_edge_list(f);
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    return f;
}

}  // namespace tracesim
