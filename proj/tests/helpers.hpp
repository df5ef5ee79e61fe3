#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tracesim/graph.hpp"
#include "tracesim/paths.hpp"

// Test-side oracles. Everything here is implemented independently of the
// library internals it checks against: plain BFS, explicit simple-path
// enumeration, Havel-Hakimi, and a frozen chi-square table.

namespace th {

using tracesim::Edge;
using tracesim::Graph;
using tracesim::Vertex;

inline Graph make_graph(std::size_t n,
                        std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
    std::vector<Edge> es;
    for (const auto& [u, v] : edges) es.push_back(Edge{u, v});
    return Graph(n, es);
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> es;
    for (std::uint32_t i = 0; i + 1 < n; ++i) es.push_back(Edge{i, i + 1});
    return Graph(n, es);
}

// Vertex 0 is the hub.
inline Graph star_graph(std::size_t n) {
    std::vector<Edge> es;
    for (std::uint32_t i = 1; i < n; ++i) es.push_back(Edge{0, i});
    return Graph(n, es);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> es;
    for (std::uint32_t i = 0; i + 1 < n; ++i) es.push_back(Edge{i, i + 1});
    es.push_back(Edge{0, static_cast<std::uint32_t>(n - 1)});
    return Graph(n, es);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> es;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) es.push_back(Edge{u, v});
    return Graph(n, es);
}

// Plain queue BFS, distances only. -1 where unreachable.
inline std::vector<int> bfs_dist(const Graph& g, Vertex root) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

// All shortest s-t paths by brute force: depth-first over simple paths,
// pruned by exact distances so only shortest ones are walked.
inline std::vector<std::vector<Vertex>> all_shortest_paths(const Graph& g, Vertex s, Vertex t) {
    std::vector<std::vector<Vertex>> out;
    const auto dist = bfs_dist(g, t);
    if (dist[s] < 0) return out;
    std::vector<Vertex> cur{s};
    auto dfs = [&](auto&& self, Vertex v) -> void {
        if (v == t) {
            out.push_back(cur);
            return;
        }
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] != dist[v] - 1) continue;
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
        }
    };
    dfs(dfs, s);
    return out;
}

// Betweenness from explicit enumeration: every ordered pair contributes
// 1/(number of its shortest paths) to each interior vertex and each edge of
// each path.
struct BruteBetweenness {
    std::vector<double> vertex;
    std::vector<double> edge;
};

inline BruteBetweenness enumerate_betweenness(const Graph& g) {
    BruteBetweenness b;
    b.vertex.assign(g.vertex_count(), 0.0);
    b.edge.assign(g.edge_count(), 0.0);
    for (Vertex s = 0; s < g.vertex_count(); ++s)
        for (Vertex t = 0; t < g.vertex_count(); ++t) {
            if (s == t) continue;
            const auto paths = all_shortest_paths(g, s, t);
            if (paths.empty()) continue;
            const double share = 1.0 / static_cast<double>(paths.size());
            for (const auto& p : paths)
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (i > 0 && i + 1 < p.size()) b.vertex[p[i]] += share;
                    if (i + 1 < p.size()) b.edge[g.edge_id(p[i], p[i + 1])] += share;
                }
        }
    return b;
}

// Exact probability that each vertex/edge lies on the path(s) one (s,t)
// probe selects, per path-selection model. USP weights a path by the product
// of per-vertex uniform next-hop choices toward t; RSP weighs every shortest
// path equally; ASP includes everything.
struct PairDiscovery {
    std::vector<double> vertex;
    std::vector<double> edge;
};

inline PairDiscovery exact_pair_discovery(const Graph& g, Vertex s, Vertex t,
                                          tracesim::PathSelection psc) {
    PairDiscovery d;
    d.vertex.assign(g.vertex_count(), 0.0);
    d.edge.assign(g.edge_count(), 0.0);
    const auto paths = all_shortest_paths(g, s, t);
    if (paths.empty()) return d;
    const auto dist = bfs_dist(g, t);
    const auto pred_count = [&](Vertex v) {
        std::size_t c = 0;
        for (Vertex w : g.neighbors(v))
            if (dist[w] == dist[v] - 1) ++c;
        return c;
    };
    for (const auto& p : paths) {
        double w = 1.0;
        switch (psc) {
            case tracesim::PathSelection::usp:
                for (std::size_t i = 0; i + 1 < p.size(); ++i)
                    w /= static_cast<double>(pred_count(p[i]));
                break;
            case tracesim::PathSelection::rsp:
                w = 1.0 / static_cast<double>(paths.size());
                break;
            case tracesim::PathSelection::asp:
                w = 1.0;
                break;
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            d.vertex[p[i]] += w;
            if (i + 1 < p.size()) d.edge[g.edge_id(p[i], p[i + 1])] += w;
        }
    }
    if (psc == tracesim::PathSelection::asp) {
        // Membership, not multiplicity.
        for (double& x : d.vertex) x = x > 0.0 ? 1.0 : 0.0;
        for (double& x : d.edge) x = x > 0.0 ? 1.0 : 0.0;
    }
    return d;
}

// Havel-Hakimi graphicality, an independent answer to Erdos-Gallai.
inline bool havel_hakimi(std::vector<std::uint32_t> deg) {
    std::uint64_t sum = 0;
    for (auto d : deg) sum += d;
    if (sum % 2 != 0) return false;
    while (true) {
        std::sort(deg.begin(), deg.end(), std::greater<>());
        if (deg.empty() || deg[0] == 0) return true;
        const std::uint32_t d = deg[0];
        if (d >= deg.size()) return false;
        deg.erase(deg.begin());
        for (std::uint32_t i = 0; i < d; ++i) {
            if (deg[i] == 0) return false;
            --deg[i];
        }
    }
}

// Random connected graph: a uniform-attachment spanning tree plus extra
// random edges. Self-contained randomness (std engine, not the library's).
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n,
                                    double extra_edge_prob) {
    std::vector<Edge> es;
    for (std::uint32_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::uint32_t> pick(0, v - 1);
        es.push_back(Edge{pick(rng), v});
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (coin(rng) >= extra_edge_prob) continue;
            bool present = false;
            for (const auto& e : es)
                if (e.u == u && e.v == v) {
                    present = true;
                    break;
                }
            if (!present) es.push_back(Edge{u, v});
        }
    return Graph(n, es);
}

inline Graph random_tree(std::mt19937_64& rng, std::size_t n) {
    return random_connected_graph(rng, n, 0.0);
}

// Upper 1% critical values of the chi-square distribution, dof 1..20.
inline double chi2_crit_01(std::size_t dof) {
    static const double table[20] = {6.634897,  9.210340,  11.344867, 13.276704, 15.086272,
                                     16.811894, 18.475307, 20.090235, 21.665994, 23.209251,
                                     24.724970, 26.216967, 27.688250, 29.141238, 30.577914,
                                     31.999927, 33.408664, 34.805306, 36.190869, 37.566235};
    if (dof < 1 || dof > 20) throw std::invalid_argument("chi2_crit_01: dof out of table");
    return table[dof - 1];
}

// Least squares fit of y against x with the sample correlation.
struct LinFit {
    double slope = 0.0;
    double intercept = 0.0;
    double corr = 0.0;
};

inline LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: bad input");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        syy += y[i] * y[i];
        sxy += x[i] * y[i];
    }
    LinFit f;
    const double vx = sxx - sx * sx / n;
    const double vy = syy - sy * sy / n;
    const double cxy = sxy - sx * sy / n;
    f.slope = cxy / vx;
    f.intercept = (sy - f.slope * sx) / n;
    f.corr = vx > 0.0 && vy > 0.0 ? cxy / std::sqrt(vx * vy) : 0.0;
    return f;
}

}  // namespace th
