#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "tracesim/graph.hpp"
#include "tracesim/paths.hpp"

// Shortest-path betweenness under the ordered-pair convention: every ordered
// pair (l, m), l != m, distributes weight 1 among its shortest paths, so an
// unordered pair counts twice. Vertex betweenness excludes endpoints (leaves
// score 0); edge betweenness includes them, which puts it in [2, N(N-1)] on a
// connected graph and ties the two together through
//
//     sum over edges at i of b_ij = 2 * (b_i + N - 1).

namespace tracesim {

struct BetweennessTable {
    std::vector<double> vertex;  // b_i, indexed by vertex
    std::vector<double> edge;    // b_ij, indexed by EdgeId
    std::size_t n = 0;

    // The mean-field theory works with betweenness rescaled by N.
    double vertex_rescaled(Vertex v) const { return vertex[v] / static_cast<double>(n); }
    double edge_rescaled(EdgeId e) const { return edge[e] / static_cast<double>(n); }
};

// Brandes' accumulation, one BFS per source. Requires a connected graph:
// betweenness of a fragment mixes incomparable pair counts, so we refuse it.
inline BetweennessTable brandes_betweenness(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("brandes_betweenness: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("brandes_betweenness: graph not connected");

    BetweennessTable table;
    table.n = n;
    table.vertex.assign(n, 0.0);
    table.edge.assign(g.edge_count(), 0.0);

    // Flat per-source scratch, reused across sources.
    std::vector<std::uint32_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<Vertex> order;
    order.reserve(n);
    struct Arc {
        Vertex pred;
        EdgeId eid;
    };
    std::vector<std::vector<Arc>> preds(n);

    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const Vertex v = order[head];
            const auto& nbrs = g.neighbors(v);
            const auto& eids = g.incident_edge_ids(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const Vertex w = nbrs[i];
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back({v, eids[i]});
                }
            }
        }

        for (std::size_t i = order.size(); i-- > 1;) {
            const Vertex w = order[i];
            const double coeff = (1.0 + delta[w]) / sigma[w];
            for (const Arc& a : preds[w]) {
                const double c = sigma[a.pred] * coeff;
                table.edge[a.eid] += c;
                delta[a.pred] += c;
            }
            table.vertex[w] += delta[w];
        }
    }
    return table;
}

// Reference implementation: enumerate every shortest path of every ordered
// pair explicitly and hand out 1/count shares. Exponential in the worst case,
// hence the size guard; exists to cross-check brandes_betweenness.
inline BetweennessTable brute_force_betweenness(const Graph& g, std::size_t max_n = 200) {
    const std::size_t n = g.vertex_count();
    if (n > max_n) throw std::invalid_argument("brute_force_betweenness: graph too large");
    if (n == 0) throw std::invalid_argument("brute_force_betweenness: empty graph");
    if (!is_connected(g))
        throw std::invalid_argument("brute_force_betweenness: graph not connected");

    BetweennessTable table;
    table.n = n;
    table.vertex.assign(n, 0.0);
    table.edge.assign(g.edge_count(), 0.0);

    for (Vertex l = 0; l < n; ++l)
        for (Vertex m = 0; m < n; ++m) {
            if (l == m) continue;
            const auto paths = enumerate_shortest_paths(g, l, m);
            const double share = 1.0 / static_cast<double>(paths.size());
            for (const ProbePath& p : paths) {
                for (std::size_t i = 1; i + 1 < p.size(); ++i) table.vertex[p[i]] += share;
                for (std::size_t i = 0; i + 1 < p.size(); ++i)
                    table.edge[g.edge_id(p[i], p[i + 1])] += share;
            }
        }
    return table;
}

// Mean rescaled vertex betweenness of each degree class.
inline std::map<std::size_t, double> betweenness_by_degree(const Graph& g,
                                                           const BetweennessTable& table) {
    if (table.vertex.size() != g.vertex_count())
        throw std::invalid_argument("betweenness_by_degree: table does not match graph");
    std::map<std::size_t, double> sum;
    std::map<std::size_t, std::size_t> count;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        sum[g.degree(v)] += table.vertex_rescaled(v);
        ++count[g.degree(v)];
    }
    for (auto& [k, s] : sum) s /= static_cast<double>(count[k]);
    return sum;
}

}  // namespace tracesim
