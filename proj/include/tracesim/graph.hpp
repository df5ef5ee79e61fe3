#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Undirected simple graph with immutable topology. Construction validates and
// canonicalizes the edge list; afterwards neighbor lists are sorted and every
// edge carries a stable id (edges enumerated with u ascending, then v), which
// the exploration counters and betweenness tables index into.

namespace tracesim {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;  // canonical form keeps u < v
    friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
public:
    Graph() = default;

    // Accepts unordered endpoint pairs. Rejects out-of-range labels,
    // self-loops and duplicate edges.
    Graph(std::size_t n, const std::vector<Edge>& edge_list) : adj_(n), eids_(n) {
        for (const Edge& e : edge_list) {
            if (e.u >= n || e.v >= n)
                throw std::invalid_argument("Graph: vertex label " +
                                            std::to_string(std::max(e.u, e.v)) +
                                            " out of range for n=" + std::to_string(n));
            if (e.u == e.v)
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
        }
        for (std::size_t v = 0; v < n; ++v) {
            std::sort(adj_[v].begin(), adj_[v].end());
            auto dup = std::adjacent_find(adj_[v].begin(), adj_[v].end());
            if (dup != adj_[v].end())
                throw std::invalid_argument("Graph: duplicate edge " + std::to_string(v) + "-" +
                                            std::to_string(*dup));
        }
        // Assign edge ids in canonical order and build the parallel id lists.
        edges_.reserve(edge_list.size());
        for (Vertex u = 0; u < n; ++u) {
            eids_[u].resize(adj_[u].size());
            for (std::size_t i = 0; i < adj_[u].size(); ++i) {
                Vertex v = adj_[u][i];
                if (u < v) {
                    eids_[u][i] = static_cast<EdgeId>(edges_.size());
                    edges_.push_back({u, v});
                }
            }
        }
        // Second pass fills ids on the higher-endpoint side.
        for (Vertex u = 0; u < n; ++u)
            for (std::size_t i = 0; i < adj_[u].size(); ++i) {
                Vertex v = adj_[u][i];
                if (u > v) eids_[u][i] = eids_[v][neighbor_pos(v, u)];
            }
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    const std::vector<EdgeId>& incident_edge_ids(Vertex v) const { return eids_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    bool has_edge(Vertex u, Vertex v) const {
        if (u >= adj_.size() || v >= adj_.size() || u == v) return false;
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    EdgeId edge_id(Vertex u, Vertex v) const {
        if (!has_edge(u, v)) throw std::invalid_argument("Graph::edge_id: no such edge");
        return eids_[u][neighbor_pos(u, v)];
    }

    double mean_degree() const {
        if (adj_.empty()) return 0.0;
        return 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(adj_.size());
    }

private:
    std::size_t neighbor_pos(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(
            std::lower_bound(adj_[u].begin(), adj_[u].end(), v) - adj_[u].begin());
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> eids_;  // eids_[v][i] is the id of edge (v, adj_[v][i])
    std::vector<Edge> edges_;                // indexed by EdgeId, canonical order
};

struct DegreeHistogram {
    std::map<std::size_t, std::size_t> counts;  // degree k -> number of vertices N_k

    std::size_t max_degree() const { return counts.empty() ? 0 : counts.rbegin()->first; }
    double mean_degree() const {
        double s = 0.0, n = 0.0;
        for (auto [k, nk] : counts) {
            s += static_cast<double>(k) * static_cast<double>(nk);
            n += static_cast<double>(nk);
        }
        return n > 0 ? s / n : 0.0;
    }
};

inline DegreeHistogram degree_histogram(const Graph& g) {
    DegreeHistogram h;
    for (Vertex v = 0; v < g.vertex_count(); ++v) ++h.counts[g.degree(v)];
    return h;
}

namespace detail {

// Component label per vertex via BFS; returns labels and component sizes.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::size_t>> components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::uint32_t kNone = 0xffffffffu;
    std::vector<std::uint32_t> comp(n, kNone);
    std::vector<std::size_t> size;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != kNone) continue;
        const auto c = static_cast<std::uint32_t>(size.size());
        comp[s] = c;
        size.push_back(1);
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (comp[w] != kNone) continue;
                comp[w] = c;
                ++size[c];
                queue.push_back(w);
            }
        }
    }
    return {std::move(comp), std::move(size)};
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto [comp, size] = detail::components(g);
    return size.size() == 1;
}

struct LccResult {
    Graph graph;
    // original_label[w] is the label the vertex w carried in the input graph.
    // Labels are assigned in increasing original order, so the relabeling is
    // monotone and reproducible.
    std::vector<Vertex> original_label;
};

// Largest connected component; ties broken toward the component containing
// the smallest original vertex label.
inline LccResult largest_connected_component(const Graph& g) {
    if (g.vertex_count() == 0) return {Graph(0, {}), {}};
    auto [comp, size] = detail::components(g);
    std::uint32_t best = 0;
    for (std::uint32_t c = 1; c < size.size(); ++c)
        if (size[c] > size[best]) best = c;  // first-seen component wins ties

    const std::size_t n = g.vertex_count();
    constexpr Vertex kOut = 0xffffffffu;
    std::vector<Vertex> new_label(n, kOut);
    LccResult out;
    out.original_label.reserve(size[best]);
    for (Vertex v = 0; v < n; ++v)
        if (comp[v] == best) {
            new_label[v] = static_cast<Vertex>(out.original_label.size());
            out.original_label.push_back(v);
        }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (comp[e.u] == best) edges.push_back({new_label[e.u], new_label[e.v]});
    out.graph = Graph(size[best], edges);
    return out;
}

}  // namespace tracesim
