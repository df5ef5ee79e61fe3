#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tracesim/graph.hpp"
#include "tracesim/rng.hpp"

// Shortest-path machinery for the three probing models:
//
//   USP  one fixed route tree per target, ties broken at random once, so all
//        probes toward a target share route prefixes;
//   RSP  an independent uniform draw among the pair's shortest paths for
//        every probe;
//   ASP  the whole shortest-path DAG between the pair.

namespace tracesim {

constexpr Vertex kNoVertex = 0xffffffffu;
constexpr std::uint32_t kUnreachable = 0xffffffffu;

struct ShortestPathDag {
    Vertex root = kNoVertex;
    std::vector<std::uint32_t> dist;        // hops from root, kUnreachable if none
    std::vector<double> sigma;              // number of shortest paths from root
    std::vector<std::vector<Vertex>> preds; // neighbors one hop closer to root
    std::vector<Vertex> order;              // BFS discovery order, root first
};

inline ShortestPathDag bfs_dag(const Graph& g, Vertex root) {
    const std::size_t n = g.vertex_count();
    if (root >= n) throw std::invalid_argument("bfs_dag: root out of range");
    ShortestPathDag d;
    d.root = root;
    d.dist.assign(n, kUnreachable);
    d.sigma.assign(n, 0.0);
    d.preds.assign(n, {});
    d.order.reserve(n);
    d.dist[root] = 0;
    d.sigma[root] = 1.0;
    d.order.push_back(root);
    for (std::size_t head = 0; head < d.order.size(); ++head) {
        const Vertex v = d.order[head];
        for (Vertex w : g.neighbors(v)) {
            if (d.dist[w] == kUnreachable) {
                d.dist[w] = d.dist[v] + 1;
                d.order.push_back(w);
            }
            if (d.dist[w] == d.dist[v] + 1) {
                d.sigma[w] += d.sigma[v];
                d.preds[w].push_back(v);
            }
        }
    }
    return d;
}

// Fixed routing toward one target. next_hop[v] is drawn uniformly among v's
// shortest-path predecessors in the DAG rooted at the target, so following it
// always decreases the distance by one; routes are prefix-consistent by
// construction. The draw is seeded by (tie_seed, target): the same tie_seed
// still gives independent trees for different targets.
struct UspTree {
    Vertex target = kNoVertex;
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> next_hop;  // kNoVertex at the target and unreachable vertices
};

inline UspTree build_usp_tree(const Graph& g, Vertex target, std::uint64_t tie_seed) {
    ShortestPathDag d = bfs_dag(g, target);
    UspTree t;
    t.target = target;
    t.dist = std::move(d.dist);
    t.next_hop.assign(g.vertex_count(), kNoVertex);
    Rng rng = make_rng(derive_seed(tie_seed, "usp-tie", target));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v == target || t.dist[v] == kUnreachable) continue;
        const auto& p = d.preds[v];
        t.next_hop[v] = p.size() == 1 ? p[0] : p[uniform_index(rng, p.size())];
    }
    return t;
}

using ProbePath = std::vector<Vertex>;  // source first, target last

// Follow the tree from source to target. Empty if unreachable.
inline ProbePath usp_path(const UspTree& tree, Vertex source) {
    ProbePath path;
    if (source >= tree.dist.size() || tree.dist[source] == kUnreachable) return path;
    path.reserve(tree.dist[source] + 1);
    Vertex v = source;
    path.push_back(v);
    while (v != tree.target) {
        v = tree.next_hop[v];
        path.push_back(v);
    }
    return path;
}

// One uniform draw among all shortest root-to-other paths: walk from `other`
// back toward the DAG root, picking each predecessor with probability
// sigma(pred)/sigma(vertex). The result runs root -> other.
inline ProbePath sample_shortest_path(const ShortestPathDag& dag, Vertex other, Rng& rng) {
    ProbePath path;
    if (other >= dag.dist.size() || dag.dist[other] == kUnreachable) return path;
    path.reserve(dag.dist[other] + 1);
    Vertex v = other;
    path.push_back(v);
    while (v != dag.root) {
        const auto& p = dag.preds[v];
        Vertex pick = p[0];
        if (p.size() > 1) {
            double x = uniform_real01(rng) * dag.sigma[v];
            for (Vertex u : p) {
                x -= dag.sigma[u];
                if (x <= 0.0) {
                    pick = u;
                    break;
                }
                pick = u;  // float slack lands on the last candidate
            }
        }
        path.push_back(pick);
        v = pick;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

// Every shortest source-target path, via DFS over the predecessor DAG.
// Throws once more than `cap` paths would be materialized; use the DAG
// closure in exploration code instead of this where counts can explode.
inline std::vector<ProbePath> enumerate_shortest_paths(const Graph& g, Vertex source,
                                                       Vertex target,
                                                       std::size_t cap = 1000000) {
    ShortestPathDag dag = bfs_dag(g, source);
    std::vector<ProbePath> out;
    if (target >= g.vertex_count() || dag.dist[target] == kUnreachable) return out;
    ProbePath stack;  // built target -> source, emitted reversed
    auto rec = [&](auto&& self, Vertex v) -> void {
        stack.push_back(v);
        if (v == source) {
            if (out.size() >= cap)
                throw std::runtime_error("enumerate_shortest_paths: path count exceeds cap");
            out.emplace_back(stack.rbegin(), stack.rend());
        } else {
            for (Vertex u : dag.preds[v]) self(self, u);
        }
        stack.pop_back();
    };
    rec(rec, target);
    return out;
}

enum class PathSelection { usp, rsp, asp };

inline const char* to_string(PathSelection p) {
    switch (p) {
        case PathSelection::usp: return "usp";
        case PathSelection::rsp: return "rsp";
        case PathSelection::asp: return "asp";
    }
    return "?";
}

// Per-experiment path-selection state: the seed all draws derive from, the
// lazily built USP trees (one per target, shared across sources), and a
// one-slot DAG cache for RSP/ASP queries grouped by source.
struct PathState {
    explicit PathState(std::uint64_t seed) : seed(seed) {}

    std::uint64_t seed = 0;
    std::unordered_map<Vertex, UspTree> usp_trees;
    std::optional<ShortestPathDag> dag;
    std::size_t asp_cap = 1000000;

    const UspTree& usp_tree(const Graph& g, Vertex target) {
        auto it = usp_trees.find(target);
        if (it == usp_trees.end())
            it = usp_trees.emplace(target, build_usp_tree(g, target, derive_seed(seed, "usp")))
                     .first;
        return it->second;
    }

    const ShortestPathDag& dag_for(const Graph& g, Vertex root) {
        if (!dag || dag->root != root) dag = bfs_dag(g, root);
        return *dag;
    }
};

namespace detail {

inline std::uint64_t pack_pair(Vertex a, Vertex b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace detail

// The probe paths one source-target pair contributes under the given model:
// one path for USP/RSP, all shortest paths for ASP. RSP draws are seeded per
// (state seed, pair), so they do not depend on query order.
inline std::vector<ProbePath> select_paths(const Graph& g, Vertex source, Vertex target,
                                           PathSelection psc, PathState& state) {
    if (source >= g.vertex_count() || target >= g.vertex_count())
        throw std::invalid_argument("select_paths: endpoint out of range");
    if (source == target) throw std::invalid_argument("select_paths: source equals target");
    switch (psc) {
        case PathSelection::usp: {
            ProbePath p = usp_path(state.usp_tree(g, target), source);
            if (p.empty()) return {};
            return {std::move(p)};
        }
        case PathSelection::rsp: {
            Rng rng = make_rng(
                derive_seed(state.seed, "rsp-pair", detail::pack_pair(source, target)));
            ProbePath p = sample_shortest_path(state.dag_for(g, source), target, rng);
            if (p.empty()) return {};
            return {std::move(p)};
        }
        case PathSelection::asp:
            return enumerate_shortest_paths(g, source, target, state.asp_cap);
    }
    return {};
}

}  // namespace tracesim
