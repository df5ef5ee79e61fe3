#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tracesim/centrality.hpp"
#include "tracesim/graph.hpp"
#include "tracesim/paths.hpp"
#include "tracesim/rng.hpp"

// The exploration experiment: place sources and targets, trace probes
// between every pair under the chosen path-selection model, and record what
// the union of probes would let an observer reconstruct.

namespace tracesim {

enum class PlacementStrategy { random, low_betweenness };

inline const char* to_string(PlacementStrategy s) {
    return s == PlacementStrategy::random ? "random" : "low_betweenness";
}

struct Placement {
    std::vector<Vertex> sources;
    std::vector<Vertex> targets;  // disjoint from sources
    PlacementStrategy strategy = PlacementStrategy::random;
};

// Probe intensity of an experiment: n_s sources and n_t targets on n
// vertices give source/target densities and the probe density
// eps = n_s * n_t / n that the predictors are parameterized by.
struct ProbeBudget {
    std::size_t n = 0;
    std::size_t n_s = 0;
    std::size_t n_t = 0;
    double rho_s = 0.0;  // n_s / n
    double rho_t = 0.0;  // n_t / n
    double eps = 0.0;    // n_s * n_t / n
};

inline ProbeBudget make_budget(std::size_t n, std::size_t n_s, std::size_t n_t) {
    if (n == 0) throw std::invalid_argument("make_budget: empty graph");
    if (n_s == 0 || n_t == 0)
        throw std::invalid_argument("make_budget: need at least one source and one target");
    if (n_s + n_t > n) throw std::invalid_argument("make_budget: n_s + n_t exceeds vertex count");
    ProbeBudget b;
    b.n = n;
    b.n_s = n_s;
    b.n_t = n_t;
    b.rho_s = static_cast<double>(n_s) / static_cast<double>(n);
    b.rho_t = static_cast<double>(n_t) / static_cast<double>(n);
    b.eps = static_cast<double>(n_s) * static_cast<double>(n_t) / static_cast<double>(n);
    return b;
}

// n_s + n_t distinct vertices drawn uniformly; the first n_s become sources.
inline Placement place_random(const Graph& g, std::size_t n_s, std::size_t n_t,
                              std::uint64_t seed) {
    const std::size_t n = g.vertex_count();
    if (n_s == 0 || n_t == 0)
        throw std::invalid_argument("place_random: need at least one source and one target");
    if (n_s + n_t > n)
        throw std::invalid_argument("place_random: n_s + n_t exceeds vertex count");
    Rng rng = make_rng(seed);
    std::vector<Vertex> picks = sample_distinct(rng, static_cast<std::uint32_t>(n), n_s + n_t);
    Placement p;
    p.sources.assign(picks.begin(), picks.begin() + static_cast<std::ptrdiff_t>(n_s));
    p.targets.assign(picks.begin() + static_cast<std::ptrdiff_t>(n_s), picks.end());
    p.strategy = PlacementStrategy::random;
    return p;
}

// Deterministic low-centrality deployment: vertices sorted by (b_i, label),
// the n_s smallest become sources, the next n_t targets.
inline Placement place_low_betweenness(const Graph& g, const BetweennessTable& table,
                                       std::size_t n_s, std::size_t n_t) {
    const std::size_t n = g.vertex_count();
    if (n_s == 0 || n_t == 0)
        throw std::invalid_argument(
            "place_low_betweenness: need at least one source and one target");
    if (n_s + n_t > n)
        throw std::invalid_argument("place_low_betweenness: n_s + n_t exceeds vertex count");
    if (table.vertex.size() != n)
        throw std::invalid_argument("place_low_betweenness: table does not match graph");
    std::vector<Vertex> by_b(n);
    for (Vertex v = 0; v < n; ++v) by_b[v] = v;
    std::sort(by_b.begin(), by_b.end(), [&](Vertex a, Vertex b) {
        if (table.vertex[a] != table.vertex[b]) return table.vertex[a] < table.vertex[b];
        return a < b;
    });
    Placement p;
    p.sources.assign(by_b.begin(), by_b.begin() + static_cast<std::ptrdiff_t>(n_s));
    p.targets.assign(by_b.begin() + static_cast<std::ptrdiff_t>(n_s),
                     by_b.begin() + static_cast<std::ptrdiff_t>(n_s + n_t));
    p.strategy = PlacementStrategy::low_betweenness;
    return p;
}

// What one experiment discovered, with redundancy counters.
//
//   vertex_redundancy r_n(i): probes visiting i, endpoints included;
//   edge_redundancy   r_e(e): probes traversing e;
//   transit c_i(k,j):         interior transits entering i from k, leaving
//                             toward j (key packs the ordered neighbor pair).
//
// USP/RSP probes contribute their one path per pair; ASP contributes each
// vertex, DAG edge, and adjacent DAG-edge pair of the pair's shortest-path
// DAG exactly once. traversed_edge_steps accumulates the same traversals the
// edge counters see, so sum(r_e) == traversed_edge_steps always.
struct SampledGraph {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<char> vertex_discovered;
    std::vector<char> edge_discovered;
    std::vector<std::uint64_t> vertex_redundancy;
    std::vector<std::uint64_t> edge_redundancy;
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> transit;
    std::uint64_t traversed_edge_steps = 0;
    std::uint64_t probe_pairs = 0;
    std::uint64_t skipped_pairs = 0;  // pairs with no connecting path (0 on connected graphs)

    std::size_t discovered_vertex_count() const {
        return static_cast<std::size_t>(
            std::count(vertex_discovered.begin(), vertex_discovered.end(), char(1)));
    }
    std::size_t discovered_edge_count() const {
        return static_cast<std::size_t>(
            std::count(edge_discovered.begin(), edge_discovered.end(), char(1)));
    }
};

// Sampled degree k*_i: number of incident discovered edges.
inline std::vector<std::uint32_t> sampled_degrees(const Graph& g, const SampledGraph& sg) {
    std::vector<std::uint32_t> k(g.vertex_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (sg.edge_discovered[e]) {
            ++k[g.edge(e).u];
            ++k[g.edge(e).v];
        }
    return k;
}

namespace detail {

inline void record_path(const Graph& g, const ProbePath& path, SampledGraph& sg) {
    if (path.empty()) {
        ++sg.skipped_pairs;
        return;
    }
    ++sg.probe_pairs;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Vertex v = path[i];
        sg.vertex_discovered[v] = 1;
        ++sg.vertex_redundancy[v];
        if (i + 1 < path.size()) {
            const EdgeId e = g.edge_id(v, path[i + 1]);
            sg.edge_discovered[e] = 1;
            ++sg.edge_redundancy[e];
            ++sg.traversed_edge_steps;
        }
        if (i > 0 && i + 1 < path.size())
            ++sg.transit[v][pack_pair(path[i - 1], path[i + 1])];
    }
}

}  // namespace detail

// Trace probes for every source-target pair. The graph must be connected and
// the placement disjoint and in range. All randomness (USP tie-breaks, RSP
// draws) derives from `seed` via per-target and per-pair labels, so the
// result does not depend on iteration or grouping order.
inline SampledGraph run_exploration(const Graph& g, const Placement& placement,
                                    PathSelection psc, std::uint64_t seed) {
    const std::size_t n = g.vertex_count();
    if (placement.sources.empty() || placement.targets.empty())
        throw std::invalid_argument("run_exploration: placement needs sources and targets");
    {
        std::vector<char> role(n, 0);
        for (Vertex s : placement.sources) {
            if (s >= n) throw std::invalid_argument("run_exploration: source out of range");
            role[s] = 1;
        }
        for (Vertex t : placement.targets) {
            if (t >= n) throw std::invalid_argument("run_exploration: target out of range");
            if (role[t]) throw std::invalid_argument("run_exploration: placement not disjoint");
            role[t] = 2;
        }
    }
    if (!is_connected(g)) throw std::invalid_argument("run_exploration: graph not connected");

    SampledGraph sg;
    sg.n = n;
    sg.m = g.edge_count();
    sg.vertex_discovered.assign(n, 0);
    sg.edge_discovered.assign(sg.m, 0);
    sg.vertex_redundancy.assign(n, 0);
    sg.edge_redundancy.assign(sg.m, 0);
    sg.transit.assign(n, {});

    const auto& S = placement.sources;
    const auto& T = placement.targets;

    if (psc == PathSelection::usp) {
        for (Vertex t : T) {
            const UspTree tree = build_usp_tree(g, t, derive_seed(seed, "usp"));
            for (Vertex s : S) detail::record_path(g, usp_path(tree, s), sg);
        }
        return sg;
    }

    if (psc == PathSelection::rsp) {
        // Root BFS on the smaller side; each pair gets its own stream keyed
        // by (source, target), and the side sizes fix the rooting, so a rerun
        // of the same placement reproduces the same draws.
        const bool root_targets = T.size() <= S.size();
        const auto& roots = root_targets ? T : S;
        const auto& others = root_targets ? S : T;
        for (Vertex r : roots) {
            const ShortestPathDag dag = bfs_dag(g, r);
            for (Vertex o : others) {
                const Vertex s = root_targets ? o : r;
                const Vertex t = root_targets ? r : o;
                Rng rng = make_rng(derive_seed(seed, "rsp-pair", detail::pack_pair(s, t)));
                // The raw path runs root -> other; recorded paths must run
                // source -> target, so flip it when the root is the target.
                ProbePath path = sample_shortest_path(dag, o, rng);
                if (root_targets) std::reverse(path.begin(), path.end());
                detail::record_path(g, path, sg);
            }
        }
        return sg;
    }

    // ASP: per pair, take the closure of the far endpoint through the
    // predecessor DAG and count every element once. Epoch stamps avoid an
    // O(n) reset between pairs.
    const bool root_targets = T.size() <= S.size();
    const auto& roots = root_targets ? T : S;
    const auto& others = root_targets ? S : T;
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t epoch = 0;
    std::vector<Vertex> stack;
    std::vector<Vertex> closure;
    for (Vertex r : roots) {
        const ShortestPathDag dag = bfs_dag(g, r);
        for (Vertex o : others) {
            if (dag.dist[o] == kUnreachable) {
                ++sg.skipped_pairs;
                continue;
            }
            ++sg.probe_pairs;
            ++epoch;
            stack.assign(1, o);
            stamp[o] = epoch;
            closure.clear();
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                closure.push_back(v);
                for (Vertex u : dag.preds[v])
                    if (stamp[u] != epoch) {
                        stamp[u] = epoch;
                        stack.push_back(u);
                    }
            }
            for (Vertex v : closure) {
                sg.vertex_discovered[v] = 1;
                ++sg.vertex_redundancy[v];
                for (Vertex u : dag.preds[v]) {
                    const EdgeId e = g.edge_id(v, u);
                    sg.edge_discovered[e] = 1;
                    ++sg.edge_redundancy[e];
                    ++sg.traversed_edge_steps;
                }
                if (v == r || v == o) continue;
                // Interior transits: every (incoming arc, outgoing arc)
                // combination at v. Incoming arcs come from closure members
                // one hop farther from the root. Probe direction runs source
                // to target, which matches the arcs only when the DAG is
                // rooted at a target; otherwise the pair order flips.
                for (Vertex w : g.neighbors(v)) {
                    if (stamp[w] != epoch || dag.dist[w] != dag.dist[v] + 1) continue;
                    for (Vertex u : dag.preds[v])
                        ++sg.transit[v][root_targets ? detail::pack_pair(w, u)
                                                     : detail::pack_pair(u, w)];
                }
            }
        }
    }
    return sg;
}

// Ensemble averages over repeated experiments with a fixed probe budget.
// Per-element vectors hold means over realizations; the per-realization
// coverage series feed summary statistics downstream.
struct MonteCarloResult {
    std::size_t realizations = 0;
    std::vector<double> vertex_discovery;   // <pi_i>
    std::vector<double> edge_discovery;     // <pi_ij>
    std::vector<double> vertex_redundancy;  // <r_n(i)>
    std::vector<double> edge_redundancy;    // <r_e>
    std::vector<double> sampled_degree;     // <k*_i>
    std::vector<double> frac_vertices;      // N*/N per realization
    std::vector<double> frac_edges;         // E*/E per realization
    std::vector<double> degree_ratio;       // mean sampled over mean true degree
};

using RealizationCallback = std::function<void(std::size_t, const SampledGraph&)>;

// Runs `realizations` independent experiments. Placement seeds derive from
// (seed, "placement", r) and exploration seeds from (seed, "exploration", r);
// the low-betweenness strategy is deterministic, so its realizations differ
// only through path randomness. The optional callback sees every realization
// (for spectra that do not average element-wise).
inline MonteCarloResult monte_carlo_exploration(const Graph& g, const ProbeBudget& budget,
                                                PathSelection psc, PlacementStrategy strategy,
                                                std::size_t realizations, std::uint64_t seed,
                                                const BetweennessTable* table = nullptr,
                                                const RealizationCallback& callback = {}) {
    if (realizations == 0)
        throw std::invalid_argument("monte_carlo_exploration: need at least one realization");
    if (budget.n != g.vertex_count())
        throw std::invalid_argument("monte_carlo_exploration: budget computed for a different n");
    if (strategy == PlacementStrategy::low_betweenness && table == nullptr)
        throw std::invalid_argument(
            "monte_carlo_exploration: low_betweenness strategy needs a betweenness table");

    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    MonteCarloResult mc;
    mc.realizations = realizations;
    mc.vertex_discovery.assign(n, 0.0);
    mc.edge_discovery.assign(m, 0.0);
    mc.vertex_redundancy.assign(n, 0.0);
    mc.edge_redundancy.assign(m, 0.0);
    mc.sampled_degree.assign(n, 0.0);
    mc.frac_vertices.reserve(realizations);
    mc.frac_edges.reserve(realizations);
    mc.degree_ratio.reserve(realizations);

    for (std::size_t r = 0; r < realizations; ++r) {
        const Placement placement =
            strategy == PlacementStrategy::random
                ? place_random(g, budget.n_s, budget.n_t, derive_seed(seed, "placement", r))
                : place_low_betweenness(g, *table, budget.n_s, budget.n_t);
        const SampledGraph sg =
            run_exploration(g, placement, psc, derive_seed(seed, "exploration", r));

        for (std::size_t v = 0; v < n; ++v) {
            mc.vertex_discovery[v] += sg.vertex_discovered[v];
            mc.vertex_redundancy[v] += static_cast<double>(sg.vertex_redundancy[v]);
        }
        for (std::size_t e = 0; e < m; ++e) {
            mc.edge_discovery[e] += sg.edge_discovered[e];
            mc.edge_redundancy[e] += static_cast<double>(sg.edge_redundancy[e]);
        }
        const auto kstar = sampled_degrees(g, sg);
        for (std::size_t v = 0; v < n; ++v) mc.sampled_degree[v] += kstar[v];

        const auto nstar = static_cast<double>(sg.discovered_vertex_count());
        const auto estar = static_cast<double>(sg.discovered_edge_count());
        mc.frac_vertices.push_back(nstar / static_cast<double>(n));
        mc.frac_edges.push_back(estar / static_cast<double>(m));
        mc.degree_ratio.push_back(nstar > 0.0
                                      ? (estar * static_cast<double>(n)) /
                                            (nstar * static_cast<double>(m))
                                      : 0.0);

        if (callback) callback(r, sg);
    }

    const double inv = 1.0 / static_cast<double>(realizations);
    for (double& x : mc.vertex_discovery) x *= inv;
    for (double& x : mc.edge_discovery) x *= inv;
    for (double& x : mc.vertex_redundancy) x *= inv;
    for (double& x : mc.edge_redundancy) x *= inv;
    for (double& x : mc.sampled_degree) x *= inv;
    return mc;
}

}  // namespace tracesim
