#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tracesim/centrality.hpp"
#include "tracesim/explorer.hpp"
#include "tracesim/graph.hpp"

// Mean-field predictors for the exploration observables. All formulas treat
// placements as uncorrelated, so they are overlay curves, not error bars:
// discovery probabilities take betweenness rescaled by n (the b~ columns of
// BetweennessTable), redundancies take the raw values.

namespace tracesim {

// Probability that an edge with rescaled betweenness b~ ends up in the
// sampled graph: 1 - exp(-eps * b~).
inline double predict_edge_discovery(double b_tilde, double eps) {
    if (b_tilde < 0.0 || eps < 0.0)
        throw std::invalid_argument("predict_edge_discovery: negative input");
    return -std::expm1(-eps * b_tilde);
}

// Probability that a vertex with rescaled betweenness b~ is discovered:
// 1 - (1 - rho_t) * exp(-eps * b~). The rho_t floor is the chance of being
// picked as a target; vertices that route nothing are found only that way.
inline double predict_vertex_discovery(double b_tilde, double eps, double rho_t) {
    if (b_tilde < 0.0 || eps < 0.0)
        throw std::invalid_argument("predict_vertex_discovery: negative input");
    if (rho_t < 0.0 || rho_t > 1.0)
        throw std::invalid_argument("predict_vertex_discovery: rho_t outside [0,1]");
    return 1.0 - (1.0 - rho_t) * std::exp(-eps * b_tilde);
}

// Expected discovered degree, linearized: 2*eps*(1 + b~). The 2*eps term
// counts edges adjacent to the vertex acting as a probe endpoint. Callers
// overlaying against data may clamp at the true degree.
inline double predict_discovered_degree(double b_tilde, double eps) {
    if (b_tilde < 0.0 || eps < 0.0)
        throw std::invalid_argument("predict_discovered_degree: negative input");
    return 2.0 * eps * (1.0 + b_tilde);
}

// Expected traversal counts: an edge is crossed by each of the
// rho_s*rho_t*b_ij probe pairs routed over it; a vertex additionally sees
// 2*eps endpoint visits. Raw betweenness, not rescaled.
struct RedundancyPrediction {
    std::vector<double> edge;    // rho_s * rho_t * b_ij
    std::vector<double> vertex;  // 2*eps + rho_s * rho_t * b_i
};

inline RedundancyPrediction predict_redundancies(const BetweennessTable& t, double rho_s,
                                                 double rho_t) {
    if (rho_s < 0.0 || rho_s > 1.0 || rho_t < 0.0 || rho_t > 1.0)
        throw std::invalid_argument("predict_redundancies: densities outside [0,1]");
    const double eps = static_cast<double>(t.n) * rho_s * rho_t;
    RedundancyPrediction r;
    r.edge.reserve(t.edge.size());
    for (double b : t.edge) r.edge.push_back(rho_s * rho_t * b);
    r.vertex.reserve(t.vertex.size());
    for (double b : t.vertex) r.vertex.push_back(2.0 * eps + rho_s * rho_t * b);
    return r;
}

// Every predictor evaluated over a graph. discovered_degree carries the
// linearized form; discovered_degree_sum sums the per-edge discovery
// probabilities over each vertex's incident edges, which stays below the
// true degree where the linearization overshoots.
struct TheoryPrediction {
    std::vector<double> edge_discovery;
    std::vector<double> vertex_discovery;
    std::vector<double> discovered_degree;
    std::vector<double> discovered_degree_sum;
    std::vector<double> edge_redundancy;
    std::vector<double> vertex_redundancy;
};

inline TheoryPrediction predict_all(const Graph& g, const BetweennessTable& t,
                                    const ProbeBudget& budget) {
    if (t.vertex.size() != g.vertex_count() || t.edge.size() != g.edge_count())
        throw std::invalid_argument("predict_all: betweenness table does not match graph");
    if (budget.n != g.vertex_count())
        throw std::invalid_argument("predict_all: budget computed for a different n");
    TheoryPrediction p;
    p.edge_discovery.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        p.edge_discovery.push_back(predict_edge_discovery(t.edge_rescaled(e), budget.eps));
    p.vertex_discovery.reserve(g.vertex_count());
    p.discovered_degree.reserve(g.vertex_count());
    p.discovered_degree_sum.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        p.vertex_discovery.push_back(
            predict_vertex_discovery(t.vertex_rescaled(v), budget.eps, budget.rho_t));
        p.discovered_degree.push_back(
            predict_discovered_degree(t.vertex_rescaled(v), budget.eps));
        double sum = 0.0;
        for (EdgeId e : g.incident_edge_ids(v)) sum += p.edge_discovery[e];
        p.discovered_degree_sum.push_back(sum);
    }
    RedundancyPrediction r = predict_redundancies(t, budget.rho_s, budget.rho_t);
    p.edge_redundancy = std::move(r.edge);
    p.vertex_redundancy = std::move(r.vertex);
    return p;
}

}  // namespace tracesim
