#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tracesim/explorer.hpp"
#include "tracesim/graph.hpp"

// Observables of a sampled graph: per-degree-class spectra, dissymmetry of
// the traversal counters, the sampled degree distribution, and coverage
// summaries.

namespace tracesim {

// One degree class: `population` vertices entered the average.
struct SpectrumBin {
    std::uint32_t degree = 0;
    std::size_t population = 0;
    double value = 0.0;
};

// Rows sorted by degree; classes nobody fell into are omitted.
using DegreeSpectrum = std::vector<SpectrumBin>;

namespace detail {

inline void check_match(const Graph& g, const SampledGraph& sg) {
    if (sg.n != g.vertex_count() || sg.m != g.edge_count())
        throw std::invalid_argument("sampled graph does not match graph");
}

}  // namespace detail

// Mean of `values` per degree class. `include` masks which vertices enter
// (all of them when null); excluded vertices count toward no bin.
inline DegreeSpectrum spectrum_by_degree(const std::vector<std::uint32_t>& degrees,
                                         const std::vector<double>& values,
                                         const std::vector<char>* include = nullptr) {
    if (degrees.size() != values.size())
        throw std::invalid_argument("spectrum_by_degree: size mismatch");
    if (include && include->size() != values.size())
        throw std::invalid_argument("spectrum_by_degree: mask size mismatch");
    std::map<std::uint32_t, std::pair<double, std::size_t>> acc;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (include && !(*include)[i]) continue;
        auto& [sum, count] = acc[degrees[i]];
        sum += values[i];
        ++count;
    }
    DegreeSpectrum s;
    s.reserve(acc.size());
    for (const auto& [k, sc] : acc)
        s.push_back({k, sc.second, sc.first / static_cast<double>(sc.second)});
    return s;
}

// Population-weighted merge of spectra from repeated experiments; the mean
// is total sum over total population, and `population` reports the pooled
// count across everything added.
class SpectrumAccumulator {
  public:
    void add(const DegreeSpectrum& s) {
        for (const auto& bin : s) {
            auto& [sum, count] = acc_[bin.degree];
            sum += bin.value * static_cast<double>(bin.population);
            count += bin.population;
        }
    }

    DegreeSpectrum mean() const {
        DegreeSpectrum s;
        s.reserve(acc_.size());
        for (const auto& [k, sc] : acc_)
            s.push_back({k, sc.second, sc.first / static_cast<double>(sc.second)});
        return s;
    }

  private:
    std::map<std::uint32_t, std::pair<double, std::size_t>> acc_;
};

inline std::vector<std::uint32_t> true_degrees(const Graph& g) {
    std::vector<std::uint32_t> k(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) k[v] = static_cast<std::uint32_t>(g.degree(v));
    return k;
}

// Fraction of degree-k vertices that were discovered. Populations cover the
// whole graph, so the population-weighted mean over bins equals N*/N.
inline DegreeSpectrum discovery_fraction_by_degree(const Graph& g, const SampledGraph& sg) {
    detail::check_match(g, sg);
    if (sg.probe_pairs == 0)
        throw std::invalid_argument("discovery_fraction_by_degree: nothing sampled");
    std::vector<double> found(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) found[v] = sg.vertex_discovered[v] ? 1.0 : 0.0;
    return spectrum_by_degree(true_degrees(g), found);
}

// Same spectrum from ensemble-averaged discovery probabilities.
inline DegreeSpectrum discovery_fraction_by_degree(const Graph& g,
                                                   const std::vector<double>& vertex_discovery) {
    if (vertex_discovery.size() != g.vertex_count())
        throw std::invalid_argument("discovery_fraction_by_degree: size mismatch");
    return spectrum_by_degree(true_degrees(g), vertex_discovery);
}

// Mean of k*_i/k_i over the discovered vertices of each degree class: how
// completely the neighborhoods of found vertices were mapped.
inline DegreeSpectrum discovered_degree_ratio(const Graph& g, const SampledGraph& sg) {
    detail::check_match(g, sg);
    const auto kstar = sampled_degrees(g, sg);
    std::vector<double> ratio(g.vertex_count(), 0.0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            ratio[v] = static_cast<double>(kstar[v]) / static_cast<double>(g.degree(v));
    return spectrum_by_degree(true_degrees(g), ratio, &sg.vertex_discovered);
}

// Per-vertex statistic with an explicit domain: `defined[v]` says whether
// value[v] means anything, `undefined_count` tallies the exclusions among
// discovered vertices.
struct VertexStatistic {
    std::vector<double> value;
    std::vector<char> defined;
    std::size_t undefined_count = 0;
};

// Participation ratio Y2(i) of the traversal frequencies over i's incident
// edges: 1 when a single edge carries everything, 1/k*_i when all discovered
// edges are used equally. Undefined where nothing was traversed.
inline VertexStatistic participation_ratio(const Graph& g, const SampledGraph& sg) {
    detail::check_match(g, sg);
    VertexStatistic st;
    st.value.assign(g.vertex_count(), 0.0);
    st.defined.assign(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t total = 0;
        for (EdgeId e : g.incident_edge_ids(v)) total += sg.edge_redundancy[e];
        if (total == 0) {
            if (sg.vertex_discovered[v]) ++st.undefined_count;
            continue;
        }
        double y2 = 0.0;
        for (EdgeId e : g.incident_edge_ids(v)) {
            const double f =
                static_cast<double>(sg.edge_redundancy[e]) / static_cast<double>(total);
            y2 += f * f;
        }
        st.value[v] = y2;
        st.defined[v] = 1;
    }
    return st;
}

// Normalized entropy of the ordered (in, out) neighbor pairs probes used to
// cross i: 1 when all k*(k*-1) pairs are equally frequent, 0 when a single
// pair dominates. Needs at least one interior transit and k*_i >= 2.
inline VertexStatistic transit_entropy(const Graph& g, const SampledGraph& sg) {
    detail::check_match(g, sg);
    const auto kstar = sampled_degrees(g, sg);
    VertexStatistic st;
    st.value.assign(g.vertex_count(), 0.0);
    st.defined.assign(g.vertex_count(), 0);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& tv = sg.transit[v];
        if (tv.empty() || kstar[v] < 2) {
            if (sg.vertex_discovered[v]) ++st.undefined_count;
            continue;
        }
        counts.assign(tv.begin(), tv.end());
        std::sort(counts.begin(), counts.end());  // fixed summation order
        std::uint64_t total = 0;
        for (const auto& [key, c] : counts) total += c;
        double h = 0.0;
        for (const auto& [key, c] : counts) {
            const double f = static_cast<double>(c) / static_cast<double>(total);
            h -= f * std::log(f);
        }
        const double pairs = static_cast<double>(kstar[v]) * (static_cast<double>(kstar[v]) - 1.0);
        st.value[v] = h / std::log(pairs);
        st.defined[v] = 1;
    }
    return st;
}

// The dissymmetry observables bundled with their spectra.
struct DissymmetryReport {
    VertexStatistic y2;
    VertexStatistic entropy;
    DegreeSpectrum y2_by_degree;          // Y2(k)
    DegreeSpectrum y2_by_sampled_degree;  // Y2(k*)
    DegreeSpectrum entropy_by_degree;     // H(k)
};

inline DissymmetryReport dissymmetry_report(const Graph& g, const SampledGraph& sg) {
    DissymmetryReport r;
    r.y2 = participation_ratio(g, sg);
    r.entropy = transit_entropy(g, sg);
    const auto k = true_degrees(g);
    const auto kstar = sampled_degrees(g, sg);
    r.y2_by_degree = spectrum_by_degree(k, r.y2.value, &r.y2.defined);
    r.y2_by_sampled_degree = spectrum_by_degree(kstar, r.y2.value, &r.y2.defined);
    r.entropy_by_degree = spectrum_by_degree(k, r.entropy.value, &r.entropy.defined);
    return r;
}

// Sampled degrees of discovered vertices as a histogram, mergeable across
// realizations before turning into a distribution.
inline std::map<std::uint32_t, std::size_t> sampled_degree_histogram(const Graph& g,
                                                                     const SampledGraph& sg) {
    detail::check_match(g, sg);
    const auto kstar = sampled_degrees(g, sg);
    std::map<std::uint32_t, std::size_t> h;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (sg.vertex_discovered[v]) ++h[kstar[v]];
    return h;
}

struct CcdfPoint {
    std::uint32_t degree = 0;
    std::size_t count = 0;  // vertices with exactly this sampled degree
    double ccdf = 0.0;      // P(k* > degree)
};

inline std::vector<CcdfPoint> ccdf_from_histogram(const std::map<std::uint32_t, std::size_t>& h) {
    std::size_t total = 0;
    for (const auto& [k, c] : h) total += c;
    if (total == 0) throw std::invalid_argument("ccdf_from_histogram: empty histogram");
    std::vector<CcdfPoint> out;
    out.reserve(h.size());
    std::size_t above = total;
    for (const auto& [k, c] : h) {
        above -= c;
        out.push_back({k, c, static_cast<double>(above) / static_cast<double>(total)});
    }
    return out;
}

// Empirical complementary cumulative distribution of k* over discovered
// vertices, one point per occurring degree.
inline std::vector<CcdfPoint> sampled_degree_distribution(const Graph& g,
                                                          const SampledGraph& sg) {
    return ccdf_from_histogram(sampled_degree_histogram(g, sg));
}

// Coverage of one experiment, with the budget it ran under.
struct ExplorationSummary {
    double frac_vertices = 0.0;  // N*/N
    double frac_edges = 0.0;     // E*/E
    double degree_ratio = 0.0;   // mean sampled degree over mean true degree
    ProbeBudget budget;
};

inline ExplorationSummary summary(const Graph& g, const SampledGraph& sg,
                                  const ProbeBudget& budget) {
    detail::check_match(g, sg);
    if (sg.probe_pairs == 0) throw std::invalid_argument("summary: empty experiment");
    ExplorationSummary s;
    const auto nstar = static_cast<double>(sg.discovered_vertex_count());
    const auto estar = static_cast<double>(sg.discovered_edge_count());
    s.frac_vertices = nstar / static_cast<double>(g.vertex_count());
    s.frac_edges = estar / static_cast<double>(g.edge_count());
    s.degree_ratio = nstar > 0.0 ? (estar * static_cast<double>(g.vertex_count())) /
                                       (nstar * static_cast<double>(g.edge_count()))
                                 : 0.0;
    s.budget = budget;
    return s;
}

}  // namespace tracesim
