#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tracesim/graph.hpp"
#include "tracesim/rng.hpp"

// Random graph generators: Erdos-Renyi G(n,p) and the Molloy-Reed
// configuration model fed by heavy-tailed degree sequences. Same seed, same
// graph, bit for bit.

namespace tracesim {

// G(n,p) with p chosen so the expected mean degree matches. Pairs are
// enumerated in canonical order and skipped geometrically, so the cost is
// proportional to the number of edges produced rather than n^2.
inline Graph generate_er(std::size_t n, double mean_degree, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("generate_er: need n >= 2");
    const double p = mean_degree / static_cast<double>(n - 1);
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("generate_er: mean_degree must lie in (0, n-1)");
    Rng rng = make_rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(0.5 * mean_degree * static_cast<double>(n) * 1.1));
    const double log1mp = std::log1p(-p);
    // Batagelj-Brandes skipping over the linearized pair sequence.
    long long v = 1;
    long long w = -1;
    while (v < static_cast<long long>(n)) {
        const double r = uniform_real01(rng);
        w += 1 + static_cast<long long>(std::floor(std::log1p(-r) / log1mp));
        while (w >= v && v < static_cast<long long>(n)) {
            w -= v;
            ++v;
        }
        if (v < static_cast<long long>(n))
            edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
    return Graph(n, edges);
}

using DegreeSequence = std::vector<std::uint32_t>;

struct DegreeDistributionSpec {
    enum class Family { pareto, weibull };

    Family family = Family::pareto;
    double gamma = 2.3;  // pareto exponent
    double shape = 0.25;  // weibull a
    double scale = 0.6;   // weibull c
    std::uint32_t k_min = 1;
    std::uint32_t k_max = 0;  // 0 means "resolve to n-1 when sampling"

    static DegreeDistributionSpec pareto(double gamma, std::uint32_t k_min = 1,
                                         std::uint32_t k_max = 0) {
        DegreeDistributionSpec s;
        s.family = Family::pareto;
        s.gamma = gamma;
        s.k_min = k_min;
        s.k_max = k_max;
        return s;
    }
    static DegreeDistributionSpec weibull(double a, double c, std::uint32_t k_min = 1,
                                          std::uint32_t k_max = 0) {
        DegreeDistributionSpec s;
        s.family = Family::weibull;
        s.shape = a;
        s.scale = c;
        s.k_min = k_min;
        s.k_max = k_max;
        return s;
    }
};

// Draws n degrees by inverse-CDF sampling of the continuous law, rounded to
// the nearest integer and clamped to [k_min, k_max]. Each integer k thus
// carries the continuous mass of [k-1/2, k+1/2), with everything below
// k_min+1/2 absorbed into k_min and everything above k_max-1/2 into k_max.
// Rounding instead of renormalizing the tail keeps the mean where the
// continuous law puts it; conditioning away the sub-k_min mass would inflate
// it badly for the heavy-tailed parameter ranges used here.
//
// If the degree sum comes out odd, one uniformly chosen vertex with degree
// below k_max is bumped by one so a configuration model can realize the
// sequence.
inline DegreeSequence sample_degree_sequence(const DegreeDistributionSpec& spec, std::size_t n,
                                             std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("sample_degree_sequence: need n >= 2");
    const std::uint32_t k_min = spec.k_min;
    const std::uint32_t k_max = spec.k_max == 0 ? static_cast<std::uint32_t>(n - 1) : spec.k_max;
    if (k_min < 1 || k_min > k_max)
        throw std::invalid_argument("sample_degree_sequence: need 1 <= k_min <= k_max");
    if (k_max > n - 1)
        throw std::invalid_argument("sample_degree_sequence: k_max must be at most n-1");
    if (spec.family == DegreeDistributionSpec::Family::pareto && !(spec.gamma > 1.0))
        throw std::invalid_argument("sample_degree_sequence: pareto needs gamma > 1");
    if (spec.family == DegreeDistributionSpec::Family::weibull &&
        (!(spec.shape > 0.0) || !(spec.scale > 0.0)))
        throw std::invalid_argument("sample_degree_sequence: weibull needs a > 0 and c > 0");

    Rng rng = make_rng(seed);
    DegreeSequence deg(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = uniform_real01(rng);
        double x;
        if (spec.family == DegreeDistributionSpec::Family::pareto) {
            x = static_cast<double>(k_min) * std::pow(u, -1.0 / (spec.gamma - 1.0));
        } else {
            x = spec.scale * std::pow(-std::log(u), 1.0 / spec.shape);
        }
        std::uint32_t k;
        if (x >= static_cast<double>(k_max))
            k = k_max;
        else if (x <= static_cast<double>(k_min))
            k = k_min;
        else
            k = static_cast<std::uint32_t>(std::floor(x + 0.5));
        deg[i] = std::clamp(k, k_min, k_max);
    }

    std::uint64_t sum = std::accumulate(deg.begin(), deg.end(), std::uint64_t{0});
    if (sum % 2 != 0) {
        std::vector<std::uint32_t> fixable;
        for (std::uint32_t i = 0; i < n; ++i)
            if (deg[i] < k_max) fixable.push_back(i);
        if (fixable.empty())
            throw std::runtime_error("sample_degree_sequence: odd sum and no vertex below k_max");
        ++deg[fixable[uniform_index(rng, fixable.size())]];
    }
    return deg;
}

// Erdos-Gallai test: d (any order) is realizable as a simple graph.
inline bool is_graphical(DegreeSequence d) {
    const std::size_t n = d.size();
    std::uint64_t sum = std::accumulate(d.begin(), d.end(), std::uint64_t{0});
    if (sum % 2 != 0) return false;
    for (std::uint32_t k : d)
        if (k >= n) return false;
    std::sort(d.begin(), d.end(), std::greater<>());
    std::vector<std::uint64_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];
    for (std::size_t k = 1; k <= n; ++k) {
        // first position past k whose degree drops below k
        auto it = std::lower_bound(d.begin() + static_cast<std::ptrdiff_t>(k), d.end(), k,
                                   [](std::uint32_t deg, std::size_t bound) {
                                       return deg >= static_cast<std::uint32_t>(bound);
                                   });
        const std::size_t idx = static_cast<std::size_t>(it - d.begin());
        const std::uint64_t tail_min =
            static_cast<std::uint64_t>(idx - k) * k + (prefix[n] - prefix[idx]);
        if (prefix[k] > static_cast<std::uint64_t>(k) * (k - 1) + tail_min) return false;
    }
    return true;
}

namespace detail {

inline std::uint64_t pack_edge(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace detail

// Molloy-Reed construction: shuffle stubs, pair them up, then repair
// self-loops and duplicates by double edge swaps against random good edges,
// reshuffling from scratch if the repair stalls.  The output realizes the
// input degrees exactly; if it does not converge within max_rewire_attempts
// proposals (default 100*m) it gives up with a diagnostic rather than
// silently dropping edges.
inline Graph generate_configuration_model(const DegreeSequence& deg, std::uint64_t seed,
                                          std::uint64_t max_rewire_attempts = 0) {
    const std::size_t n = deg.size();
    if (n < 2) throw std::invalid_argument("generate_configuration_model: need n >= 2");
    for (std::uint32_t k : deg)
        if (k < 1 || k >= n)
            throw std::invalid_argument(
                "generate_configuration_model: degrees must lie in [1, n-1]");
    if (!is_graphical(deg))
        throw std::invalid_argument("generate_configuration_model: sequence is not graphical");

    const std::uint64_t stub_count = std::accumulate(deg.begin(), deg.end(), std::uint64_t{0});
    const std::size_t m = static_cast<std::size_t>(stub_count / 2);
    if (max_rewire_attempts == 0) max_rewire_attempts = 100 * static_cast<std::uint64_t>(m);

    Rng rng = make_rng(seed);
    std::vector<Vertex> stubs;
    stubs.reserve(stub_count);
    for (Vertex v = 0; v < n; ++v)
        for (std::uint32_t i = 0; i < deg[v]; ++i) stubs.push_back(v);

    // Good edges go into the set; offending pairs queue up for repair.
    std::vector<Edge> edges;
    edges.reserve(m);
    std::unordered_map<std::uint64_t, std::uint32_t> pos;  // packed edge -> index in edges
    pos.reserve(m * 2);
    std::vector<Edge> bad;
    auto try_insert = [&](Vertex a, Vertex b) {
        if (a == b) return false;
        auto [it, fresh] = pos.try_emplace(detail::pack_edge(a, b),
                                           static_cast<std::uint32_t>(edges.size()));
        if (!fresh) return false;
        if (a > b) std::swap(a, b);
        edges.push_back({a, b});
        return true;
    };
    auto deal = [&] {
        shuffle(stubs, rng);
        edges.clear();
        pos.clear();
        bad.clear();
        for (std::size_t i = 0; i < stubs.size(); i += 2)
            if (!try_insert(stubs[i], stubs[i + 1])) bad.push_back({stubs[i], stubs[i + 1]});
    };
    deal();

    // Uniform proposals alone can stall two ways: a fix may exist but be rare
    // (a hub duplicate with few open slots), or no fix may exist at all (a
    // duplicate (u,v) where u and v are both missing the same single vertex;
    // K4 with one doubled pair is the smallest case).  After m/2 consecutive
    // rejections, fall back to an exhaustive pass: execute the first valid
    // swap found, and reshuffle the stubs from scratch only when no offender
    // has one.  The pass costs O(|bad|*m), amortized O(|bad|) per rejection at
    // this firing rate, and the window is short enough that hub-heavy draws
    // (k_max near n) repair within the default cap instead of grinding it
    // away on misses.  Every iteration counts toward the attempt budget.
    const std::uint64_t stall_limit = std::max<std::uint64_t>(m / 2, 16);
    const auto swap_ok = [&](Vertex u, Vertex v, Vertex x, Vertex y) {
        if (u == x || v == y) return false;
        const std::uint64_t k1 = detail::pack_edge(u, x);
        const std::uint64_t k2 = detail::pack_edge(v, y);
        return k1 != k2 && !pos.count(k1) && !pos.count(k2);
    };
    // Replace edges[j] and one offending pair (u,v) by (u,x), (v,y), where
    // (x,y) is edges[j] in the chosen orientation.
    const auto apply_swap = [&](std::uint32_t j, Vertex u, Vertex v, Vertex x, Vertex y) {
        const std::uint64_t k1 = detail::pack_edge(u, x);
        const std::uint64_t k2 = detail::pack_edge(v, y);
        const std::uint64_t kold = detail::pack_edge(edges[j].u, edges[j].v);
        const std::uint32_t last = static_cast<std::uint32_t>(edges.size() - 1);
        if (j != last) {
            edges[j] = edges[last];
            pos[detail::pack_edge(edges[j].u, edges[j].v)] = j;
        }
        edges.pop_back();
        pos.erase(kold);
        pos.emplace(k1, static_cast<std::uint32_t>(edges.size()));
        edges.push_back({std::min(u, x), std::max(u, x)});
        pos.emplace(k2, static_cast<std::uint32_t>(edges.size()));
        edges.push_back({std::min(v, y), std::max(v, y)});
    };
    std::uint64_t attempts = 0;
    std::uint64_t stalled = 0;
    while (!bad.empty()) {
        if (attempts++ >= max_rewire_attempts)
            throw std::runtime_error(
                "generate_configuration_model: rewiring did not converge within " +
                std::to_string(max_rewire_attempts) + " attempts");
        if (edges.empty() || stalled >= stall_limit) {
            bool fixed = false;
            for (std::size_t b = 0; b < bad.size() && !fixed; ++b)
                for (std::uint32_t j = 0; j < edges.size() && !fixed; ++j)
                    for (int o = 0; o < 2 && !fixed; ++o) {
                        const Vertex x = o ? edges[j].v : edges[j].u;
                        const Vertex y = o ? edges[j].u : edges[j].v;
                        if (!swap_ok(bad[b].u, bad[b].v, x, y)) continue;
                        const Vertex u = bad[b].u, v = bad[b].v;
                        bad[b] = bad.back();
                        bad.pop_back();
                        apply_swap(j, u, v, x, y);
                        fixed = true;
                    }
            if (!fixed) deal();
            stalled = 0;
            continue;
        }
        const Edge offender = bad.back();
        Vertex u = offender.u, v = offender.v;
        const std::uint32_t j = static_cast<std::uint32_t>(uniform_index(rng, edges.size()));
        Vertex x = edges[j].u, y = edges[j].v;
        if (bernoulli(rng, 0.5)) std::swap(x, y);
        // Proposed replacement: (u,x) and (v,y) in place of offender + (x,y).
        if (!swap_ok(u, v, x, y)) {
            ++stalled;
            continue;
        }
        stalled = 0;
        bad.pop_back();
        apply_swap(j, u, v, x, y);
    }

    return Graph(n, edges);
}

}  // namespace tracesim
