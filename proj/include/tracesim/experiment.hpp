#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "tracesim/centrality.hpp"
#include "tracesim/explorer.hpp"
#include "tracesim/generators.hpp"
#include "tracesim/graph.hpp"
#include "tracesim/io.hpp"
#include "tracesim/metrics.hpp"
#include "tracesim/paths.hpp"
#include "tracesim/theory.hpp"

// Experiment orchestration: graph spec strings, key=value config files, the
// subcommand bodies, and every CSV/JSON writer. Anything random in here
// flows from the config's master seed through labeled derivation, so reruns
// with the same config are byte-identical. Wall-clock timing goes to stdout
// only, never into output files.

namespace tracesim {

// ---------------------------------------------------------------------------
// small formatting helpers

inline std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean, 0 for a single sample
};

inline MeanSe mean_se(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("mean_se: no samples");
    MeanSe r;
    for (double x : xs) r.mean += x;
    r.mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return r;
    double ss = 0.0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.se = std::sqrt(ss / static_cast<double>(xs.size() - 1) /
                     static_cast<double>(xs.size()));
    return r;
}

// ---------------------------------------------------------------------------
// graph spec strings: "er:n=10000,k=20", "rsf:n=10000,gamma=2.3",
// "wei:n=10000,a=0.25,c=0.6"; rsf/wei accept optional kmin=,kmax=.

struct GraphSpec {
    enum class Family { er, rsf, wei };
    Family family = Family::er;
    std::size_t n = 0;
    double k = 20.0;    // er: requested mean degree
    double gamma = 2.3; // rsf exponent
    double a = 0.25;    // wei shape
    double c = 0.6;     // wei scale
    std::uint32_t k_min = 1;
    std::uint32_t k_max = 0;  // 0 resolves to n-1
    std::string text;         // the string this was parsed from
};

inline const char* to_string(GraphSpec::Family f) {
    switch (f) {
        case GraphSpec::Family::er: return "er";
        case GraphSpec::Family::rsf: return "rsf";
        default: return "wei";
    }
}

namespace detail {

inline double parse_double_token(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid value for " + key + ": '" + value + "'");
    }
    if (pos != value.size())
        throw std::invalid_argument("invalid value for " + key + ": '" + value + "'");
    return x;
}

inline std::uint64_t parse_uint_token(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    std::uint64_t x = 0;
    try {
        x = std::stoull(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid value for " + key + ": '" + value + "'");
    }
    if (pos != value.size() || (!value.empty() && value[0] == '-'))
        throw std::invalid_argument("invalid value for " + key + ": '" + value + "'");
    return x;
}

}  // namespace detail

inline GraphSpec parse_graph_spec(const std::string& text) {
    GraphSpec spec;
    spec.text = text;
    const auto colon = text.find(':');
    const std::string family = text.substr(0, colon);
    if (family == "er")
        spec.family = GraphSpec::Family::er;
    else if (family == "rsf")
        spec.family = GraphSpec::Family::rsf;
    else if (family == "wei")
        spec.family = GraphSpec::Family::wei;
    else
        throw std::invalid_argument("unknown graph family '" + family + "'");

    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::istringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("expected key=value, got '" + item + "'");
            const std::string key = item.substr(0, eq);
            if (!kv.emplace(key, item.substr(eq + 1)).second)
                throw std::invalid_argument("duplicate key '" + key + "'");
        }
    }

    const auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (auto v = take("n")) spec.n = detail::parse_uint_token("n", *v);
    if (spec.n < 2) throw std::invalid_argument("graph spec needs n >= 2");
    switch (spec.family) {
        case GraphSpec::Family::er:
            if (auto v = take("k")) spec.k = detail::parse_double_token("k", *v);
            break;
        case GraphSpec::Family::rsf:
            if (auto v = take("gamma")) spec.gamma = detail::parse_double_token("gamma", *v);
            break;
        case GraphSpec::Family::wei:
            if (auto v = take("a")) spec.a = detail::parse_double_token("a", *v);
            if (auto v = take("c")) spec.c = detail::parse_double_token("c", *v);
            break;
    }
    if (spec.family != GraphSpec::Family::er) {
        if (auto v = take("kmin"))
            spec.k_min = static_cast<std::uint32_t>(detail::parse_uint_token("kmin", *v));
        if (auto v = take("kmax"))
            spec.k_max = static_cast<std::uint32_t>(detail::parse_uint_token("kmax", *v));
    }
    if (!kv.empty())
        throw std::invalid_argument("unknown key '" + kv.begin()->first + "' for family " +
                                    family);
    return spec;
}

// Generate the requested family and keep its largest connected component,
// which is where every experiment runs.
inline Graph build_graph(const GraphSpec& spec, std::uint64_t seed) {
    Graph full = [&] {
        switch (spec.family) {
            case GraphSpec::Family::er:
                return generate_er(spec.n, spec.k, derive_seed(seed, "er"));
            case GraphSpec::Family::rsf: {
                const auto d = DegreeDistributionSpec::pareto(spec.gamma, spec.k_min, spec.k_max);
                const auto seq = sample_degree_sequence(d, spec.n, derive_seed(seed, "degrees"));
                return generate_configuration_model(seq, derive_seed(seed, "matching"));
            }
            default: {
                const auto d =
                    DegreeDistributionSpec::weibull(spec.a, spec.c, spec.k_min, spec.k_max);
                const auto seq = sample_degree_sequence(d, spec.n, derive_seed(seed, "degrees"));
                return generate_configuration_model(seq, derive_seed(seed, "matching"));
            }
        }
    }();
    return largest_connected_component(full).graph;
}

// ---------------------------------------------------------------------------
// config files: flat key=value lines, '#' comments. CLI flags override by
// inserting into the map before parse_experiment_config.

inline std::map<std::string, std::string> read_key_value_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = line.substr(0, eq);
        if (const auto kend = key.find_last_not_of(" \t"); kend != std::string::npos)
            key.erase(kend + 1);
        std::string value = line.substr(eq + 1);
        if (const auto vstart = value.find_first_not_of(" \t"); vstart != std::string::npos)
            value.erase(0, vstart);
        else
            value.clear();
        kv[key] = value;  // later lines win, like flag overrides
    }
    return kv;
}

struct ExperimentConfig {
    std::string graph_file;            // canonical edge-list input
    PathSelection psc = PathSelection::usp;
    std::size_t n_s = 0;               // fixed source count, required
    std::vector<double> rho_t;         // one value, or a ramp
    PlacementStrategy strategy = PlacementStrategy::random;
    std::size_t realizations = 10;
    std::uint64_t seed = 0;
    bool seed_set = false;             // wall-clock seeding is not a thing here
    std::string out_dir = "out";
    bool overlay = true;               // compute betweenness and write predictions
    std::optional<double> log_bin;     // also write geometrically binned spectra
};

inline PathSelection parse_psc(const std::string& s) {
    if (s == "usp") return PathSelection::usp;
    if (s == "rsp") return PathSelection::rsp;
    if (s == "asp") return PathSelection::asp;
    throw std::invalid_argument("unknown path selection '" + s + "' (usp|rsp|asp)");
}

inline PlacementStrategy parse_strategy(const std::string& s) {
    if (s == "random") return PlacementStrategy::random;
    if (s == "low_betweenness" || s == "low-betweenness")
        return PlacementStrategy::low_betweenness;
    throw std::invalid_argument("unknown strategy '" + s + "' (random|low_betweenness)");
}

inline bool parse_bool(const std::string& key, const std::string& s) {
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    throw std::invalid_argument("invalid value for " + key + ": '" + s + "'");
}

inline std::vector<double> parse_double_list(const std::string& key, const std::string& s) {
    std::vector<double> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(detail::parse_double_token(key, item));
    if (out.empty()) throw std::invalid_argument("empty list for " + key);
    return out;
}

inline ExperimentConfig parse_experiment_config(const std::map<std::string, std::string>& kv) {
    ExperimentConfig cfg;
    for (const auto& [key, value] : kv) {
        if (key == "graph")
            cfg.graph_file = value;
        else if (key == "psc")
            cfg.psc = parse_psc(value);
        else if (key == "n_s")
            cfg.n_s = detail::parse_uint_token(key, value);
        else if (key == "rho_t")
            cfg.rho_t = parse_double_list(key, value);
        else if (key == "strategy")
            cfg.strategy = parse_strategy(value);
        else if (key == "realizations")
            cfg.realizations = detail::parse_uint_token(key, value);
        else if (key == "seed") {
            cfg.seed = detail::parse_uint_token(key, value);
            cfg.seed_set = true;
        } else if (key == "out_dir")
            cfg.out_dir = value;
        else if (key == "overlay")
            cfg.overlay = parse_bool(key, value);
        else if (key == "log_bin")
            cfg.log_bin = detail::parse_double_token(key, value);
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
    if (cfg.graph_file.empty()) throw std::invalid_argument("config: graph is required");
    if (!cfg.seed_set) throw std::invalid_argument("config: seed is required");
    if (cfg.n_s == 0) throw std::invalid_argument("config: n_s is required and must be >= 1");
    if (cfg.rho_t.empty()) throw std::invalid_argument("config: rho_t is required");
    for (double r : cfg.rho_t)
        if (!(r > 0.0) || !(r < 1.0))
            throw std::invalid_argument("config: rho_t values must lie in (0,1)");
    if (cfg.realizations == 0) throw std::invalid_argument("config: realizations must be >= 1");
    if (cfg.log_bin && !(*cfg.log_bin > 1.0))
        throw std::invalid_argument("config: log_bin factor must be > 1");
    return cfg;
}

// ---------------------------------------------------------------------------
// CSV writers

inline void write_spectrum_csv(const std::string& path, const DegreeSpectrum& s,
                               const char* value_name) {
    auto os = open_output(path);
    os << "degree,population," << value_name << "\n";
    for (const auto& bin : s)
        os << bin.degree << ',' << bin.population << ',' << format_double(bin.value) << "\n";
}

inline void write_ccdf_csv(const std::string& path, const std::vector<CcdfPoint>& pts) {
    auto os = open_output(path);
    os << "degree,count,ccdf\n";
    for (const auto& p : pts)
        os << p.degree << ',' << p.count << ',' << format_double(p.ccdf) << "\n";
}

// Presentation-side geometric binning: bins [lo, lo*factor) pool populations
// and population-weight the values; `degree` reports the geometric mean of
// the bin's edges rounded down. Compute-side spectra stay per-degree.
inline DegreeSpectrum log_bin_spectrum(const DegreeSpectrum& s, double factor) {
    if (!(factor > 1.0)) throw std::invalid_argument("log_bin_spectrum: factor must be > 1");
    DegreeSpectrum out;
    if (s.empty()) return out;
    double lo = std::max(1.0, static_cast<double>(s.front().degree));
    std::size_t i = 0;
    while (i < s.size()) {
        const double hi = lo * factor;
        double sum = 0.0;
        std::size_t pop = 0;
        while (i < s.size() && static_cast<double>(s[i].degree) < hi) {
            sum += s[i].value * static_cast<double>(s[i].population);
            pop += s[i].population;
            ++i;
        }
        if (pop > 0)
            out.push_back({static_cast<std::uint32_t>(std::sqrt(lo * hi)), pop,
                           sum / static_cast<double>(pop)});
        lo = hi;
    }
    return out;
}

// ---------------------------------------------------------------------------
// subcommand bodies. Each returns the report JSON it wrote (when it writes
// one) so tests can inspect without re-reading files.

inline void cmd_generate(const std::string& spec_text, std::uint64_t seed,
                         const std::string& out_path) {
    const GraphSpec spec = parse_graph_spec(spec_text);
    const Graph g = build_graph(spec, seed);
    write_edge_list(g, out_path);
    std::cout << "generated " << to_string(spec.family) << " graph: n=" << g.vertex_count()
              << " m=" << g.edge_count() << " (largest component of n=" << spec.n
              << " draw), mean degree " << format_double(g.mean_degree()) << "\n"
              << "wrote " << out_path << "\n";
}

inline void cmd_betweenness(const std::string& graph_path, const std::string& out_dir) {
    const Graph g = read_edge_list(graph_path);
    const BetweennessTable t = brandes_betweenness(g);
    std::filesystem::create_directories(out_dir);
    {
        auto os = open_output(out_dir + "/vertex_betweenness.csv");
        os << "vertex,degree,betweenness,betweenness_rescaled\n";
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            os << v << ',' << g.degree(v) << ',' << format_double(t.vertex[v]) << ','
               << format_double(t.vertex_rescaled(v)) << "\n";
    }
    {
        auto os = open_output(out_dir + "/edge_betweenness.csv");
        os << "u,v,betweenness,betweenness_rescaled\n";
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            os << g.edge(e).u << ',' << g.edge(e).v << ',' << format_double(t.edge[e]) << ','
               << format_double(t.edge_rescaled(e)) << "\n";
    }
    std::cout << "wrote betweenness tables for n=" << g.vertex_count() << " to " << out_dir
              << "\n";
}

namespace detail {

// Residual summary of an overlay: mean absolute residual everywhere, and the
// population-weighted mean relative deviation of the binned observation
// against the binned prediction (bins under `min_pop` vertices skipped).
struct OverlayResidual {
    double mean_abs = 0.0;
    double binned_rel = 0.0;
    std::size_t bins_used = 0;
};

inline OverlayResidual overlay_residual(const std::vector<std::uint32_t>& degrees,
                                        const std::vector<double>& observed,
                                        const std::vector<double>& predicted,
                                        std::size_t min_pop) {
    OverlayResidual r;
    for (std::size_t i = 0; i < observed.size(); ++i)
        r.mean_abs += std::abs(observed[i] - predicted[i]);
    if (!observed.empty()) r.mean_abs /= static_cast<double>(observed.size());
    const DegreeSpectrum obs = spectrum_by_degree(degrees, observed);
    const DegreeSpectrum pred = spectrum_by_degree(degrees, predicted);
    double wsum = 0.0;
    for (std::size_t b = 0; b < obs.size(); ++b) {
        if (obs[b].population < min_pop || pred[b].value == 0.0) continue;
        r.binned_rel += std::abs(obs[b].value - pred[b].value) / pred[b].value *
                        static_cast<double>(obs[b].population);
        wsum += static_cast<double>(obs[b].population);
        ++r.bins_used;
    }
    if (wsum > 0.0) r.binned_rel /= wsum;
    return r;
}

inline std::string rho_dir_name(double rho_t) {
    std::ostringstream os;
    os << "rho_t_" << std::setprecision(6) << rho_t;
    return os.str();
}

}  // namespace detail

// One exploration experiment per rho_t value: Monte Carlo counters, spectra,
// the realization-0 sampled graph as an exemplar, optional theory overlays,
// and a report.json tying the outputs together.
inline std::vector<nlohmann::json> cmd_explore(const ExperimentConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = read_edge_list(cfg.graph_file);
    const std::size_t n = g.vertex_count();

    std::optional<BetweennessTable> table;
    if (cfg.overlay || cfg.strategy == PlacementStrategy::low_betweenness)
        table = brandes_betweenness(g);

    std::vector<nlohmann::json> reports;
    for (std::size_t ri = 0; ri < cfg.rho_t.size(); ++ri) {
        const double rho_t = cfg.rho_t[ri];
        const auto n_t = static_cast<std::size_t>(std::llround(rho_t * static_cast<double>(n)));
        const ProbeBudget budget = make_budget(n, cfg.n_s, std::max<std::size_t>(1, n_t));
        const std::string dir = cfg.rho_t.size() == 1
                                    ? cfg.out_dir
                                    : cfg.out_dir + "/" + detail::rho_dir_name(rho_t);
        std::filesystem::create_directories(dir);

        // Per-realization aggregation the element-wise means cannot carry.
        SpectrumAccumulator ratio_acc, y2_k_acc, y2_kstar_acc, entropy_acc;
        std::map<std::uint32_t, std::size_t> kstar_hist;
        std::vector<double> y2_min_slack;  // min over vertices of Y2 - 1/k*
        const std::uint64_t run_seed = derive_seed(cfg.seed, "explore", ri);
        const auto on_realization = [&](std::size_t r, const SampledGraph& sg) {
            std::uint64_t steps = 0;
            for (auto re : sg.edge_redundancy) steps += re;
            if (steps != sg.traversed_edge_steps)
                throw std::logic_error("edge-step conservation violated");
            ratio_acc.add(discovered_degree_ratio(g, sg));
            const DissymmetryReport dr = dissymmetry_report(g, sg);
            y2_k_acc.add(dr.y2_by_degree);
            y2_kstar_acc.add(dr.y2_by_sampled_degree);
            entropy_acc.add(dr.entropy_by_degree);
            for (const auto& [k, c] : sampled_degree_histogram(g, sg)) kstar_hist[k] += c;
            if (r == 0) {
                // Exemplar sampled graph in the canonical edge-list format.
                std::vector<Edge> kept;
                for (EdgeId e = 0; e < g.edge_count(); ++e)
                    if (sg.edge_discovered[e]) kept.push_back(g.edge(e));
                write_edge_list(Graph(n, kept), dir + "/sampled_graph_r0.edges");
                auto os = open_output(dir + "/counters_r0.csv");
                os << "kind,id_or_u,v,redundancy\n";
                for (Vertex v = 0; v < n; ++v)
                    os << "vertex," << v << ",," << sg.vertex_redundancy[v] << "\n";
                for (EdgeId e = 0; e < g.edge_count(); ++e)
                    os << "edge," << g.edge(e).u << ',' << g.edge(e).v << ','
                       << sg.edge_redundancy[e] << "\n";
            }
        };

        const MonteCarloResult mc =
            monte_carlo_exploration(g, budget, cfg.psc, cfg.strategy, cfg.realizations,
                                    run_seed, table ? &*table : nullptr, on_realization);

        std::optional<TheoryPrediction> pred;
        if (cfg.overlay) pred = predict_all(g, *table, budget);

        std::vector<std::string> files;
        const auto put = [&](const std::string& name) {
            files.push_back(name);
            return dir + "/" + name;
        };

        {
            auto os = open_output(put("vertex_counters.csv"));
            os << "vertex,degree,discovery,redundancy,sampled_degree";
            if (pred)
                os << ",discovery_pred,redundancy_pred,sampled_degree_pred,"
                      "sampled_degree_pred_sum";
            os << "\n";
            for (Vertex v = 0; v < n; ++v) {
                os << v << ',' << g.degree(v) << ',' << format_double(mc.vertex_discovery[v])
                   << ',' << format_double(mc.vertex_redundancy[v]) << ','
                   << format_double(mc.sampled_degree[v]);
                if (pred)
                    os << ',' << format_double(pred->vertex_discovery[v]) << ','
                       << format_double(pred->vertex_redundancy[v]) << ','
                       << format_double(pred->discovered_degree[v]) << ','
                       << format_double(pred->discovered_degree_sum[v]);
                os << "\n";
            }
        }
        {
            auto os = open_output(put("edge_counters.csv"));
            os << "u,v,discovery,redundancy";
            if (pred) os << ",discovery_pred,redundancy_pred";
            os << "\n";
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                os << g.edge(e).u << ',' << g.edge(e).v << ','
                   << format_double(mc.edge_discovery[e]) << ','
                   << format_double(mc.edge_redundancy[e]);
                if (pred)
                    os << ',' << format_double(pred->edge_discovery[e]) << ','
                       << format_double(pred->edge_redundancy[e]);
                os << "\n";
            }
        }
        const DegreeSpectrum discovery_spectrum =
            discovery_fraction_by_degree(g, mc.vertex_discovery);
        write_spectrum_csv(put("spectrum_discovery.csv"), discovery_spectrum,
                           "discovered_fraction");
        write_spectrum_csv(put("spectrum_degree_ratio.csv"), ratio_acc.mean(),
                           "sampled_over_true_degree");
        if (cfg.log_bin) {
            write_spectrum_csv(put("spectrum_discovery_logbin.csv"),
                               log_bin_spectrum(discovery_spectrum, *cfg.log_bin),
                               "discovered_fraction");
            write_spectrum_csv(put("spectrum_degree_ratio_logbin.csv"),
                               log_bin_spectrum(ratio_acc.mean(), *cfg.log_bin),
                               "sampled_over_true_degree");
        }
        write_spectrum_csv(put("spectrum_y2_by_degree.csv"), y2_k_acc.mean(), "y2");
        write_spectrum_csv(put("spectrum_y2_by_sampled_degree.csv"), y2_kstar_acc.mean(), "y2");
        write_spectrum_csv(put("spectrum_entropy_by_degree.csv"), entropy_acc.mean(), "entropy");
        write_ccdf_csv(put("sampled_degree_ccdf.csv"), ccdf_from_histogram(kstar_hist));
        files.push_back("sampled_graph_r0.edges");
        files.push_back("counters_r0.csv");

        nlohmann::json report;
        report["schema_version"] = 1;
        report["command"] = "explore";
        report["config"] = {{"graph", cfg.graph_file},
                            {"psc", to_string(cfg.psc)},
                            {"n_s", cfg.n_s},
                            {"rho_t", rho_t},
                            {"strategy", to_string(cfg.strategy)},
                            {"realizations", cfg.realizations},
                            {"seed", cfg.seed},
                            {"run_seed", run_seed},
                            {"overlay", cfg.overlay},
                            {"log_bin", cfg.log_bin ? nlohmann::json(*cfg.log_bin)
                                                    : nlohmann::json()},
                            {"out_dir", dir}};
        report["graph"] = {{"n", n},
                           {"m", g.edge_count()},
                           {"mean_degree", g.mean_degree()}};
        report["budget"] = {{"n_s", budget.n_s},
                            {"n_t", budget.n_t},
                            {"rho_s", budget.rho_s},
                            {"rho_t", budget.rho_t},
                            {"eps", budget.eps}};
        const MeanSe fv = mean_se(mc.frac_vertices);
        const MeanSe fe = mean_se(mc.frac_edges);
        const MeanSe kr = mean_se(mc.degree_ratio);
        report["summary"] = {{"frac_vertices", {{"mean", fv.mean}, {"se", fv.se}}},
                             {"frac_edges", {{"mean", fe.mean}, {"se", fe.se}}},
                             {"degree_ratio", {{"mean", kr.mean}, {"se", kr.se}}}};
        report["single_source_regime"] = cfg.n_s == 1;
        if (cfg.n_s == 1)
            report["notes"].push_back(
                "single-source run: sampled degree distributions develop a spurious k^-1 "
                "region regardless of the underlying graph");
        if (cfg.psc == PathSelection::asp && cfg.overlay)
            report["notes"].push_back(
                "asp overlay is approximate: predictions use single-path betweenness");
        if (pred) {
            const auto deg = true_degrees(g);
            const auto vd = detail::overlay_residual(deg, mc.vertex_discovery,
                                                     pred->vertex_discovery, 1);
            const auto vr = detail::overlay_residual(deg, mc.vertex_redundancy,
                                                     pred->vertex_redundancy, 20);
            report["overlay_residuals"] = {
                {"vertex_discovery_mean_abs", vd.mean_abs},
                {"vertex_redundancy_binned_rel", vr.binned_rel},
                {"vertex_redundancy_bins_used", vr.bins_used}};
        }
        report["files"] = files;
        {
            auto os = open_output(dir + "/report.json");
            os << report.dump(2) << "\n";
        }
        reports.push_back(std::move(report));
    }

    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
    std::cout << "explore: " << cfg.rho_t.size() << " run(s), " << cfg.realizations
              << " realization(s) each, " << format_double(dt.count()) << " s\n";
    return reports;
}

// ---------------------------------------------------------------------------
// sweeps at fixed probe density

struct SweepRow {
    double rho_t_requested = 0.0;
    std::size_t n_s = 0;
    std::size_t n_t = 0;
    double rho_t_realized = 0.0;
    double eps_realized = 0.0;
    bool feasible = false;
    std::string note;
    MeanSe frac_vertices, frac_edges, degree_ratio;
};

// Round the (n_s, n_t) pair for a grid point at fixed eps; infeasible points
// come back with feasible=false and the reason in `note`.
inline SweepRow budget_for_grid_point(std::size_t n, double eps, double rho_t) {
    SweepRow row;
    row.rho_t_requested = rho_t;
    row.n_s = static_cast<std::size_t>(std::max<long long>(1, std::llround(eps / rho_t)));
    row.n_t = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(rho_t * static_cast<double>(n))));
    row.rho_t_realized = static_cast<double>(row.n_t) / static_cast<double>(n);
    row.eps_realized =
        static_cast<double>(row.n_s) * static_cast<double>(row.n_t) / static_cast<double>(n);
    if (row.n_s + row.n_t > n) {
        row.note = "skipped: n_s + n_t exceeds n";
        return row;
    }
    row.feasible = true;
    return row;
}

inline std::vector<double> log_spaced_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_spaced_grid: need 0 < lo < hi");
    if (points < 2) throw std::invalid_argument("log_spaced_grid: need at least 2 points");
    std::vector<double> grid(points);
    const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = std::exp(std::log(lo) + step * static_cast<double>(i));
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

inline void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("empty rho_t grid");
    for (double r : grid)
        if (!(r > 0.0) || !(r < 1.0))
            throw std::invalid_argument("rho_t grid values must lie in (0,1)");
}

inline std::vector<SweepRow> symmetry_sweep(const Graph& g, double eps,
                                            const std::vector<double>& grid, PathSelection psc,
                                            std::size_t realizations, std::uint64_t seed) {
    check_grid(grid);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    bool any_feasible = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SweepRow row = budget_for_grid_point(g.vertex_count(), eps, grid[i]);
        if (row.feasible) {
            any_feasible = true;
            const ProbeBudget budget = make_budget(g.vertex_count(), row.n_s, row.n_t);
            const MonteCarloResult mc = monte_carlo_exploration(
                g, budget, psc, PlacementStrategy::random, realizations,
                derive_seed(seed, "sweep-point", i));
            row.frac_vertices = mean_se(mc.frac_vertices);
            row.frac_edges = mean_se(mc.frac_edges);
            row.degree_ratio = mean_se(mc.degree_ratio);
        }
        rows.push_back(std::move(row));
    }
    if (!any_feasible) throw std::invalid_argument("symmetry_sweep: no feasible grid point");
    return rows;
}

inline void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows,
                            std::size_t n, double eps, PathSelection psc) {
    auto os = open_output(path);
    os << "# n=" << n << " eps=" << format_double(eps) << " psc=" << to_string(psc) << "\n";
    os << "# symmetry_point_estimate="
       << format_double(std::sqrt(eps / static_cast<double>(n))) << "\n";
    os << "# usp_caveat=usp reuses one route tree per target, correlating probes and blurring "
          "the source/target symmetry visible under rsp or asp\n";
    os << "rho_t_requested,n_s,n_t,rho_t_realized,eps_realized,feasible,"
          "frac_vertices,frac_vertices_se,frac_edges,frac_edges_se,"
          "degree_ratio,degree_ratio_se,note\n";
    for (const auto& r : rows) {
        os << format_double(r.rho_t_requested) << ',' << r.n_s << ',' << r.n_t << ','
           << format_double(r.rho_t_realized) << ',' << format_double(r.eps_realized) << ','
           << (r.feasible ? 1 : 0) << ',';
        if (r.feasible)
            os << format_double(r.frac_vertices.mean) << ',' << format_double(r.frac_vertices.se)
               << ',' << format_double(r.frac_edges.mean) << ',' << format_double(r.frac_edges.se)
               << ',' << format_double(r.degree_ratio.mean) << ','
               << format_double(r.degree_ratio.se);
        else
            os << ",,,,,";
        os << ',' << r.note << "\n";
    }
}

inline std::vector<SweepRow> cmd_symmetry_sweep(const std::string& graph_path, double eps,
                                                const std::vector<double>& grid,
                                                PathSelection psc, std::size_t realizations,
                                                std::uint64_t seed, const std::string& out_csv) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = read_edge_list(graph_path);
    auto rows = symmetry_sweep(g, eps, grid, psc, realizations, seed);
    write_sweep_csv(out_csv, rows, g.vertex_count(), eps, psc);
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
    std::cout << "symmetry-sweep: " << rows.size() << " grid point(s), wrote " << out_csv << ", "
              << format_double(dt.count()) << " s\n";
    return rows;
}

// Paired rows: same grid and budgets, random placement vs lowest-betweenness
// placement, with difference columns.
struct DeploymentRow {
    SweepRow random;
    SweepRow low_betweenness;
};

inline std::vector<DeploymentRow> compare_deployment(const Graph& g, double eps,
                                                     const std::vector<double>& grid,
                                                     PathSelection psc, std::size_t realizations,
                                                     std::uint64_t seed) {
    check_grid(grid);
    const BetweennessTable table = brandes_betweenness(g);
    std::vector<DeploymentRow> rows;
    rows.reserve(grid.size());
    bool any_feasible = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        DeploymentRow pair;
        pair.random = budget_for_grid_point(g.vertex_count(), eps, grid[i]);
        pair.low_betweenness = pair.random;
        if (pair.random.feasible) {
            any_feasible = true;
            const ProbeBudget budget =
                make_budget(g.vertex_count(), pair.random.n_s, pair.random.n_t);
            const MonteCarloResult rnd = monte_carlo_exploration(
                g, budget, psc, PlacementStrategy::random, realizations,
                derive_seed(seed, "cmp-random", i));
            const MonteCarloResult low = monte_carlo_exploration(
                g, budget, psc, PlacementStrategy::low_betweenness, realizations,
                derive_seed(seed, "cmp-lowbc", i), &table);
            pair.random.frac_vertices = mean_se(rnd.frac_vertices);
            pair.random.frac_edges = mean_se(rnd.frac_edges);
            pair.random.degree_ratio = mean_se(rnd.degree_ratio);
            pair.low_betweenness.frac_vertices = mean_se(low.frac_vertices);
            pair.low_betweenness.frac_edges = mean_se(low.frac_edges);
            pair.low_betweenness.degree_ratio = mean_se(low.degree_ratio);
        }
        rows.push_back(std::move(pair));
    }
    if (!any_feasible) throw std::invalid_argument("compare_deployment: no feasible grid point");
    return rows;
}

inline std::vector<DeploymentRow> cmd_compare_deployment(
    const std::string& graph_path, double eps, const std::vector<double>& grid,
    PathSelection psc, std::size_t realizations, std::uint64_t seed,
    const std::string& out_csv) {
    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = read_edge_list(graph_path);
    auto rows = compare_deployment(g, eps, grid, psc, realizations, seed);
    auto os = open_output(out_csv);
    os << "# n=" << g.vertex_count() << " eps=" << format_double(eps)
       << " psc=" << to_string(psc) << "\n";
    os << "rho_t_requested,n_s,n_t,eps_realized,feasible,"
          "frac_vertices_random,frac_edges_random,"
          "frac_vertices_lowbc,frac_edges_lowbc,"
          "frac_vertices_diff,frac_edges_diff,note\n";
    for (const auto& r : rows) {
        os << format_double(r.random.rho_t_requested) << ',' << r.random.n_s << ','
           << r.random.n_t << ',' << format_double(r.random.eps_realized) << ','
           << (r.random.feasible ? 1 : 0) << ',';
        if (r.random.feasible) {
            os << format_double(r.random.frac_vertices.mean) << ','
               << format_double(r.random.frac_edges.mean) << ','
               << format_double(r.low_betweenness.frac_vertices.mean) << ','
               << format_double(r.low_betweenness.frac_edges.mean) << ','
               << format_double(r.low_betweenness.frac_vertices.mean -
                                r.random.frac_vertices.mean)
               << ','
               << format_double(r.low_betweenness.frac_edges.mean - r.random.frac_edges.mean);
        } else {
            os << ",,,,,";
        }
        os << ',' << r.random.note << "\n";
    }
    const auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
    std::cout << "compare-deployment: " << rows.size() << " grid point(s), wrote " << out_csv
              << ", " << format_double(dt.count()) << " s\n";
    return rows;
}

}  // namespace tracesim
