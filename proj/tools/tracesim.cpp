#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tracesim/experiment.hpp"

// Command-line front end. Exit codes: 0 success, 1 usage or invalid
// configuration, 2 runtime failure (I/O, generation not converging).

namespace {

// Shared sweep-grid flags: an explicit comma list wins over the log-spaced
// lo/hi/points triple.
struct GridArgs {
    std::string list;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t points = 0;

    void attach(CLI::App* cmd, double def_lo, double def_hi, std::size_t def_points) {
        lo = def_lo;
        hi = def_hi;
        points = def_points;
        cmd->add_option("--grid", list, "explicit comma-separated rho_t grid");
        cmd->add_option("--grid-lo", lo, "log-spaced grid lower end")
            ->capture_default_str();
        cmd->add_option("--grid-hi", hi, "log-spaced grid upper end")
            ->capture_default_str();
        cmd->add_option("--grid-points", points, "log-spaced grid size")
            ->capture_default_str();
    }

    std::vector<double> resolve() const {
        if (!list.empty()) return tracesim::parse_double_list("grid", list);
        return tracesim::log_spaced_grid(lo, hi, points);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"traceroute-style network exploration toolkit"};
    app.require_subcommand(1);

    // generate
    std::string gen_spec, gen_out;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("generate", "generate a graph and write its LCC");
    gen->add_option("--spec", gen_spec,
                    "graph spec, e.g. er:n=10000,k=20 | rsf:n=10000,gamma=2.3 | "
                    "wei:n=10000,a=0.25,c=0.6")
        ->required();
    gen->add_option("--seed", gen_seed, "master seed")->required();
    gen->add_option("--out", gen_out, "output edge-list path")->required();
    gen->callback([&] { tracesim::cmd_generate(gen_spec, gen_seed, gen_out); });

    // betweenness
    std::string bc_graph, bc_out;
    auto* bc = app.add_subcommand("betweenness", "write vertex and edge betweenness tables");
    bc->add_option("--graph", bc_graph, "edge-list input")->required();
    bc->add_option("--out-dir", bc_out, "output directory")->required();
    bc->callback([&] { tracesim::cmd_betweenness(bc_graph, bc_out); });

    // explore: config file plus flag overrides, flags win
    std::string ex_config;
    std::map<std::string, std::string> ex_overrides;
    auto* ex = app.add_subcommand("explore", "run a Monte Carlo exploration experiment");
    ex->add_option("--config", ex_config, "key=value config file");
    const auto override_opt = [&](const char* flag, const char* key, const char* help) {
        ex->add_option_function<std::string>(
            flag, [&ex_overrides, key](const std::string& v) { ex_overrides[key] = v; }, help);
    };
    override_opt("--graph", "graph", "edge-list input");
    override_opt("--psc", "psc", "path selection: usp|rsp|asp");
    override_opt("--n-s", "n_s", "number of sources");
    override_opt("--rho-t", "rho_t", "target density, single value or comma ramp");
    override_opt("--strategy", "strategy", "placement: random|low_betweenness");
    override_opt("--realizations", "realizations", "independent placements to average");
    override_opt("--seed", "seed", "master seed");
    override_opt("--out-dir", "out_dir", "output directory");
    override_opt("--log-bin", "log_bin", "also write geometrically binned spectra");
    ex->add_flag_callback(
        "--no-overlay", [&] { ex_overrides["overlay"] = "0"; },
        "skip betweenness-based theory overlays");
    ex->callback([&] {
        std::map<std::string, std::string> kv;
        if (!ex_config.empty()) kv = tracesim::read_key_value_file(ex_config);
        for (const auto& [k, v] : ex_overrides) kv[k] = v;
        tracesim::cmd_explore(tracesim::parse_experiment_config(kv));
    });

    // symmetry-sweep
    std::string sw_graph, sw_psc = "usp", sw_out;
    double sw_eps = 0.0;
    std::size_t sw_realizations = 10;
    std::uint64_t sw_seed = 0;
    GridArgs sw_grid;
    auto* sw = app.add_subcommand("symmetry-sweep",
                                  "coverage vs rho_t at fixed probe density eps");
    sw->add_option("--graph", sw_graph, "edge-list input")->required();
    sw->add_option("--eps", sw_eps, "probe density n_s*n_t/n to hold fixed")->required();
    sw->add_option("--psc", sw_psc, "path selection: usp|rsp|asp")->capture_default_str();
    sw->add_option("--realizations", sw_realizations, "realizations per grid point")
        ->capture_default_str();
    sw->add_option("--seed", sw_seed, "master seed")->required();
    sw->add_option("--out", sw_out, "output CSV path")->required();
    sw_grid.attach(sw, 2e-4, 0.5, 13);
    sw->callback([&] {
        tracesim::cmd_symmetry_sweep(sw_graph, sw_eps, sw_grid.resolve(),
                                     tracesim::parse_psc(sw_psc), sw_realizations, sw_seed,
                                     sw_out);
    });

    // compare-deployment
    std::string cd_graph, cd_psc = "usp", cd_out;
    double cd_eps = 0.0;
    std::size_t cd_realizations = 10;
    std::uint64_t cd_seed = 0;
    GridArgs cd_grid;
    auto* cd = app.add_subcommand("compare-deployment",
                                  "random vs lowest-betweenness placement across a rho_t grid");
    cd->add_option("--graph", cd_graph, "edge-list input")->required();
    cd->add_option("--eps", cd_eps, "probe density to hold fixed")->required();
    cd->add_option("--psc", cd_psc, "path selection: usp|rsp|asp")->capture_default_str();
    cd->add_option("--realizations", cd_realizations, "realizations per grid point")
        ->capture_default_str();
    cd->add_option("--seed", cd_seed, "master seed")->required();
    cd->add_option("--out", cd_out, "output CSV path")->required();
    cd_grid.attach(cd, 1e-3, 0.5, 7);
    cd->callback([&] {
        tracesim::cmd_compare_deployment(cd_graph, cd_eps, cd_grid.resolve(),
                                         tracesim::parse_psc(cd_psc), cd_realizations, cd_seed,
                                         cd_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
