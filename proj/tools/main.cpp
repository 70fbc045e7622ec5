// Batch CLI: equilibria, bifurcation scans, dispersion relations, Turing
// curves, PDE simulation and wave-speed measurement, all driven by JSON
// config files and writing CSV artifacts plus a manifest per run.

#include <CLI11.hpp>

#include "coophunt/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"predator-prey dynamics with cooperative hunting: analysis and simulation"};
    app.require_subcommand(1);

    coophunt::cli::Options opts;
    std::int64_t seed = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "JSON config file")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", opts.out_dir, "output directory")->required();
        sub->add_option("--workers", opts.workers, "worker threads for sweeps (0 = auto)");
        sub->add_option("--seed", seed, "override the config RNG seed");
        sub->add_flag("--quiet", opts.quiet, "suppress progress output");
    };

    auto* eq = app.add_subcommand("equilibria", "list equilibria with stability");
    auto* bif = app.add_subcommand("bifurcate", "branch diagram and thresholds");
    auto* disp = app.add_subcommand("dispersion", "dispersion relation samples");
    auto* tc = app.add_subcommand("turing-curve", "critical d1 over an alpha range");
    auto* sim = app.add_subcommand("simulate", "run the PDE and classify the regime");
    auto* ws = app.add_subcommand("wave-speed", "measure a front speed from a PDE run");
    for (auto* sub : {eq, bif, disp, tc, sim, ws}) add_common(sub);

    CLI11_PARSE(app, argc, argv);
    if (seed >= 0) opts.seed_override = static_cast<std::uint64_t>(seed);

    if (eq->parsed()) return coophunt::cli::cmd_equilibria(opts);
    if (bif->parsed()) return coophunt::cli::cmd_bifurcate(opts);
    if (disp->parsed()) return coophunt::cli::cmd_dispersion(opts);
    if (tc->parsed()) return coophunt::cli::cmd_turing_curve(opts);
    if (sim->parsed()) return coophunt::cli::cmd_simulate(opts);
    if (ws->parsed()) return coophunt::cli::cmd_wave_speed(opts);
    return 1;
}
