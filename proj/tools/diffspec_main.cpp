#include <CLI11.hpp>

#include "diffspec/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact spectral calculus and fourth-moment criteria for Markov diffusion generators"};
    app.require_subcommand(1);

    diffspec::RunOptions options;
    std::uint64_t seed = 0;
    int workers = 0;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", options.scenario_path, "Scenario JSON file")->required();
        cmd->add_option("--out", options.out_dir, "Output directory for reports")->required();
        cmd->add_option("--format", options.format, "Report format: json, csv or both")->capture_default_str();
        cmd->add_option("--seed", seed, "Override the scenario seed");
        return cmd;
    };

    CLI::App* verify = add_common(app.add_subcommand("verify", "Run the exact identity suites"));
    CLI::App* chaos = add_common(app.add_subcommand("chaos-check", "Diagnose a chaos eigenfunction"));
    CLI::App* bounds = add_common(app.add_subcommand("bounds", "Evaluate a fourth-moment bound"));
    CLI::App* criterion = add_common(app.add_subcommand("criterion", "Evaluate the moment statistic"));
    CLI::App* simulate = add_common(app.add_subcommand("simulate", "Run a Monte Carlo experiment"));
    simulate->add_option("--workers", workers, "Worker threads for sampling (0 = hardware)");

    CLI11_PARSE(app, argc, argv);

    CLI::App* chosen = nullptr;
    for (CLI::App* cmd : {verify, chaos, bounds, criterion, simulate})
        if (cmd->parsed()) chosen = cmd;
    if (!chosen) return 2;
    if (chosen->count("--seed") > 0) options.seed_override = seed;
    if (chosen == simulate && simulate->count("--workers") > 0) options.workers_override = workers;

    return diffspec::run_command(chosen->get_name(), options);
}
