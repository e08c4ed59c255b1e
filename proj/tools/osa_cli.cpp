#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osa/experiments.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
    std::string scenario_path;
    std::string out_dir;
    long long seed = -1; // -1: keep scenario seed
    std::string mode;    // empty: keep scenario mode
};

osa::Scenario load_with_overrides(const GlobalOpts& g) {
    osa::Scenario sc = osa::load_scenario(g.scenario_path);
    if (g.seed >= 0) sc.config.seed = static_cast<uint64_t>(g.seed);
    if (g.mode == "mean-delay") sc.config.mode = osa::SimMode::MeanDelay;
    else if (g.mode == "contention") sc.config.mode = osa::SimMode::Contention;
    else if (!g.mode.empty()) throw std::runtime_error("bad --mode");
    return sc;
}

fs::path output_dir(const GlobalOpts& g) {
    if (!g.out_dir.empty()) return g.out_dir;
    if (const char* env = std::getenv("OSA_OUT_DIR")) return env;
    return ".";
}

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    std::cerr << "writing " << p.string() << "\n";
    return out;
}

void print_summary(const std::vector<osa::RunResult>& results) {
    const auto s = osa::summarize_throughput(results);
    std::cout << "throughput " << std::fixed << std::setprecision(4) << s.mean
              << " +/- " << s.ci95 << " (95% CI, n=" << s.n << ")\n";
}

int cmd_policy(const GlobalOpts& g) {
    const auto sc = load_with_overrides(g);
    auto out = open_out(output_dir(g), sc.name + "_policy.tsv");
    osa::write_policy_report(out, sc);
    return 0;
}

int cmd_simulate(const GlobalOpts& g) {
    const auto sc = load_with_overrides(g);
    auto out = open_out(output_dir(g), sc.name + "_runs.csv");
    osa::write_csv_header(out);
    const auto pt = osa::scenario_point(sc);
    const auto results = osa::run_replications(sc, pt, sc.replications, true);
    for (const auto& r : results) osa::write_csv_row(out, sc, r);
    print_summary(results);
    return 0;
}

int cmd_sweep(const GlobalOpts& g, const std::string& axis_str,
              std::vector<double> grid) {
    auto sc = load_with_overrides(g);
    const osa::SweepAxis axis =
        axis_str.empty() ? sc.sweep_axis : osa::parse_axis(axis_str);
    if (axis == osa::SweepAxis::None)
        throw std::runtime_error("sweep needs --axis or a sweep_axis in the scenario");
    if (grid.empty()) grid = sc.sweep_grid;
    if (grid.empty())
        throw std::runtime_error("sweep needs --grid or a sweep_grid in the scenario");
    auto out = open_out(output_dir(g),
                        sc.name + "_sweep_" + osa::to_string(axis) + ".csv");
    osa::write_csv_header(out);
    for (const auto& pt : osa::sweep_points(sc, axis, grid)) {
        const auto results = osa::run_replications(sc, pt, sc.replications, true);
        for (const auto& r : results) osa::write_csv_row(out, sc, r);
        std::cout << osa::to_string(axis) << "=" << std::setw(8)
                  << (axis == osa::SweepAxis::Load ? pt.load
                      : axis == osa::SweepAxis::Time ? pt.transmission_time
                                                     : pt.n_channels)
                  << "  ";
        print_summary(results);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multichannel opportunistic access: policies and simulation"};
    app.require_subcommand(1);

    GlobalOpts g;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scenario", g.scenario_path, "scenario file")->required();
        cmd->add_option("--seed", g.seed, "override the scenario base seed");
        cmd->add_option("--out", g.out_dir,
                        "output directory (default $OSA_OUT_DIR or .)");
        cmd->add_option("--mode", g.mode, "override mode: mean-delay | contention");
    };

    auto* policy = app.add_subcommand("policy", "compute and dump decision tables");
    add_common(policy);

    auto* simulate = app.add_subcommand("simulate", "run seeded replications");
    add_common(simulate);

    std::string axis;
    std::vector<double> grid;
    auto* sweep = app.add_subcommand("sweep", "sweep a parameter grid");
    add_common(sweep);
    sweep->add_option("--axis", axis, "sweep axis: G | T | N");
    sweep->add_option("--grid", grid, "grid values")->expected(-1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (policy->parsed()) return cmd_policy(g);
        if (simulate->parsed()) return cmd_simulate(g);
        if (sweep->parsed()) return cmd_sweep(g, axis, grid);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
