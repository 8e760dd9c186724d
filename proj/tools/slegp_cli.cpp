#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "slegp/csv.hpp"
#include "slegp/engine.hpp"
#include "slegp/experiments.hpp"

namespace {

struct CliOptions {
    slegp::SimConfig config;
    int seed_count = 10;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    std::string out;
};

void add_config_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--n", opt.config.n, "Devices per direction");
    cmd->add_option("--circuit-length", opt.config.circuit_length,
                    "Circuit length L in meters");
    cmd->add_option("--spacing", opt.config.spacing,
                    "Device spacing D in meters");
    cmd->add_option("--speed", opt.config.speed, "Device speed in m/s");
    cmd->add_option("--messages", opt.config.messages_per_device,
                    "Personal messages per device");
    cmd->add_option("--min-go", opt.config.min_go,
                    "Minimum GO residence time in seconds");
    cmd->add_option("--min-gm", opt.config.min_gm,
                    "Minimum GM residence time in seconds");
    cmd->add_option("--switch-prob", opt.config.switch_prob,
                    "Per-second switch probability after the minimum");
    cmd->add_option("--range", opt.config.range, "Radio range in meters");
    cmd->add_option("--bandwidth", opt.config.bandwidth,
                    "Message selections per device per tick");
    cmd->add_option("--ticks", opt.config.total_ticks,
                    "Simulated seconds");
    cmd->add_option("--seed", opt.config.seed, "Base RNG seed");
    cmd->add_option("--seeds", opt.seed_count,
                    "Number of seeds for sweeps (seed, seed+1, ...)");
    cmd->add_option("--jobs", opt.jobs, "Max concurrent simulation runs");
}

int do_run(const CliOptions& opt) {
    const slegp::RunResult result = slegp::run(opt.config);
    slegp::write_run_csv(result, opt.out.empty() ? "run.csv" : opt.out);
    return 0;
}

int do_sweep(const CliOptions& opt, const std::string& param,
             const std::vector<int>& values) {
    const auto seeds = slegp::seed_range(opt.config.seed, opt.seed_count);
    slegp::SweepTable table;
    if (param == "messages") {
        table = slegp::sweep_personal_messages(opt.config, values, seeds,
                                               opt.jobs);
    } else if (param == "min-gm") {
        table = slegp::sweep_gm_min(opt.config, values, seeds, opt.jobs);
    } else if (param == "min-go") {
        table = slegp::sweep_go_min(opt.config, values, seeds, opt.jobs);
    }
    slegp::write_sweep_csv(table, opt.out.empty() ? "sweep.csv" : opt.out);
    return 0;
}

int do_figures(const CliOptions& opt) {
    namespace fs = std::filesystem;
    const fs::path dir = opt.out.empty() ? "figures" : opt.out;
    fs::create_directories(dir);
    const auto seeds = slegp::seed_range(opt.config.seed, opt.seed_count);

    const std::vector<int> m_values = {1, 2, 4, 8};
    slegp::write_sweep_csv(
        slegp::sweep_personal_messages(opt.config, m_values, seeds, opt.jobs),
        (dir / "fig1_personal_messages.csv").string());

    const std::vector<int> gm_values = {3, 5, 7, 9, 11};
    slegp::SimConfig gm_base = opt.config;
    gm_base.min_go = 9;
    slegp::write_sweep_csv(
        slegp::sweep_gm_min(gm_base, gm_values, seeds, opt.jobs),
        (dir / "fig2_gm_min_time.csv").string());

    const std::vector<int> go_values = {5, 7, 9, 11, 13};
    slegp::SimConfig go_base = opt.config;
    go_base.min_gm = 7;
    slegp::write_sweep_csv(
        slegp::sweep_go_min(go_base, go_values, seeds, opt.jobs),
        (dir / "fig3_go_min_time.csv").string());

    slegp::SimConfig ts_base = opt.config;
    ts_base.messages_per_device = 1;
    ts_base.min_go = 9;
    ts_base.min_gm = 7;
    if (ts_base.total_ticks < 6000) ts_base.total_ticks = 6000;
    const auto ts = slegp::time_series_experiment(ts_base, seeds, opt.jobs);
    slegp::write_sweep_csv(ts.per_minute,
                           (dir / "fig4_time_series.csv").string());
    if (ts.mean_minutes_to_90) {
        std::printf("mean minutes to 90%%: %.2f\n", *ts.mean_minutes_to_90);
    }
    if (ts.mean_minutes_to_full) {
        std::printf("mean minutes to 100%%: %.2f\n", *ts.mean_minutes_to_full);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SLEGP ephemeral-group gossip simulator"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string sweep_param;
    std::vector<int> sweep_values;

    CLI::App* run_cmd = app.add_subcommand("run", "Single simulation run");
    add_config_flags(run_cmd, opt);
    run_cmd->add_option("--out", opt.out, "Output CSV path");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Multi-seed parameter sweep");
    add_config_flags(sweep_cmd, opt);
    sweep_cmd->add_option("--param", sweep_param, "Swept parameter")
        ->check(CLI::IsMember({"messages", "min-gm", "min-go"}))
        ->required();
    sweep_cmd->add_option("--values", sweep_values, "Swept values")
        ->delimiter(',')
        ->required();
    sweep_cmd->add_option("--out", opt.out, "Output CSV path");

    CLI::App* fig_cmd =
        app.add_subcommand("figures", "All four benchmark sweeps");
    add_config_flags(fig_cmd, opt);
    fig_cmd->add_option("--out", opt.out, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return do_run(opt);
        if (sweep_cmd->parsed()) return do_sweep(opt, sweep_param, sweep_values);
        if (fig_cmd->parsed()) return do_figures(opt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
