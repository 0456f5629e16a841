// risray: deterministic 2D ray-tracing RF propagation simulator with a
// rotatable RIS panel. Subcommands: map, sweep, run, compare.

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "risray/commands.hpp"
#include "risray/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"2D ray-tracing RF propagation simulator with a rotatable RIS"};
    app.require_subcommand(0, 1);

    std::string config_path;
    bool dump = false;
    app.add_option("--config", config_path, "scenario config file (defaults when omitted)");
    app.add_flag("--dump-config", dump, "print the effective config and exit");

    auto* map_cmd = app.add_subcommand("map", "write a power-map CSV for one RIS setting");
    std::optional<double> angle;
    bool baseline = false;
    std::optional<double> resolution;
    std::string map_out = "map.csv";
    map_cmd->add_option("--angle", angle, "RIS angle in degrees (exact member of the angle set)");
    map_cmd->add_flag("--baseline", baseline, "plain-wall baseline instead of a RIS setting");
    map_cmd->add_option("--resolution", resolution, "cell size in meters");
    map_cmd->add_option("--out", map_out, "output CSV path");

    auto* sweep_cmd = app.add_subcommand("sweep", "write the per-setting probe report CSV");
    std::string sweep_out = "sweep.csv";
    sweep_cmd->add_option("--out", sweep_out, "output CSV path");

    auto* run_cmd = app.add_subcommand("run", "run a policy; write trace CSV and metrics JSON");
    risray::cmd::RunOptions run_opts;
    std::string policy;
    int dwell = 0, intervals = 0;
    std::string objectives;
    std::string run_out = "trace.csv";
    std::string metrics_out = "metrics.json";
    run_cmd->add_option("--policy", policy, "static | sweep | context");
    run_cmd->add_option("--dwell", dwell, "time steps per RIS setting hold");
    run_cmd->add_option("--intervals", intervals, "number of dwell intervals");
    run_cmd->add_option("--objectives", objectives,
                        "comma-separated receiver ids for the context policy");
    run_cmd->add_option("--out", run_out, "trace CSV path");
    run_cmd->add_option("--metrics", metrics_out, "metrics JSON path");

    auto* compare_cmd = app.add_subcommand("compare", "dB deltas between two trace CSVs");
    std::string base_path, trace_path;
    int skip = 0;
    std::string compare_out = "deltas.json";
    compare_cmd->add_option("baseline", base_path, "baseline trace CSV")->required();
    compare_cmd->add_option("trace", trace_path, "trace CSV to compare")->required();
    compare_cmd->add_option("--skip", skip, "steps to skip at the start of both traces");
    compare_cmd->add_option("--out", compare_out, "output JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        const risray::ScenarioConfig config =
            config_path.empty() ? risray::default_config() : risray::load_scenario(config_path);
        if (dump) {
            std::fputs(risray::dump_config(config).c_str(), stdout);
            return 0;
        }
        if (map_cmd->parsed()) {
            risray::cmd::map(config, angle, baseline, resolution, map_out);
        } else if (sweep_cmd->parsed()) {
            risray::cmd::sweep(config, sweep_out);
        } else if (run_cmd->parsed()) {
            if (!policy.empty()) run_opts.policy = policy;
            if (run_cmd->count("--dwell")) run_opts.dwell = dwell;
            if (run_cmd->count("--intervals")) run_opts.intervals = intervals;
            if (!objectives.empty()) {
                std::size_t pos = 0;
                while (pos <= objectives.size()) {
                    const std::size_t comma = objectives.find(',', pos);
                    const std::size_t end = (comma == std::string::npos) ? objectives.size() : comma;
                    if (end > pos) run_opts.objective_ids.push_back(objectives.substr(pos, end - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            risray::cmd::run(config, run_opts, run_out, metrics_out);
        } else if (compare_cmd->parsed()) {
            risray::cmd::compare(base_path, trace_path, skip, compare_out);
        } else {
            std::fputs(app.help().c_str(), stdout);
            return 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "risray: %s\n", e.what());
        return 1;
    }
    return 0;
}
