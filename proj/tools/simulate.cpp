// Command-line front end: runs one scenario (or a directory of configs) and
// writes trace.csv, metrics.json and waypoints.csv.

#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tailsitter/config.hpp"
#include "tailsitter/harness.hpp"
#include "tailsitter/telemetry.hpp"

namespace fs = std::filesystem;
using namespace tailsitter;

namespace {

struct Overrides {
    std::optional<std::string> scenario;
    std::optional<double> dt;
    std::optional<std::string> alloc;
    std::optional<std::string> telemetry;
};

void apply_overrides(ScenarioConfig& cfg, const Overrides& o)
{
    if (o.scenario) {
        set_scenario(cfg, *o.scenario);
    }
    if (o.dt) {
        cfg.dt = *o.dt;
    }
    if (o.alloc) {
        apply_setting(cfg, "controller.allocation", *o.alloc);
    }
    if (o.telemetry) {
        apply_setting(cfg, "telemetry.destination", *o.telemetry);
    }
}

struct Outcome {
    ExitStatus status = ExitStatus::Success;
    std::string summary;
};

Outcome run_one(const ScenarioConfig& cfg, const fs::path& out_dir)
{
    std::optional<TelemetrySink> sink;
    if (cfg.telemetry) {
        sink.emplace(*cfg.telemetry);
    }
    RunResult result = run_scenario(cfg, sink ? &*sink : nullptr);
    if (result.status == ExitStatus::ConfigError) {
        return {result.status, fmt::format("config error: {}", result.message)};
    }
    try {
        write_outputs(result, cfg, out_dir);
    } catch (const OutputError& e) {
        // A divergence in the very first step leaves nothing to flush; keep
        // the divergence status in that case.
        if (result.status == ExitStatus::Divergence) {
            return {result.status, fmt::format("diverged: {} ({})", result.message, e.what())};
        }
        return {ExitStatus::IoError, fmt::format("output error: {}", e.what())};
    }
    if (result.status == ExitStatus::Divergence) {
        return {result.status, fmt::format("diverged at t = {:.2f} s: {} (partial log in {})",
                                           result.log.rows.back().t, result.message, out_dir.string())};
    }
    const auto& m = result.metrics;
    return {ExitStatus::Success,
            fmt::format("{}: MAE x/y/z = {:.4f}/{:.4f}/{:.4f} m, max yaw deviation {:.2f} deg -> {}",
                        cfg.scenario_name(), m.axis[0].mae, m.axis[1].mae, m.axis[2].mae,
                        rad2deg(m.max_yaw_deviation), out_dir.string())};
}

int run_batch(const fs::path& dir, const std::optional<std::string>& out, const Overrides& overrides)
{
    std::vector<fs::path> configs;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".cfg") {
            configs.push_back(entry.path());
        }
    }
    if (ec) {
        std::cerr << fmt::format("cannot read batch directory '{}': {}\n", dir.string(), ec.message());
        return static_cast<int>(ExitStatus::IoError);
    }
    if (configs.empty()) {
        std::cerr << fmt::format("no *.cfg files in '{}'\n", dir.string());
        return static_cast<int>(ExitStatus::ConfigError);
    }
    std::sort(configs.begin(), configs.end());

    std::vector<std::future<Outcome>> jobs;
    for (const fs::path& path : configs) {
        jobs.push_back(std::async(std::launch::async, [path, out, overrides] {
            ScenarioConfig cfg;
            try {
                load_config_file(cfg, path);
                apply_overrides(cfg, overrides);
            } catch (const ConfigError& e) {
                return Outcome{ExitStatus::ConfigError, e.what()};
            }
            const fs::path root = out ? fs::path(*out) : fs::path(cfg.output_dir);
            return run_one(cfg, root / path.stem());
        }));
    }

    int worst = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Outcome o = jobs[i].get();
        std::cout << fmt::format("[{}] {}\n", configs[i].filename().string(), o.summary);
        worst = std::max(worst, static_cast<int>(o.status));
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Tail-sitter 6-DOF flight simulator"};
    Overrides overrides;
    std::optional<std::string> config_path;
    std::optional<std::string> out;
    std::optional<std::string> batch;

    app.add_option("--scenario", overrides.scenario, "rect, circle, or a waypoint CSV file");
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--out", out, "output directory");
    app.add_option("--dt", overrides.dt, "physics step [s], in (0, 0.01]");
    app.add_option("--alloc", overrides.alloc, "allocation mode")->check(CLI::IsMember({"unit", "literal"}));
    app.add_option("--telemetry", overrides.telemetry, "stream UDP JSON samples to host:port");
    app.add_option("--batch", batch, "run every *.cfg in this directory in parallel")->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitStatus::ConfigError);
    }

    if (batch) {
        return run_batch(*batch, out, overrides);
    }

    ScenarioConfig cfg;
    try {
        if (config_path) {
            load_config_file(cfg, *config_path);
        }
        apply_overrides(cfg, overrides);
        if (!overrides.scenario && !config_path) {
            throw ConfigError("--scenario is required (rect, circle, or a schedule file)");
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return static_cast<int>(ExitStatus::ConfigError);
    }

    const Outcome o = run_one(cfg, out ? fs::path(*out) : fs::path(cfg.output_dir));
    (o.status == ExitStatus::Success ? std::cout : std::cerr) << o.summary << '\n';
    return static_cast<int>(o.status);
}
