#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tailsitter/config.hpp"
#include "tailsitter/metrics.hpp"
#include "tailsitter/sim_log.hpp"
#include "tailsitter/trajectory.hpp"

namespace tailsitter {

class TelemetrySink;

/// Process exit statuses of the simulator.
enum class ExitStatus : int {
    Success = 0,
    ConfigError = 1,
    Divergence = 2,
    IoError = 3,
};

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunResult {
    SimLog log;
    TrackingMetrics metrics;
    Trajectory trajectory;
    ExitStatus status = ExitStatus::Success;
    std::string message;  // reason for a non-success status
};

/// The reference the scenario flies. Loads the schedule file for file
/// scenarios; throws ConfigError.
Trajectory build_trajectory(const ScenarioConfig& cfg);

/// Validates cfg, then flies the scenario from rest at the first reference.
/// Config problems and divergence are reported through the status; the log
/// holds every sample taken before a divergence.
RunResult run_scenario(const ScenarioConfig& cfg, TelemetrySink* telemetry = nullptr);

std::string trace_csv(const SimLog& log);
std::string waypoints_csv(const SimLog& log, const Trajectory& traj);
std::string metrics_json(const RunResult& result, const ScenarioConfig& cfg);
/// Reads back the "metrics" object written by metrics_json().
TrackingMetrics metrics_from_json(std::string_view text);

/// Writes trace.csv, metrics.json and waypoints.csv into dir (created if
/// needed). Throws OutputError on an empty log or any I/O failure.
void write_outputs(const RunResult& result, const ScenarioConfig& cfg, const std::filesystem::path& dir);

}  // namespace tailsitter
