#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tailsitter/controller.hpp"
#include "tailsitter/trajectory.hpp"
#include "tailsitter/vehicle_params.hpp"

namespace tailsitter {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ScenarioKind { Rectangular, Circular, ScheduleFile };

struct TelemetryEndpoint {
    std::string host;
    std::uint16_t port = 0;
};

/// Everything one simulation run needs.
struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::Rectangular;
    std::string schedule_file;          // for ScheduleFile
    std::optional<double> duration;     // overrides the trajectory length [s]
    CircularPath circle;
    VehicleParams vehicle;
    CascadeGains gains = CascadeGains::defaults();
    ControllerOptions controller;
    double dt = 1e-3;                   // physics step [s]
    int control_divisor = 5;            // physics steps per control update
    std::string output_dir = "out";
    std::optional<TelemetryEndpoint> telemetry;

    static constexpr double kLogInterval = 0.01;  // 100 Hz

    std::string scenario_name() const;
    /// Throws ConfigError.
    void validate() const;
};

/// "rect", "circle", or anything else as a schedule-file path.
void set_scenario(ScenarioConfig& cfg, std::string_view scenario);

/// Parses "host:port". Throws ConfigError.
TelemetryEndpoint parse_endpoint(std::string_view text);

/// Applies one dotted key. Unknown keys and malformed values throw ConfigError.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value);

/// Applies a whole `key = value` document; `#` starts a comment.
void apply_config_text(ScenarioConfig& cfg, std::string_view text);

void load_config_file(ScenarioConfig& cfg, const std::filesystem::path& path);

/// Every key with its current value, in a stable order.
std::vector<std::pair<std::string, std::string>> config_entries(const ScenarioConfig& cfg);

/// Reads a waypoint CSV with header
/// activation_s,x_m,y_m,z_m,yaw_deg,transit_s,eval_s (eval_s may be empty).
WaypointSchedule load_schedule_file(const std::filesystem::path& path, std::optional<double> duration);

}  // namespace tailsitter
