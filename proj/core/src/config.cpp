#include "tailsitter/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace tailsitter {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text)
{
    text = trim(text);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        throw ConfigError(fmt::format("{}: expected a number, got '{}'", key, text));
    }
    return value;
}

int parse_int(std::string_view key, std::string_view text)
{
    text = trim(text);
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw ConfigError(fmt::format("{}: expected an integer, got '{}'", key, text));
    }
    return value;
}

bool parse_bool(std::string_view key, std::string_view text)
{
    text = trim(text);
    if (text == "true" || text == "1" || text == "on") {
        return true;
    }
    if (text == "false" || text == "0" || text == "off") {
        return false;
    }
    throw ConfigError(fmt::format("{}: expected true/false, got '{}'", key, text));
}

struct Field {
    std::function<void(ScenarioConfig&, std::string_view key, std::string_view value)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

using Registry = std::vector<std::pair<std::string, Field>>;

template <class Access>
Field number(Access access, double scale = 1.0)
{
    return {[access, scale](ScenarioConfig& c, std::string_view key, std::string_view v) {
                access(c) = parse_double(key, v) * scale;
            },
            [access, scale](const ScenarioConfig& c) {
                return fmt::format("{}", access(const_cast<ScenarioConfig&>(c)) / scale);
            }};
}

template <class Access>
Field flag(Access access)
{
    return {[access](ScenarioConfig& c, std::string_view key, std::string_view v) { access(c) = parse_bool(key, v); },
            [access](const ScenarioConfig& c) {
                return std::string(access(const_cast<ScenarioConfig&>(c)) ? "true" : "false");
            }};
}

void add_gains(Registry& r, const std::string& loop, AxisGains CascadeGains::*member,
               const std::array<const char*, 3>& axes)
{
    for (std::size_t i = 0; i < 3; ++i) {
        const std::string prefix = "gains." + loop + "." + axes[i] + ".";
        r.emplace_back(prefix + "kp", number([member, i](ScenarioConfig& c) -> double& { return (c.gains.*member)[i].kp; }));
        r.emplace_back(prefix + "ki", number([member, i](ScenarioConfig& c) -> double& { return (c.gains.*member)[i].ki; }));
        r.emplace_back(prefix + "kd", number([member, i](ScenarioConfig& c) -> double& { return (c.gains.*member)[i].kd; }));
    }
}

Registry build_registry()
{
    Registry r;
    const double deg = deg2rad(1.0);

    r.emplace_back("scenario.kind",
                   Field{[](ScenarioConfig& c, std::string_view key, std::string_view v) {
                             v = trim(v);
                             if (v == "rect") {
                                 c.kind = ScenarioKind::Rectangular;
                             } else if (v == "circle") {
                                 c.kind = ScenarioKind::Circular;
                             } else if (v == "file") {
                                 c.kind = ScenarioKind::ScheduleFile;
                             } else {
                                 throw ConfigError(fmt::format("{}: expected rect|circle|file, got '{}'", key, v));
                             }
                         },
                         [](const ScenarioConfig& c) {
                             switch (c.kind) {
                             case ScenarioKind::Rectangular: return std::string("rect");
                             case ScenarioKind::Circular: return std::string("circle");
                             case ScenarioKind::ScheduleFile: break;
                             }
                             return std::string("file");
                         }});
    r.emplace_back("scenario.file", Field{[](ScenarioConfig& c, std::string_view, std::string_view v) {
                                              c.schedule_file = std::string(trim(v));
                                          },
                                          [](const ScenarioConfig& c) { return c.schedule_file; }});
    r.emplace_back("sim.duration", Field{[](ScenarioConfig& c, std::string_view key, std::string_view v) {
                                             c.duration = parse_double(key, v);
                                         },
                                         [](const ScenarioConfig& c) {
                                             return c.duration ? fmt::format("{}", *c.duration) : std::string("auto");
                                         }});
    r.emplace_back("sim.dt", number([](ScenarioConfig& c) -> double& { return c.dt; }));
    r.emplace_back("sim.control_divisor", Field{[](ScenarioConfig& c, std::string_view key, std::string_view v) {
                                                    c.control_divisor = parse_int(key, v);
                                                },
                                                [](const ScenarioConfig& c) { return fmt::format("{}", c.control_divisor); }});
    r.emplace_back("output.dir", Field{[](ScenarioConfig& c, std::string_view, std::string_view v) {
                                           c.output_dir = std::string(trim(v));
                                       },
                                       [](const ScenarioConfig& c) { return c.output_dir; }});
    r.emplace_back("telemetry.destination",
                   Field{[](ScenarioConfig& c, std::string_view, std::string_view v) {
                             v = trim(v);
                             if (v == "off" || v.empty()) {
                                 c.telemetry.reset();
                             } else {
                                 c.telemetry = parse_endpoint(v);
                             }
                         },
                         [](const ScenarioConfig& c) {
                             return c.telemetry ? fmt::format("{}:{}", c.telemetry->host, c.telemetry->port)
                                                : std::string("off");
                         }});

    r.emplace_back("circle.radius", number([](ScenarioConfig& c) -> double& { return c.circle.radius; }));
    r.emplace_back("circle.altitude", number([](ScenarioConfig& c) -> double& { return c.circle.altitude; }));
    r.emplace_back("circle.duration", number([](ScenarioConfig& c) -> double& { return c.circle.duration; }));
    r.emplace_back("circle.climb_time", number([](ScenarioConfig& c) -> double& { return c.circle.climb_time; }));
    r.emplace_back("circle.lap_time", number([](ScenarioConfig& c) -> double& { return c.circle.lap_time; }));
    r.emplace_back("circle.ramp_time", number([](ScenarioConfig& c) -> double& { return c.circle.ramp_time; }));

#define TS_VEHICLE(name) \
    r.emplace_back("vehicle." #name, number([](ScenarioConfig& c) -> double& { return c.vehicle.name; }))
#define TS_VEHICLE_DEG(name) \
    r.emplace_back("vehicle." #name "_deg", number([](ScenarioConfig& c) -> double& { return c.vehicle.name; }, deg))
    TS_VEHICLE(mass);
    TS_VEHICLE(gravity);
    TS_VEHICLE(air_density);
    TS_VEHICLE(wing_area);
    TS_VEHICLE(flap_area);
    TS_VEHICLE(span);
    TS_VEHICLE(mean_chord);
    TS_VEHICLE(aero_center);
    TS_VEHICLE(cg_position);
    TS_VEHICLE(aspect_ratio);
    TS_VEHICLE_DEG(sweep);
    TS_VEHICLE(oswald);
    TS_VEHICLE(prop_radius);
    TS_VEHICLE(motor_arm);
    TS_VEHICLE(jxx);
    TS_VEHICLE(jyy);
    TS_VEHICLE(jzz);
    TS_VEHICLE(thrust_coefficient);
    TS_VEHICLE(torque_coefficient);
    TS_VEHICLE(side_force_coefficient);
    TS_VEHICLE(cl_alpha);
    TS_VEHICLE(cl_delta);
    TS_VEHICLE(cl0);
    TS_VEHICLE(cd0);
    TS_VEHICLE(cm_alpha);
    TS_VEHICLE(cm_delta);
    TS_VEHICLE(cm0);
    TS_VEHICLE_DEG(alpha_limit);
    TS_VEHICLE(flap_yaw_gain);
    TS_VEHICLE(thrust_max);
    TS_VEHICLE(thrust_min);
    TS_VEHICLE_DEG(flap_max);
    TS_VEHICLE_DEG(flap_min);
#undef TS_VEHICLE
#undef TS_VEHICLE_DEG

    add_gains(r, "position", &CascadeGains::position, {"x", "y", "z"});
    add_gains(r, "velocity", &CascadeGains::velocity, {"x", "y", "z"});
    add_gains(r, "attitude", &CascadeGains::attitude, {"phi", "theta", "psi"});
    add_gains(r, "rate", &CascadeGains::rate, {"p", "q", "r"});

    r.emplace_back("controller.allocation",
                   Field{[](ScenarioConfig& c, std::string_view key, std::string_view v) {
                             try {
                                 c.controller.allocation = allocation_mode_from_string(trim(v));
                             } catch (const std::invalid_argument& e) {
                                 throw ConfigError(fmt::format("{}: {}", key, e.what()));
                             }
                         },
                         [](const ScenarioConfig& c) { return std::string(to_string(c.controller.allocation)); }});
    r.emplace_back("controller.pitch_trim_deg",
                   number([](ScenarioConfig& c) -> double& { return c.controller.pitch_trim; }, deg));
    r.emplace_back("controller.feedforward", flag([](ScenarioConfig& c) -> bool& { return c.controller.feedforward; }));
    r.emplace_back("controller.pitch_moment_term",
                   flag([](ScenarioConfig& c) -> bool& { return c.controller.pitch_moment_term; }));
    r.emplace_back("controller.flap_thrust_coupling",
                   number([](ScenarioConfig& c) -> double& { return c.controller.flap_thrust_coupling; }));
    r.emplace_back("controller.position_integral_limit",
                   number([](ScenarioConfig& c) -> double& { return c.controller.position_integral_limit; }));
    r.emplace_back("controller.velocity_integral_limit",
                   number([](ScenarioConfig& c) -> double& { return c.controller.velocity_integral_limit; }));
    r.emplace_back("controller.rate_integral_limit",
                   number([](ScenarioConfig& c) -> double& { return c.controller.rate_integral_limit; }));
    r.emplace_back("controller.derivative_tau_factor",
                   number([](ScenarioConfig& c) -> double& { return c.controller.derivative_tau_factor; }));
    return r;
}

const Registry& registry()
{
    static const Registry r = build_registry();
    return r;
}

}  // namespace

std::string ScenarioConfig::scenario_name() const
{
    switch (kind) {
    case ScenarioKind::Rectangular: return "rect";
    case ScenarioKind::Circular: return "circle";
    case ScenarioKind::ScheduleFile: break;
    }
    return std::filesystem::path(schedule_file).stem().string();
}

void ScenarioConfig::validate() const
{
    if (!(dt > 0.0 && dt <= 0.01)) {
        throw ConfigError(fmt::format("sim.dt must lie in (0, 0.01], got {}", dt));
    }
    if (control_divisor < 1) {
        throw ConfigError("sim.control_divisor must be >= 1");
    }
    const double per_log = kLogInterval / dt;
    if (std::abs(per_log - std::round(per_log)) > 1e-9 * per_log) {
        throw ConfigError(fmt::format("sim.dt = {} does not divide the 0.01 s log interval", dt));
    }
    if (duration && !(*duration > 0.0)) {
        throw ConfigError("sim.duration must be positive");
    }
    if (kind == ScenarioKind::ScheduleFile && schedule_file.empty()) {
        throw ConfigError("scenario.file is required for file scenarios");
    }
    try {
        vehicle.validate();
        gains.validate();
        controller.validate();
        if (kind == ScenarioKind::Circular) {
            circle.validate();
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

void set_scenario(ScenarioConfig& cfg, std::string_view scenario)
{
    if (scenario == "rect") {
        cfg.kind = ScenarioKind::Rectangular;
    } else if (scenario == "circle") {
        cfg.kind = ScenarioKind::Circular;
    } else {
        cfg.kind = ScenarioKind::ScheduleFile;
        cfg.schedule_file = std::string(scenario);
    }
}

TelemetryEndpoint parse_endpoint(std::string_view text)
{
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw ConfigError(fmt::format("telemetry destination must be host:port, got '{}'", text));
    }
    const std::string_view port_text = text.substr(colon + 1);
    int port = 0;
    const auto [end, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
    if (ec != std::errc() || end != port_text.data() + port_text.size() || port < 1 || port > 65535) {
        throw ConfigError(fmt::format("invalid telemetry port in '{}'", text));
    }
    return {std::string(text.substr(0, colon)), static_cast<std::uint16_t>(port)};
}

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value)
{
    for (const auto& [name, field] : registry()) {
        if (name == key) {
            field.set(cfg, key, value);
            return;
        }
    }
    throw ConfigError(fmt::format("unknown configuration key '{}'", key));
}

void apply_config_text(ScenarioConfig& cfg, std::string_view text)
{
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no));
        }
        try {
            apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(fmt::format("line {}: {}", line_no, e.what()));
        }
    }
}

void load_config_file(ScenarioConfig& cfg, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        apply_config_text(cfg, text.str());
    } catch (const ConfigError& e) {
        throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
    }
}

std::vector<std::pair<std::string, std::string>> config_entries(const ScenarioConfig& cfg)
{
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(registry().size());
    for (const auto& [name, field] : registry()) {
        out.emplace_back(name, field.get(cfg));
    }
    return out;
}

WaypointSchedule load_schedule_file(const std::filesystem::path& path, std::optional<double> duration)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(fmt::format("cannot open schedule file '{}'", path.string()));
    }
    WaypointSchedule schedule;
    std::string line;
    std::size_t line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') {
            continue;
        }
        if (header) {
            header = false;
            if (view.rfind("activation_s", 0) == 0) {
                continue;
            }
        }
        std::vector<std::string_view> cols;
        std::string_view rest = view;
        while (true) {
            const auto comma = rest.find(',');
            cols.push_back(trim(rest.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            rest = rest.substr(comma + 1);
        }
        if (cols.size() < 4 || cols.size() > 7) {
            throw ConfigError(fmt::format("{}:{}: expected 4 to 7 columns", path.string(), line_no));
        }
        const std::string where = fmt::format("{}:{}", path.string(), line_no);
        Waypoint w;
        w.activation = parse_double(where, cols[0]);
        w.position = {parse_double(where, cols[1]), parse_double(where, cols[2]), parse_double(where, cols[3])};
        if (cols.size() > 4 && !cols[4].empty()) {
            w.yaw = deg2rad(parse_double(where, cols[4]));
        }
        if (cols.size() > 5 && !cols[5].empty()) {
            w.transit = parse_double(where, cols[5]);
        }
        if (cols.size() > 6 && !cols[6].empty()) {
            w.evaluation = parse_double(where, cols[6]);
        }
        schedule.waypoints.push_back(w);
    }
    if (schedule.waypoints.empty()) {
        throw ConfigError(fmt::format("schedule file '{}' has no waypoints", path.string()));
    }
    double last = 0.0;
    for (const Waypoint& w : schedule.waypoints) {
        last = std::max({last, w.activation + w.transit, w.evaluation.value_or(0.0)});
    }
    schedule.duration = duration.value_or(last + 5.0);
    try {
        schedule.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
    }
    return schedule;
}

}  // namespace tailsitter
