#include "tailsitter/harness.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "tailsitter/controller.hpp"
#include "tailsitter/dynamics.hpp"
#include "tailsitter/telemetry.hpp"

namespace tailsitter {

namespace {

using nlohmann::json;

const char* const kAxisNames[3] = {"x", "y", "z"};

LogRow make_row(double t, const ReferenceSample& ref, const RigidBodyState& s, const ActuatorCommand& cmd)
{
    LogRow row;
    row.t = t;
    row.reference = ref.position;
    row.position = s.position;
    row.velocity = s.velocity;
    row.euler_deg = s.attitude.as_vector() * rad2deg(1.0);
    row.rates_deg = s.rates * rad2deg(1.0);
    row.thrust_left = cmd.thrust_left;
    row.thrust_right = cmd.thrust_right;
    row.flap_left_deg = rad2deg(cmd.flap_left);
    row.flap_right_deg = rad2deg(cmd.flap_right);
    row.thrust_total = cmd.total_thrust();
    return row;
}

std::string_view status_name(ExitStatus s)
{
    switch (s) {
    case ExitStatus::Success: return "completed";
    case ExitStatus::ConfigError: return "config_error";
    case ExitStatus::Divergence: return "diverged";
    case ExitStatus::IoError: return "io_error";
    }
    return "unknown";
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw OutputError(fmt::format("cannot open '{}' for writing", path.string()));
    }
    out << content;
    out.flush();
    if (!out) {
        throw OutputError(fmt::format("failed writing '{}'", path.string()));
    }
}

}  // namespace

Trajectory build_trajectory(const ScenarioConfig& cfg)
{
    switch (cfg.kind) {
    case ScenarioKind::Rectangular: {
        WaypointSchedule s = rectangular_schedule();
        if (cfg.duration) {
            s.duration = *cfg.duration;
        }
        return s;
    }
    case ScenarioKind::Circular: {
        CircularPath c = cfg.circle;
        if (cfg.duration) {
            c.duration = *cfg.duration;
        }
        try {
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        return c;
    }
    case ScenarioKind::ScheduleFile: break;
    }
    return load_schedule_file(cfg.schedule_file, cfg.duration);
}

RunResult run_scenario(const ScenarioConfig& cfg, TelemetrySink* telemetry)
{
    RunResult result;
    try {
        cfg.validate();
        result.trajectory = build_trajectory(cfg);
    } catch (const ConfigError& e) {
        result.status = ExitStatus::ConfigError;
        result.message = e.what();
        return result;
    }

    const VehicleParams& p = cfg.vehicle;
    const Trajectory& traj = result.trajectory;
    const double dt = cfg.dt;
    const double control_dt = dt * cfg.control_divisor;
    const auto steps = static_cast<long long>(std::llround(duration_of(traj) / dt));
    const auto log_every = static_cast<long long>(std::llround(ScenarioConfig::kLogInterval / dt));

    const ReferenceSample start = reference_at(0.0, traj);
    RigidBodyState state;
    state.position = start.position;
    state.attitude = EulerYXZ{0.0, hover_pitch_reference(cfg.controller), start.yaw};

    LoopMemory mem;
    mem.reset(p.weight());
    ActuatorCommand cmd;
    cmd.thrust_left = cmd.thrust_right = 0.5 * p.weight();

    result.log.sample_interval = ScenarioConfig::kLogInterval;
    result.log.rows.reserve(static_cast<std::size_t>(steps / log_every + 1));

    try {
        for (long long k = 0;; ++k) {
            const double t = static_cast<double>(k) * dt;
            const bool last = k == steps;
            const bool control_tick = k % cfg.control_divisor == 0;
            const bool log_tick = k % log_every == 0 || last;
            if (!control_tick && !log_tick) {
                state = step(state, cmd, dt, p);
                continue;
            }
            const ReferenceSample ref = reference_at(t, traj);
            if (control_tick && !last) {
                cmd = controller_step(state, ref, mem, cfg.gains, p, cfg.controller, control_dt);
            }
            if (log_tick) {
                result.log.rows.push_back(make_row(t, ref, state, cmd));
                if (telemetry != nullptr) {
                    telemetry->send(result.log.rows.back());
                }
            }
            if (last) {
                break;
            }
            state = step(state, cmd, dt, p);
        }
    } catch (const DivergenceError& e) {
        result.status = ExitStatus::Divergence;
        result.message = e.what();
    } catch (const SingularityError& e) {
        result.status = ExitStatus::Divergence;
        result.message = e.what();
    }

    if (!result.log.empty()) {
        result.metrics = compute_metrics(result.log, traj);
    }
    return result;
}

std::string trace_csv(const SimLog& log)
{
    std::string out =
        "t_s,ref_x_m,ref_y_m,ref_z_m,x_m,y_m,z_m,u_mps,v_mps,w_mps,phi_deg,theta_deg,psi_deg,"
        "p_dps,q_dps,r_dps,thrust_left_n,thrust_right_n,flap_left_deg,flap_right_deg,thrust_total_n\n";
    out.reserve(out.size() + log.rows.size() * 200);
    for (const LogRow& r : log.rows) {
        fmt::format_to(std::back_inserter(out),
                       "{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},"
                       "{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n",
                       r.t, r.reference.x(), r.reference.y(), r.reference.z(), r.position.x(), r.position.y(),
                       r.position.z(), r.velocity.x(), r.velocity.y(), r.velocity.z(), r.euler_deg.x(),
                       r.euler_deg.y(), r.euler_deg.z(), r.rates_deg.x(), r.rates_deg.y(), r.rates_deg.z(),
                       r.thrust_left, r.thrust_right, r.flap_left_deg, r.flap_right_deg, r.thrust_total);
    }
    return out;
}

std::string waypoints_csv(const SimLog& log, const Trajectory& traj)
{
    std::string out = "time_s,ref_x_m,ref_y_m,ref_z_m,err_x_m,err_y_m,err_z_m\n";
    for (const double t : evaluation_times(traj)) {
        const LogRow& r = log.rows[log.index_near(t)];
        const Vec3 e = r.reference - r.position;
        fmt::format_to(std::back_inserter(out), "{:.2f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", t,
                       r.reference.x(), r.reference.y(), r.reference.z(), e.x(), e.y(), e.z());
    }
    return out;
}

std::string metrics_json(const RunResult& result, const ScenarioConfig& cfg)
{
    json metrics = json::object();
    for (std::size_t i = 0; i < 3; ++i) {
        const AxisMetrics& a = result.metrics.axis[i];
        metrics[kAxisNames[i]] = {{"mae_m", a.mae},
                                  {"rmse_m", a.rmse},
                                  {"iae_m_s", a.iae},
                                  {"max_overshoot_m", a.max_overshoot},
                                  {"final_error_m", a.final_error}};
    }
    metrics["max_yaw_deviation_rad"] = result.metrics.max_yaw_deviation;
    metrics["max_yaw_deviation_deg"] = rad2deg(result.metrics.max_yaw_deviation);

    const SimLog& log = result.log;
    json scenario = {{"name", cfg.scenario_name()},
                     {"status", status_name(result.status)},
                     {"duration_s", duration_of(result.trajectory)},
                     {"simulated_s", log.empty() ? 0.0 : log.rows.back().t},
                     {"samples", log.rows.size()},
                     {"sample_interval_s", log.sample_interval},
                     {"evaluation_times_s", evaluation_times(result.trajectory)}};
    if (!result.message.empty()) {
        scenario["message"] = result.message;
    }
    if (!log.empty()) {
        double t_min = log.rows.front().thrust_total;
        double t_max = t_min;
        double flap_peak = 0.0;
        for (const LogRow& r : log.rows) {
            t_min = std::min(t_min, r.thrust_total);
            t_max = std::max(t_max, r.thrust_total);
            flap_peak = std::max({flap_peak, std::abs(r.flap_left_deg), std::abs(r.flap_right_deg)});
        }
        scenario["thrust_range_n"] = {t_min, t_max};
        scenario["max_abs_flap_deg"] = flap_peak;
    }

    json config = json::object();
    for (const auto& [key, value] : config_entries(cfg)) {
        config[key] = value;
    }
    return json{{"scenario", scenario}, {"metrics", metrics}, {"config", config}}.dump(2) + "\n";
}

TrackingMetrics metrics_from_json(std::string_view text)
{
    const json doc = json::parse(text);
    const json& m = doc.at("metrics");
    TrackingMetrics out;
    for (std::size_t i = 0; i < 3; ++i) {
        const json& a = m.at(kAxisNames[i]);
        out.axis[i] = {a.at("mae_m").get<double>(), a.at("rmse_m").get<double>(), a.at("iae_m_s").get<double>(),
                       a.at("max_overshoot_m").get<double>(), a.at("final_error_m").get<double>()};
    }
    out.max_yaw_deviation = m.at("max_yaw_deviation_rad").get<double>();
    return out;
}

void write_outputs(const RunResult& result, const ScenarioConfig& cfg, const std::filesystem::path& dir)
{
    if (result.log.empty()) {
        throw OutputError("refusing to write outputs for an empty log");
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw OutputError(fmt::format("cannot create '{}': {}", dir.string(), ec.message()));
    }
    write_file(dir / "trace.csv", trace_csv(result.log));
    write_file(dir / "metrics.json", metrics_json(result, cfg));
    write_file(dir / "waypoints.csv", waypoints_csv(result.log, result.trajectory));
}

}  // namespace tailsitter
