#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "tailsitter/config.hpp"

using namespace tailsitter;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "tailsitter_config_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& path, const std::string& text)
{
    std::ofstream(path) << text;
}

}  // namespace

TEST(Config, DefaultsAreValid)
{
    ScenarioConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.dt, 1e-3);
    EXPECT_EQ(cfg.control_divisor, 5);
    EXPECT_FALSE(cfg.telemetry.has_value());
}

TEST(Config, AppliesDottedKeys)
{
    ScenarioConfig cfg;
    apply_config_text(cfg, R"(
# comment line
scenario.kind = circle
sim.dt = 0.002          # trailing comment
sim.control_divisor = 4
vehicle.mass = 1.2
vehicle.flap_max_deg = 30
gains.rate.q.kp = 3.5
gains.position.y.ki = 0.02
controller.allocation = literal
controller.feedforward = false
telemetry.destination = 127.0.0.1:9870
circle.radius = 3
)");
    EXPECT_EQ(cfg.kind, ScenarioKind::Circular);
    EXPECT_EQ(cfg.dt, 0.002);
    EXPECT_EQ(cfg.control_divisor, 4);
    EXPECT_EQ(cfg.vehicle.mass, 1.2);
    EXPECT_NEAR(cfg.vehicle.flap_max, deg2rad(30.0), 1e-15);
    EXPECT_EQ(cfg.gains.rate[1].kp, 3.5);
    EXPECT_EQ(cfg.gains.position[1].ki, 0.02);
    EXPECT_EQ(cfg.controller.allocation, AllocationMode::Literal);
    EXPECT_FALSE(cfg.controller.feedforward);
    ASSERT_TRUE(cfg.telemetry.has_value());
    EXPECT_EQ(cfg.telemetry->host, "127.0.0.1");
    EXPECT_EQ(cfg.telemetry->port, 9870);
    EXPECT_EQ(cfg.circle.radius, 3.0);
    EXPECT_NO_THROW(cfg.validate());
}

TEST(Config, UnknownKeyIsAnError)
{
    ScenarioConfig cfg;
    try {
        apply_config_text(cfg, "sim.dt = 0.001\ngains.rate.q.kpp = 1\n");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
        EXPECT_NE(std::string(e.what()).find("gains.rate.q.kpp"), std::string::npos) << e.what();
    }
}

TEST(Config, MalformedValuesAreErrors)
{
    ScenarioConfig cfg;
    EXPECT_THROW(apply_setting(cfg, "sim.dt", "fast"), ConfigError);
    EXPECT_THROW(apply_setting(cfg, "sim.dt", "0.001x"), ConfigError);
    EXPECT_THROW(apply_setting(cfg, "sim.control_divisor", "2.5"), ConfigError);
    EXPECT_THROW(apply_setting(cfg, "controller.feedforward", "maybe"), ConfigError);
    EXPECT_THROW(apply_setting(cfg, "controller.allocation", "fast"), ConfigError);
    EXPECT_THROW(apply_setting(cfg, "scenario.kind", "square"), ConfigError);
    EXPECT_THROW(apply_setting(cfg, "telemetry.destination", "localhost"), ConfigError);
    EXPECT_THROW(apply_setting(cfg, "telemetry.destination", "localhost:70000"), ConfigError);
    EXPECT_THROW(apply_config_text(cfg, "sim.dt 0.001\n"), ConfigError);
}

TEST(Config, ValidationBounds)
{
    ScenarioConfig cfg;
    cfg.dt = 0.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg.dt = 0.011;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg.dt = 0.01;
    EXPECT_NO_THROW(cfg.validate());
    cfg.dt = 0.003;  // does not divide the log interval
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg.dt = 1e-3;
    cfg.control_divisor = 0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg.control_divisor = 5;
    cfg.vehicle.mass = -1.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg.vehicle = VehicleParams{};
    cfg.gains.attitude[0].ki = 0.1;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg.gains = CascadeGains::defaults();
    cfg.kind = ScenarioKind::ScheduleFile;
    EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Config, EchoRoundTrips)
{
    ScenarioConfig cfg;
    apply_config_text(cfg, "vehicle.jyy = 0.0161\ngains.attitude.psi.kd = 0.7\nsim.duration = 12.5\n");
    const auto entries = config_entries(cfg);
    EXPECT_GT(entries.size(), 80u);

    ScenarioConfig copy;
    for (const auto& [key, value] : entries) {
        if (key == "sim.duration" && value == "auto") {
            continue;
        }
        apply_setting(copy, key, value);
    }
    EXPECT_EQ(config_entries(copy), entries);
    EXPECT_EQ(copy.vehicle.jyy, 0.0161);
    EXPECT_EQ(copy.duration, 12.5);
}

TEST(Config, LoadFileErrors)
{
    ScenarioConfig cfg;
    EXPECT_THROW(load_config_file(cfg, scratch("missing.cfg")), ConfigError);
    const fs::path bad = scratch("bad.cfg");
    write(bad, "vehicle.mas = 1.0\n");
    EXPECT_THROW(load_config_file(cfg, bad), ConfigError);
}

TEST(Config, ScenarioSelection)
{
    ScenarioConfig cfg;
    set_scenario(cfg, "circle");
    EXPECT_EQ(cfg.kind, ScenarioKind::Circular);
    EXPECT_EQ(cfg.scenario_name(), "circle");
    set_scenario(cfg, "/data/loop.csv");
    EXPECT_EQ(cfg.kind, ScenarioKind::ScheduleFile);
    EXPECT_EQ(cfg.scenario_name(), "loop");
}

TEST(ScheduleFile, Loads)
{
    const fs::path path = scratch("hop.csv");
    write(path,
          "activation_s,x_m,y_m,z_m,yaw_deg,transit_s,eval_s\n"
          "0,0,0,-2,0,0,\n"
          "2,1,0,-2,10,3,6\n");
    const WaypointSchedule s = load_schedule_file(path, std::nullopt);
    ASSERT_EQ(s.waypoints.size(), 2u);
    EXPECT_TRUE(s.waypoints[1].position.isApprox(Vec3(1, 0, -2), 0.0));
    EXPECT_NEAR(s.waypoints[1].yaw, deg2rad(10.0), 1e-15);
    EXPECT_EQ(s.waypoints[1].transit, 3.0);
    EXPECT_EQ(s.waypoints[1].evaluation, 6.0);
    EXPECT_FALSE(s.waypoints[0].evaluation.has_value());
    EXPECT_EQ(s.duration, 11.0);
    EXPECT_EQ(load_schedule_file(path, 20.0).duration, 20.0);
}

TEST(ScheduleFile, Errors)
{
    const fs::path path = scratch("broken.csv");
    write(path, "activation_s,x_m,y_m,z_m\n0,0,0\n");
    EXPECT_THROW(load_schedule_file(path, std::nullopt), ConfigError);
    write(path, "activation_s,x_m,y_m,z_m\n1,0,0,-1\n");
    EXPECT_THROW(load_schedule_file(path, std::nullopt), ConfigError);
    write(path, "activation_s,x_m,y_m,z_m\n");
    EXPECT_THROW(load_schedule_file(path, std::nullopt), ConfigError);
    EXPECT_THROW(load_schedule_file(scratch("nope.csv"), std::nullopt), ConfigError);
}
