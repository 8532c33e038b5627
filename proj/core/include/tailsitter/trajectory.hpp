#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tailsitter/frames.hpp"

namespace tailsitter {

/// One waypoint of a schedule. The reference leaves the previous waypoint at
/// `activation` and arrives here `transit` seconds later along a
/// minimum-jerk profile (transit = 0 is a step).
struct Waypoint {
    double activation = 0.0;               // [s]
    Vec3 position = Vec3::Zero();          // NED [m]
    double yaw = 0.0;                      // [rad]
    double transit = 0.0;                  // [s]
    std::optional<double> evaluation;      // time the tracking error is reported [s]
};

struct WaypointSchedule {
    std::vector<Waypoint> waypoints;
    double duration = 0.0;  // [s]

    /// Activations strictly increasing from 0, legs not overlapping,
    /// duration past the last arrival. Throws std::invalid_argument.
    void validate() const;
};

/// Climb from the ground at the circle start point, one lap around `center`
/// turning from north towards east (positive about the down axis, clockwise
/// seen from above), then hold at the start point until `duration`.
struct CircularPath {
    double radius = 2.0;       // [m]
    double altitude = 1.0;     // [m]
    double duration = 55.0;    // [s]
    double climb_time = 5.0;   // [s]
    double lap_time = 40.0;    // [s]
    double ramp_time = 2.0;    // speed ramp at each end of the lap [s]
    Vec3 center = Vec3::Zero();

    Vec3 start_point() const { return center + Vec3(radius, 0.0, 0.0); }
    /// Tangential speed on the constant-speed part of the lap.
    double cruise_speed() const;
    void validate() const;
};

using Trajectory = std::variant<WaypointSchedule, CircularPath>;

struct ReferenceSample {
    Vec3 position = Vec3::Zero();
    Vec3 velocity = Vec3::Zero();
    Vec3 acceleration = Vec3::Zero();
    double yaw = 0.0;
};

/// 20 m x 5 m box at 5 m altitude followed by a landing; 70 s.
WaypointSchedule rectangular_schedule();

CircularPath circular_schedule(double radius = 2.0, double altitude = 1.0, double duration = 55.0);

/// Reference at time t (t >= 0); past the end the final reference holds.
ReferenceSample reference_at(double t, const Trajectory& traj);

double duration_of(const Trajectory& traj);

/// Times at which per-waypoint errors are reported.
std::vector<double> evaluation_times(const Trajectory& traj);

/// Waypoint whose leg is active at t (the last one activated).
const Waypoint& active_waypoint(double t, const WaypointSchedule& schedule);

}  // namespace tailsitter
