#pragma once

#include <array>

#include "tailsitter/sim_log.hpp"
#include "tailsitter/trajectory.hpp"

namespace tailsitter {

struct AxisMetrics {
    double mae = 0.0;            // [m]
    double rmse = 0.0;           // [m]
    double iae = 0.0;            // [m s]
    double max_overshoot = 0.0;  // [m]
    double final_error = 0.0;    // [m], signed

    bool operator==(const AxisMetrics&) const = default;
};

struct TrackingMetrics {
    std::array<AxisMetrics, 3> axis;  // x, y, z
    double max_yaw_deviation = 0.0;   // [rad]

    bool operator==(const TrackingMetrics&) const = default;
};

/// Per-axis tracking error statistics of e = reference - position.
///
/// Overshoot on an axis is the largest excursion past the reference in the
/// direction the reference last moved along that axis. Yaw deviation is
/// measured against the trajectory's yaw reference. Throws
/// std::invalid_argument for an empty log.
TrackingMetrics compute_metrics(const SimLog& log, const Trajectory& traj);

}  // namespace tailsitter
