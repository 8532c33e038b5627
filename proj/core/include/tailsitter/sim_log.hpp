#pragma once

#include <vector>

#include "tailsitter/frames.hpp"

namespace tailsitter {

/// One logged sample. Angles are stored in degrees, as written to trace.csv.
struct LogRow {
    double t = 0.0;                           // [s]
    Vec3 reference = Vec3::Zero();            // [m]
    Vec3 position = Vec3::Zero();             // [m]
    Vec3 velocity = Vec3::Zero();             // body (u, v, w) [m/s]
    Vec3 euler_deg = Vec3::Zero();            // (phi, theta, psi) [deg]
    Vec3 rates_deg = Vec3::Zero();            // (P, Q, R) [deg/s]
    double thrust_left = 0.0;                 // [N]
    double thrust_right = 0.0;                // [N]
    double flap_left_deg = 0.0;               // [deg]
    double flap_right_deg = 0.0;              // [deg]
    double thrust_total = 0.0;                // [N]
};

/// Uniformly sampled time series.
struct SimLog {
    double sample_interval = 0.01;  // [s]
    std::vector<LogRow> rows;

    bool empty() const { return rows.empty(); }
    /// Index of the row closest in time to t; rows must not be empty.
    std::size_t index_near(double t) const;
};

}  // namespace tailsitter
