#pragma once

#include "tailsitter/vehicle_params.hpp"

namespace tailsitter {

// Momentum-theory slipstream, dynamic pressure, angle of attack and the
// linear coefficient models. All functions are pure.

/// Positive root of rho*pi*Rs^2 * Vs * (Vs + |u|) = T, no floor applied.
double slipstream_velocity_unclamped(double thrust, double u, const VehicleParams& p);

/// Slipstream speed at hover (u = 0, T = m g); the floor of slipstream_velocity().
double hover_slipstream_velocity(const VehicleParams& p);

/// max(unclamped root, hover floor). Throws std::invalid_argument for thrust < 0.
double slipstream_velocity(double thrust, double u, const VehicleParams& p);

/// 1/2 rho V^2. Throws std::invalid_argument for negative speed.
double dynamic_pressure(double airspeed, const VehicleParams& p);

struct AngleOfAttack {
    double alpha = 0.0;
    bool degenerate = false;  // set when both flow components are zero
};

/// atan2(w, u + v_prop). Pass v_prop = 0 for the forward-flight form.
AngleOfAttack angle_of_attack(double u, double w, double v_prop);

/// Clamps alpha into [-alpha_limit, alpha_limit] before coefficient lookup.
double clamp_alpha(double alpha, const VehicleParams& p);

double lift_coefficient(double alpha, double flap_left, double flap_right, const VehicleParams& p);

/// Finite-wing lift slope from sweep and aspect ratio. Utility only: the
/// simulator uses the tabulated cl_alpha.
double cl_alpha_from_geometry(double sweep, double aspect_ratio);

double drag_coefficient(double cl, const VehicleParams& p);

double moment_coefficient(double alpha, double flap_left, double flap_right, const VehicleParams& p);

/// Everything the force models need about the local flow.
struct Airflow {
    double slipstream = 0.0;        // Vs [m/s]
    double alpha = 0.0;             // clamped, slipstream-augmented [rad]
    bool degenerate = false;
    double wing_pressure = 0.0;     // from body airspeed [Pa]
    double flap_pressure = 0.0;     // from slipstream speed [Pa]
};

/// Evaluates the flow for body velocity (u, v, w) and the estimated total thrust.
Airflow evaluate_airflow(const Vec3& body_velocity, double thrust_estimate, const VehicleParams& p);

}  // namespace tailsitter
