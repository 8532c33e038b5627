#pragma once

#include <stdexcept>

#include "tailsitter/frames.hpp"

namespace tailsitter {

/// Airframe constants. Defaults are the dual-motor, two-flap tail-sitter
/// the controller gains were tuned for.
struct VehicleParams {
    // mass and environment
    double mass = 1.076;            // [kg]
    double gravity = 9.81;          // [m/s^2]
    double air_density = 1.225;     // [kg/m^3]

    // geometry
    double wing_area = 0.0882;      // S_wing [m^2]
    double flap_area = 0.02;        // S_f [m^2]
    double span = 0.63;             // b [m]
    double mean_chord = 0.14;       // c_bar [m]
    double aero_center = 0.03;      // X_a [m]
    double cg_position = 0.026;     // X_g [m]
    double aspect_ratio = 4.5;
    double sweep = 0.0;             // [rad]
    double oswald = 0.8;
    double prop_radius = 0.11425;   // [m]
    double motor_arm = 0.168;       // l_y, lateral motor offset [m]

    // diagonal inertia [kg m^2]
    double jxx = 0.0134;
    double jyy = 0.015438;
    double jzz = 0.02462;

    // propulsion
    double thrust_coefficient = 6.5e-6;   // C_T [N s^2]
    double torque_coefficient = 1.05e-7;  // C_mu [N m s^2]
    double side_force_coefficient = 1.0;  // C_Y, tuned

    // aerodynamic coefficients
    double cl_alpha = 4.4;      // [1/rad]
    double cl_delta = 1.5;      // [1/rad]
    double cl0 = -0.2477;
    double cd0 = 0.05;
    double cm_alpha = -0.2;     // [1/rad]
    double cm_delta = -1.0;     // [1/rad]
    double cm0 = -0.0390;
    double alpha_limit = deg2rad(30.0);  // coefficient models are clamped to +-alpha_limit
    double flap_yaw_gain = 0.0;          // flap-induced yaw per unit flap roll moment

    // actuator limits (thrust limits apply to T_L + T_R)
    double thrust_max = 22.0;             // [N]
    double thrust_min = 0.5;              // [N]
    double flap_max = deg2rad(35.0);      // [rad]
    double flap_min = deg2rad(-35.0);     // [rad]

    /// Slipstream radius R_s, taken as 0.707 of the propeller radius.
    double slipstream_radius() const { return 0.707 * prop_radius; }
    double weight() const { return mass * gravity; }
    Vec3 inertia() const { return {jxx, jyy, jzz}; }
    /// Reaction torque per newton of thrust, C_mu / C_T [m].
    double torque_per_thrust() const { return torque_coefficient / thrust_coefficient; }

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const;
};

}  // namespace tailsitter
