#pragma once

#include <array>
#include <string_view>

#include "tailsitter/aerodynamics.hpp"
#include "tailsitter/forces.hpp"
#include "tailsitter/state.hpp"
#include "tailsitter/trajectory.hpp"
#include "tailsitter/vehicle_params.hpp"

namespace tailsitter {

struct PidGains {
    double kp = 0.0;
    double ki = 0.0;
    double kd = 0.0;
};

/// Gains for the three axes of one loop (x/y/z, or roll/pitch/yaw).
using AxisGains = std::array<PidGains, 3>;

struct CascadeGains {
    AxisGains position;
    AxisGains velocity;
    AxisGains attitude;
    AxisGains rate;

    /// Tuned hover gains.
    static CascadeGains defaults();
    /// All gains >= 0; attitude and rate loops must not integrate.
    void validate() const;
};

/// Integrator and derivative memory of one three-axis PID.
struct PidMemory {
    Vec3 integral = Vec3::Zero();
    Vec3 previous = Vec3::Zero();    // last derivative input
    Vec3 derivative = Vec3::Zero();  // smoothed derivative
    bool primed = false;
};

struct LoopMemory {
    PidMemory position;
    PidMemory velocity;
    PidMemory attitude;
    PidMemory rate;
    double previous_thrust = 0.0;  // feeds the slipstream estimate [N]

    void reset(double initial_thrust);
};

/// How one PID loop integrates and differentiates.
struct LoopSettings {
    double integral_limit = 0.0;   // symmetric clamp on each accumulator; 0 disables the clamp
    double derivative_tau = 0.0;   // first-order smoothing time constant [s]
    bool wrap_derivative = false;  // derivative input is an angle
};

enum class AllocationMode {
    UnitConsistent,  // side-force demand divided by K_f, net of feedforwards
    Literal,         // dT = M_z / l_y + F_y as printed
};

std::string_view to_string(AllocationMode mode);
AllocationMode allocation_mode_from_string(std::string_view text);

struct ControllerOptions {
    AllocationMode allocation = AllocationMode::UnitConsistent;
    double pitch_trim = deg2rad(3.0);          // theta_ref = 90 deg + trim
    bool feedforward = true;                   // reference velocity / acceleration feedforward
    bool pitch_moment_term = true;             // symmetric flaps also serve the pitch-moment demand
    double flap_thrust_coupling = 0.0;         // weight of the flap term in the thrust row
    double position_integral_limit = 5.0;      // [m s]
    double velocity_integral_limit = 5.0;      // [m]
    double rate_integral_limit = 1.0;          // [rad]
    double derivative_tau_factor = 2.0;        // derivative smoothing, in control periods

    void validate() const;
};

/// Sum-and-difference actuator variables.
struct Allocation {
    double thrust = 0.0;        // T = T_L + T_R [N]
    double thrust_delta = 0.0;  // dT = T_L - T_R [N]
    double flap_sym = 0.0;      // delta_s = (delta_L + delta_R) / 2 [rad]
    double flap_delta = 0.0;    // ddelta = delta_L - delta_R [rad]
};

struct AllocationInput {
    Vec3 force_body = Vec3::Zero();    // F_DCB [N]
    Vec3 moment = Vec3::Zero();        // M_des [N m]
    double flap_pressure = 0.0;        // q_flap [Pa]
    Vec3 gravity_body = Vec3::Zero();  // feedforward [N]
    Vec3 aero_body = Vec3::Zero();     // feedforward [N]
};

/// One PID update. `derivative_input` is the signal differentiated (the error
/// itself, or the negated measurement).
Vec3 pid_update(const Vec3& error, const Vec3& derivative_input, PidMemory& mem, const AxisGains& gains,
                double dt, const LoopSettings& settings);

/// Desired inertial velocity from the position error.
Vec3 position_loop(const Vec3& error, PidMemory& mem, const AxisGains& gains, double dt,
                   const LoopSettings& settings);

/// Desired inertial force, m * PID(velocity error).
Vec3 velocity_loop(const Vec3& error, PidMemory& mem, const AxisGains& gains, double dt,
                   const LoopSettings& settings, const VehicleParams& p);

Vec3 force_to_body(const Vec3& force_inertial, const EulerYXZ& e);

/// Desired body rates from normalized attitude errors (PD, derivative on
/// the measured angles).
Vec3 attitude_loop(const Vec3& error, const Vec3& measured, PidMemory& mem, const AxisGains& gains,
                   double dt, const LoopSettings& settings);

/// Desired body moments, diag(J) * PID(rate error), derivative on the measured rates.
Vec3 rate_loop(const Vec3& error, const Vec3& measured, PidMemory& mem, const AxisGains& gains,
               double dt, const LoopSettings& settings, const VehicleParams& p);

/// Maps body force/moment demands to (T, dT, delta_s, ddelta). Throws
/// std::invalid_argument when q_flap <= 0.
Allocation allocate(const AllocationInput& in, const VehicleParams& p, const ControllerOptions& opts);

/// Inverse of the sum-and-difference definitions followed by saturation.
/// Collective terms are clipped to their limits first, then the differential
/// terms are clipped to whatever range is left.
ActuatorCommand mix(const Allocation& a, const VehicleParams& p);

/// Exact inverse of mix() without saturation.
ActuatorCommand unsaturated_mix(const Allocation& a);

/// T, dT, delta_s, ddelta of a command.
Allocation sum_difference(const ActuatorCommand& cmd);

/// Runs position, velocity, attitude and rate loops, allocation and mixing.
ActuatorCommand controller_step(const RigidBodyState& state, const ReferenceSample& reference,
                                LoopMemory& mem, const CascadeGains& gains, const VehicleParams& p,
                                const ControllerOptions& opts, double dt);

/// theta_ref used while hovering.
double hover_pitch_reference(const ControllerOptions& opts);

}  // namespace tailsitter
