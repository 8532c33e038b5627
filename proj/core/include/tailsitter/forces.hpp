#pragma once

#include <stdexcept>

#include "tailsitter/aerodynamics.hpp"
#include "tailsitter/state.hpp"
#include "tailsitter/vehicle_params.hpp"

namespace tailsitter {

class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// K_f = 2 S_f C_Y / (pi Rs^2): body-y force per newton of differential thrust.
double side_force_gain(const VehicleParams& p);

/// (T_L + T_R, K_f (T_L - T_R), 0).
Vec3 thrust_force(const ActuatorCommand& cmd, const VehicleParams& p);

/// Weight m g (NED down) expressed in body axes.
Vec3 gravity_force_body(const EulerYXZ& e, const VehicleParams& p);

/// Wing lift and drag resolved in body axes; no side component.
Vec3 aero_force(double alpha, double pressure, const VehicleParams& p, const ActuatorCommand& cmd);

/// Normal force of the flaps in the slipstream.
Vec3 flap_force(double flap_pressure, const ActuatorCommand& cmd, const VehicleParams& p);

/// Reaction torque (roll) and differential-thrust yaw moment.
Vec3 thrust_moment(const ActuatorCommand& cmd, const VehicleParams& p);

/// Wing pitching moment plus the offset of the aerodynamic centre from the CG.
Vec3 aero_moment(double alpha, double pressure, double aero_force_z, const ActuatorCommand& cmd,
                 const VehicleParams& p);

Vec3 flap_moment(double flap_pressure, const ActuatorCommand& cmd, const VehicleParams& p);

/// Sum of every force and moment model at the given state.
///
/// The slipstream is estimated from the command's total thrust. Wing
/// coefficients are taken at neutral flaps; the flap increments come only
/// from flap_force() and flap_moment() so that deflection is not counted on
/// both the wing and flap reference areas. Throws DivergenceError when the state or
/// any wrench component is not finite.
BodyWrench total_wrench(const RigidBodyState& s, const ActuatorCommand& cmd, const VehicleParams& p);

}  // namespace tailsitter
