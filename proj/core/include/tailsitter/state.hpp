#pragma once

#include "tailsitter/frames.hpp"

namespace tailsitter {

/// Inertial position (NED), body velocity, attitude and body rates.
struct RigidBodyState {
    Vec3 position = Vec3::Zero();  // [m]
    Vec3 velocity = Vec3::Zero();  // (u, v, w) [m/s]
    EulerYXZ attitude;             // [rad]
    Vec3 rates = Vec3::Zero();     // (P, Q, R) [rad/s]

    bool is_finite() const;
};

/// Motor thrusts and flap deflections as applied to the airframe.
struct ActuatorCommand {
    double thrust_left = 0.0;   // T_L [N]
    double thrust_right = 0.0;  // T_R [N]
    double flap_left = 0.0;     // delta_L [rad]
    double flap_right = 0.0;    // delta_R [rad]

    double total_thrust() const { return thrust_left + thrust_right; }
    double differential_thrust() const { return thrust_left - thrust_right; }
};

/// Total force and moment about the centre of mass, body axes.
struct BodyWrench {
    Vec3 force = Vec3::Zero();   // [N]
    Vec3 moment = Vec3::Zero();  // [N m]

    bool is_finite() const { return force.allFinite() && moment.allFinite(); }
};

inline bool RigidBodyState::is_finite() const
{
    return position.allFinite() && velocity.allFinite() && attitude.as_vector().allFinite() &&
           rates.allFinite();
}

}  // namespace tailsitter
