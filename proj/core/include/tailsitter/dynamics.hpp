#pragma once

#include "tailsitter/forces.hpp"
#include "tailsitter/state.hpp"
#include "tailsitter/vehicle_params.hpp"

namespace tailsitter {

struct StateDerivative {
    Vec3 position = Vec3::Zero();
    Vec3 velocity = Vec3::Zero();
    Vec3 attitude = Vec3::Zero();
    Vec3 rates = Vec3::Zero();
};

/// Rigid-body equations of motion with diagonal inertia:
///   Pdot = R v,  vdot = F/m - w x v,  etadot = W w,  wdot = J^-1 (M - w x J w).
/// Throws SingularityError near roll = +-90 deg.
StateDerivative state_derivative(const RigidBodyState& s, const BodyWrench& w, const VehicleParams& p);

inline constexpr double kMaxStep = 0.01;

/// Classical RK4 with the wrench re-evaluated at each stage through
/// `wrench_of(state)`. Attitude is normalized after the step.
template <class WrenchFn>
RigidBodyState rk4_step(const RigidBodyState& s, double dt, const VehicleParams& p, WrenchFn&& wrench_of);

/// One RK4 step holding `cmd` constant. Requires 0 < dt <= kMaxStep;
/// throws DivergenceError on a non-finite result.
RigidBodyState step(const RigidBodyState& s, const ActuatorCommand& cmd, double dt, const VehicleParams& p);

namespace detail {

RigidBodyState advance(const RigidBodyState& s, const StateDerivative& d, double h);
void check_step_size(double dt);
RigidBodyState finish_step(const RigidBodyState& s);

}  // namespace detail

template <class WrenchFn>
RigidBodyState rk4_step(const RigidBodyState& s, double dt, const VehicleParams& p, WrenchFn&& wrench_of)
{
    detail::check_step_size(dt);
    auto f = [&](const RigidBodyState& x) { return state_derivative(x, wrench_of(x), p); };

    const StateDerivative k1 = f(s);
    const StateDerivative k2 = f(detail::advance(s, k1, 0.5 * dt));
    const StateDerivative k3 = f(detail::advance(s, k2, 0.5 * dt));
    const StateDerivative k4 = f(detail::advance(s, k3, dt));

    StateDerivative sum;
    sum.position = k1.position + 2.0 * k2.position + 2.0 * k3.position + k4.position;
    sum.velocity = k1.velocity + 2.0 * k2.velocity + 2.0 * k3.velocity + k4.velocity;
    sum.attitude = k1.attitude + 2.0 * k2.attitude + 2.0 * k3.attitude + k4.attitude;
    sum.rates = k1.rates + 2.0 * k2.rates + 2.0 * k3.rates + k4.rates;
    return detail::finish_step(detail::advance(s, sum, dt / 6.0));
}

}  // namespace tailsitter
