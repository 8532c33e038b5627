#include "tailsitter/dynamics.hpp"

#include <stdexcept>

namespace tailsitter {

StateDerivative state_derivative(const RigidBodyState& s, const BodyWrench& w, const VehicleParams& p)
{
    const Vec3 inertia = p.inertia();
    const Vec3& omega = s.rates;

    StateDerivative d;
    d.position = rotation_body_to_inertial(s.attitude) * s.velocity;
    d.velocity = w.force / p.mass - omega.cross(s.velocity);
    d.attitude = euler_rate_matrix(s.attitude) * omega;
    d.rates = (w.moment - omega.cross(inertia.cwiseProduct(omega))).cwiseQuotient(inertia);
    return d;
}

RigidBodyState step(const RigidBodyState& s, const ActuatorCommand& cmd, double dt, const VehicleParams& p)
{
    return rk4_step(s, dt, p, [&](const RigidBodyState& x) { return total_wrench(x, cmd, p); });
}

namespace detail {

RigidBodyState advance(const RigidBodyState& s, const StateDerivative& d, double h)
{
    RigidBodyState out;
    out.position = s.position + h * d.position;
    out.velocity = s.velocity + h * d.velocity;
    out.attitude = EulerYXZ::from_vector(s.attitude.as_vector() + h * d.attitude);
    out.rates = s.rates + h * d.rates;
    return out;
}

void check_step_size(double dt)
{
    if (!(dt > 0.0 && dt <= kMaxStep)) {
        throw std::invalid_argument("integration step must lie in (0, 0.01] s");
    }
}

RigidBodyState finish_step(const RigidBodyState& s)
{
    if (!s.is_finite()) {
        throw DivergenceError("non-finite state after integration step");
    }
    RigidBodyState out = s;
    out.attitude = normalize(s.attitude);
    return out;
}

}  // namespace detail

}  // namespace tailsitter
