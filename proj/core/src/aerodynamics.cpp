#include "tailsitter/aerodynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tailsitter {

namespace {

double disk_factor(const VehicleParams& p)
{
    const double rs = p.slipstream_radius();
    return p.air_density * kPi * rs * rs;
}

double mean_flap(double left, double right) { return 0.5 * (left + right); }

}  // namespace

double slipstream_velocity_unclamped(double thrust, double u, const VehicleParams& p)
{
    const double speed = std::abs(u);
    return 0.5 * (-speed + std::sqrt(speed * speed + 4.0 * thrust / disk_factor(p)));
}

double hover_slipstream_velocity(const VehicleParams& p)
{
    return slipstream_velocity_unclamped(p.weight(), 0.0, p);
}

double slipstream_velocity(double thrust, double u, const VehicleParams& p)
{
    if (!(thrust >= 0.0)) {
        throw std::invalid_argument("slipstream_velocity: thrust must be non-negative");
    }
    return std::max(slipstream_velocity_unclamped(thrust, u, p), hover_slipstream_velocity(p));
}

double dynamic_pressure(double airspeed, const VehicleParams& p)
{
    if (!(airspeed >= 0.0)) {
        throw std::invalid_argument("dynamic_pressure: airspeed must be non-negative");
    }
    return 0.5 * p.air_density * airspeed * airspeed;
}

AngleOfAttack angle_of_attack(double u, double w, double v_prop)
{
    const double axial = u + v_prop;
    if (axial == 0.0 && w == 0.0) {
        return {0.0, true};
    }
    return {std::atan2(w, axial), false};
}

double clamp_alpha(double alpha, const VehicleParams& p)
{
    return std::clamp(alpha, -p.alpha_limit, p.alpha_limit);
}

double lift_coefficient(double alpha, double flap_left, double flap_right, const VehicleParams& p)
{
    return p.cl0 + p.cl_alpha * alpha + p.cl_delta * mean_flap(flap_left, flap_right);
}

double cl_alpha_from_geometry(double sweep, double aspect_ratio)
{
    const double section = 2.0 * kPi * std::cos(sweep);
    const double ratio = section / aspect_ratio;
    return section / (ratio + std::sqrt(1.0 + ratio * ratio));
}

double drag_coefficient(double cl, const VehicleParams& p)
{
    return p.cd0 + cl * cl / (kPi * p.oswald * p.aspect_ratio);
}

double moment_coefficient(double alpha, double flap_left, double flap_right, const VehicleParams& p)
{
    return p.cm0 + p.cm_alpha * alpha + p.cm_delta * mean_flap(flap_left, flap_right);
}

Airflow evaluate_airflow(const Vec3& body_velocity, double thrust_estimate, const VehicleParams& p)
{
    Airflow flow;
    flow.slipstream = slipstream_velocity(std::max(thrust_estimate, 0.0), body_velocity.x(), p);
    const AngleOfAttack aoa = angle_of_attack(body_velocity.x(), body_velocity.z(), flow.slipstream);
    flow.alpha = clamp_alpha(aoa.alpha, p);
    flow.degenerate = aoa.degenerate;
    flow.wing_pressure = dynamic_pressure(body_velocity.norm(), p);
    flow.flap_pressure = dynamic_pressure(flow.slipstream, p);
    return flow;
}

}  // namespace tailsitter
