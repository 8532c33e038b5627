#include "tailsitter/vehicle_params.hpp"

#include <cmath>
#include <string>

namespace tailsitter {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw std::invalid_argument("invalid vehicle parameters: " + what);
    }
}

}  // namespace

void VehicleParams::validate() const
{
    require(mass > 0.0, "mass must be positive");
    require(gravity > 0.0, "gravity must be positive");
    require(air_density > 0.0, "air density must be positive");
    require(wing_area > 0.0 && flap_area > 0.0, "areas must be positive");
    require(span > 0.0 && mean_chord > 0.0 && prop_radius > 0.0 && motor_arm > 0.0,
            "lengths must be positive");
    require(aspect_ratio > 0.0 && oswald > 0.0, "aspect ratio and Oswald factor must be positive");
    require(jxx > 0.0 && jyy > 0.0 && jzz > 0.0, "inertias must be positive");
    require(thrust_coefficient > 0.0 && torque_coefficient >= 0.0, "propeller coefficients");
    require(side_force_coefficient >= 0.0, "side-force coefficient must be non-negative");
    require(alpha_limit > 0.0, "alpha limit must be positive");
    require(thrust_min < weight() && weight() < thrust_max, "hover thrust must lie inside the thrust limits");
    require(thrust_min >= 0.0, "minimum thrust must be non-negative");
    require(flap_min < 0.0 && 0.0 < flap_max, "flap limits must bracket zero");
    const double values[] = {mass, gravity, air_density, wing_area, flap_area, span, mean_chord,
                             aero_center, cg_position, aspect_ratio, sweep, oswald, prop_radius,
                             motor_arm, jxx, jyy, jzz, thrust_coefficient, torque_coefficient,
                             side_force_coefficient, cl_alpha, cl_delta, cl0, cd0, cm_alpha,
                             cm_delta, cm0, alpha_limit, flap_yaw_gain, thrust_max, thrust_min,
                             flap_max, flap_min};
    for (double v : values) {
        require(std::isfinite(v), "all parameters must be finite");
    }
}

}  // namespace tailsitter
