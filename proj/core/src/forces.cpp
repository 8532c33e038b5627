#include "tailsitter/forces.hpp"

#include <cmath>

namespace tailsitter {

namespace {

ActuatorCommand clean_wing(const ActuatorCommand& cmd)
{
    ActuatorCommand clean = cmd;
    clean.flap_left = 0.0;
    clean.flap_right = 0.0;
    return clean;
}

}  // namespace

double side_force_gain(const VehicleParams& p)
{
    const double rs = p.slipstream_radius();
    return 2.0 * p.flap_area * p.side_force_coefficient / (kPi * rs * rs);
}

Vec3 thrust_force(const ActuatorCommand& cmd, const VehicleParams& p)
{
    return {cmd.total_thrust(), side_force_gain(p) * cmd.differential_thrust(), 0.0};
}

Vec3 gravity_force_body(const EulerYXZ& e, const VehicleParams& p)
{
    return rotation_inertial_to_body(e) * Vec3(0.0, 0.0, p.weight());
}

Vec3 aero_force(double alpha, double pressure, const VehicleParams& p, const ActuatorCommand& cmd)
{
    const double cl = lift_coefficient(alpha, cmd.flap_left, cmd.flap_right, p);
    const double cd = drag_coefficient(cl, p);
    const double lift = pressure * p.wing_area * cl;
    const double drag = pressure * p.wing_area * cd;
    const double sa = std::sin(alpha);
    const double ca = std::cos(alpha);
    return {lift * sa - drag * ca, 0.0, -lift * ca - drag * sa};
}

Vec3 flap_force(double flap_pressure, const ActuatorCommand& cmd, const VehicleParams& p)
{
    const double mean = 0.5 * (cmd.flap_left + cmd.flap_right);
    return {0.0, 0.0, flap_pressure * p.flap_area * p.cl_delta * mean};
}

Vec3 thrust_moment(const ActuatorCommand& cmd, const VehicleParams& p)
{
    // Props spin in opposite directions: Q_L = -k T_L, Q_R = +k T_R.
    const double k = p.torque_per_thrust();
    const double roll = -k * cmd.thrust_left + k * cmd.thrust_right;
    const double yaw = p.motor_arm * cmd.differential_thrust();
    return {roll, 0.0, yaw};
}

Vec3 aero_moment(double alpha, double pressure, double aero_force_z, const ActuatorCommand& cmd,
                 const VehicleParams& p)
{
    const double cm = moment_coefficient(alpha, cmd.flap_left, cmd.flap_right, p);
    const double pitch = pressure * p.wing_area * p.mean_chord * cm +
                         aero_force_z * (p.aero_center - p.cg_position);
    return {0.0, pitch, 0.0};
}

Vec3 flap_moment(double flap_pressure, const ActuatorCommand& cmd, const VehicleParams& p)
{
    const double base = flap_pressure * p.flap_area;
    const double roll = base * 0.5 * p.span * p.cl_delta * (cmd.flap_left - cmd.flap_right);
    const double pitch = base * p.mean_chord * p.cm_delta * 0.5 * (cmd.flap_left + cmd.flap_right);
    return {roll, pitch, p.flap_yaw_gain * roll};
}

BodyWrench total_wrench(const RigidBodyState& s, const ActuatorCommand& cmd, const VehicleParams& p)
{
    // RK stages of a blown-up state arrive here before the step can reject them.
    if (!s.is_finite()) {
        throw DivergenceError("non-finite state");
    }
    const Airflow flow = evaluate_airflow(s.velocity, cmd.total_thrust(), p);
    const ActuatorCommand wing = clean_wing(cmd);

    const Vec3 f_aero = aero_force(flow.alpha, flow.wing_pressure, p, wing);

    BodyWrench w;
    w.force = gravity_force_body(s.attitude, p) + thrust_force(cmd, p) + f_aero +
              flap_force(flow.flap_pressure, cmd, p);
    w.moment = thrust_moment(cmd, p) +
               aero_moment(flow.alpha, flow.wing_pressure, f_aero.z(), wing, p) +
               flap_moment(flow.flap_pressure, cmd, p);
    if (!w.is_finite()) {
        throw DivergenceError("non-finite body wrench");
    }
    return w;
}

}  // namespace tailsitter
