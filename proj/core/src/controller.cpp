#include "tailsitter/controller.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tailsitter {

namespace {

LoopSettings settings_for(double integral_limit, const ControllerOptions& opts, double dt,
                          bool wrap = false)
{
    return {integral_limit, opts.derivative_tau_factor * dt, wrap};
}

void check_dt(double dt)
{
    if (!(dt > 0.0)) {
        throw std::invalid_argument("controller time step must be positive");
    }
}

}  // namespace

CascadeGains CascadeGains::defaults()
{
    CascadeGains g;
    g.position = {{{2.84, 0.012, 0.55}, {2.22, 0.01, 0.52}, {1.21, 0.05, 0.71}}};
    g.velocity = {{{1.22, 0.15, 0.25}, {1.12, 0.11, 0.25}, {1.57, 0.22, 0.30}}};
    g.attitude = {{{4.24, 0.0, 0.80}, {5.31, 0.0, 1.25}, {3.32, 0.0, 0.55}}};
    g.rate = {{{1.55, 0.0, 0.15}, {2.50, 0.0, 0.05}, {1.25, 0.0, 0.05}}};
    return g;
}

void CascadeGains::validate() const
{
    for (const AxisGains* loop : {&position, &velocity, &attitude, &rate}) {
        for (const PidGains& g : *loop) {
            if (!(g.kp >= 0.0 && g.ki >= 0.0 && g.kd >= 0.0)) {
                throw std::invalid_argument("controller gains must be finite and non-negative");
            }
        }
    }
    for (const AxisGains* loop : {&attitude, &rate}) {
        for (const PidGains& g : *loop) {
            if (g.ki != 0.0) {
                throw std::invalid_argument("attitude and rate loops must have zero integral gain");
            }
        }
    }
}

void LoopMemory::reset(double initial_thrust)
{
    position = {};
    velocity = {};
    attitude = {};
    rate = {};
    previous_thrust = initial_thrust;
}

std::string_view to_string(AllocationMode mode)
{
    return mode == AllocationMode::Literal ? "literal" : "unit";
}

AllocationMode allocation_mode_from_string(std::string_view text)
{
    if (text == "unit") {
        return AllocationMode::UnitConsistent;
    }
    if (text == "literal") {
        return AllocationMode::Literal;
    }
    throw std::invalid_argument("unknown allocation mode '" + std::string(text) + "' (expected unit|literal)");
}

void ControllerOptions::validate() const
{
    if (!std::isfinite(pitch_trim) || !std::isfinite(flap_thrust_coupling)) {
        throw std::invalid_argument("controller options must be finite");
    }
    if (!(position_integral_limit >= 0.0 && velocity_integral_limit >= 0.0 && rate_integral_limit >= 0.0)) {
        throw std::invalid_argument("integral limits must be non-negative");
    }
    if (!(derivative_tau_factor >= 0.0)) {
        throw std::invalid_argument("derivative smoothing factor must be non-negative");
    }
}

Vec3 pid_update(const Vec3& error, const Vec3& derivative_input, PidMemory& mem, const AxisGains& gains,
                double dt, const LoopSettings& settings)
{
    check_dt(dt);
    mem.integral += error * dt;
    if (settings.integral_limit > 0.0) {
        mem.integral = mem.integral.cwiseMax(-settings.integral_limit).cwiseMin(settings.integral_limit);
    }

    if (!mem.primed) {
        mem.previous = derivative_input;
        mem.derivative.setZero();
        mem.primed = true;
    }
    Vec3 change = derivative_input - mem.previous;
    if (settings.wrap_derivative) {
        change = change.unaryExpr([](double a) { return normalize_angle(a); });
    }
    const double blend = dt / (settings.derivative_tau + dt);
    mem.derivative += blend * (change / dt - mem.derivative);
    mem.previous = derivative_input;

    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        const PidGains& g = gains[static_cast<std::size_t>(i)];
        out[i] = g.kp * error[i] + g.ki * mem.integral[i] + g.kd * mem.derivative[i];
    }
    return out;
}

Vec3 position_loop(const Vec3& error, PidMemory& mem, const AxisGains& gains, double dt,
                   const LoopSettings& settings)
{
    return pid_update(error, error, mem, gains, dt, settings);
}

Vec3 velocity_loop(const Vec3& error, PidMemory& mem, const AxisGains& gains, double dt,
                   const LoopSettings& settings, const VehicleParams& p)
{
    return p.mass * pid_update(error, error, mem, gains, dt, settings);
}

Vec3 force_to_body(const Vec3& force_inertial, const EulerYXZ& e)
{
    return rotation_inertial_to_body(e) * force_inertial;
}

Vec3 attitude_loop(const Vec3& error, const Vec3& measured, PidMemory& mem, const AxisGains& gains,
                   double dt, const LoopSettings& settings)
{
    LoopSettings angular = settings;
    angular.wrap_derivative = true;
    return pid_update(error, -measured, mem, gains, dt, angular);
}

Vec3 rate_loop(const Vec3& error, const Vec3& measured, PidMemory& mem, const AxisGains& gains,
               double dt, const LoopSettings& settings, const VehicleParams& p)
{
    return p.inertia().cwiseProduct(pid_update(error, -measured, mem, gains, dt, settings));
}

Allocation allocate(const AllocationInput& in, const VehicleParams& p, const ControllerOptions& opts)
{
    const double q = in.flap_pressure;
    if (!(q > 0.0)) {
        throw std::invalid_argument("allocate: flap dynamic pressure must be positive");
    }
    const double flap_force_gain = q * p.flap_area * p.cl_delta;
    const double flap_roll_gain = flap_force_gain * 0.5 * p.span;
    const double flap_pitch_gain = q * p.flap_area * p.mean_chord * p.cm_delta;
    const double yaw_share = in.moment.z() / p.motor_arm;

    Allocation a;
    double reaction = 0.0;
    if (opts.allocation == AllocationMode::Literal) {
        a.thrust_delta = yaw_share + in.force_body.y();
        reaction = p.torque_per_thrust() * yaw_share;
    } else {
        const double kf = side_force_gain(p);
        const double lateral = in.force_body.y() - in.gravity_body.y() - in.aero_body.y();
        a.thrust_delta = yaw_share + (kf > 0.0 ? lateral / kf : 0.0);
        reaction = p.torque_per_thrust() * a.thrust_delta;
    }
    a.flap_delta = (in.moment.x() + reaction) / flap_roll_gain;

    a.flap_sym = (in.force_body.z() - in.gravity_body.z() - in.aero_body.z()) / flap_force_gain;
    if (opts.pitch_moment_term && flap_pitch_gain != 0.0) {
        a.flap_sym += in.moment.y() / flap_pitch_gain;
    }

    a.thrust = in.force_body.x() - in.gravity_body.x() - in.aero_body.x() -
               opts.flap_thrust_coupling * flap_force_gain * a.flap_sym;
    return a;
}

ActuatorCommand unsaturated_mix(const Allocation& a)
{
    return {0.5 * (a.thrust + a.thrust_delta), 0.5 * (a.thrust - a.thrust_delta),
            a.flap_sym + 0.5 * a.flap_delta, a.flap_sym - 0.5 * a.flap_delta};
}

Allocation sum_difference(const ActuatorCommand& cmd)
{
    return {cmd.thrust_left + cmd.thrust_right, cmd.thrust_left - cmd.thrust_right,
            0.5 * (cmd.flap_left + cmd.flap_right), cmd.flap_left - cmd.flap_right};
}

ActuatorCommand mix(const Allocation& a, const VehicleParams& p)
{
    Allocation s;
    s.thrust = std::clamp(a.thrust, p.thrust_min, p.thrust_max);
    const double delta_room = s.thrust - p.thrust_min;
    s.thrust_delta = std::clamp(a.thrust_delta, -delta_room, delta_room);

    s.flap_sym = std::clamp(a.flap_sym, p.flap_min, p.flap_max);
    const double half_room = std::min(p.flap_max - s.flap_sym, s.flap_sym - p.flap_min);
    s.flap_delta = std::clamp(a.flap_delta, -2.0 * half_room, 2.0 * half_room);

    ActuatorCommand cmd = unsaturated_mix(s);
    cmd.flap_left = std::clamp(cmd.flap_left, p.flap_min, p.flap_max);
    cmd.flap_right = std::clamp(cmd.flap_right, p.flap_min, p.flap_max);
    return cmd;
}

double hover_pitch_reference(const ControllerOptions& opts)
{
    return 0.5 * kPi + opts.pitch_trim;
}

ActuatorCommand controller_step(const RigidBodyState& state, const ReferenceSample& reference,
                                LoopMemory& mem, const CascadeGains& gains, const VehicleParams& p,
                                const ControllerOptions& opts, double dt)
{
    check_dt(dt);
    const EulerYXZ attitude = normalize(state.attitude);
    const Mat3 body_to_inertial = rotation_body_to_inertial(attitude);

    Vec3 velocity_demand = position_loop(reference.position - state.position, mem.position,
                                         gains.position, dt,
                                         settings_for(opts.position_integral_limit, opts, dt));
    if (opts.feedforward) {
        velocity_demand += reference.velocity;
    }

    const Vec3 velocity_inertial = body_to_inertial * state.velocity;
    Vec3 force_demand = velocity_loop(velocity_demand - velocity_inertial, mem.velocity, gains.velocity,
                                      dt, settings_for(opts.velocity_integral_limit, opts, dt), p);
    if (opts.feedforward) {
        force_demand += p.mass * reference.acceleration;
    }
    const Vec3 force_body = body_to_inertial.transpose() * force_demand;

    const Vec3 attitude_ref(0.0, hover_pitch_reference(opts), reference.yaw);
    const Vec3 attitude_error =
        (attitude_ref - attitude.as_vector()).unaryExpr([](double a) { return normalize_angle(a); });
    const Vec3 rate_demand = attitude_loop(attitude_error, attitude.as_vector(), mem.attitude,
                                           gains.attitude, dt, settings_for(0.0, opts, dt));
    const Vec3 moment_demand = rate_loop(rate_demand - state.rates, state.rates, mem.rate, gains.rate, dt,
                                         settings_for(opts.rate_integral_limit, opts, dt), p);

    const Airflow flow = evaluate_airflow(state.velocity, mem.previous_thrust, p);
    AllocationInput in;
    in.force_body = force_body;
    in.moment = moment_demand;
    in.flap_pressure = flow.flap_pressure;
    in.gravity_body = gravity_force_body(attitude, p);
    in.aero_body = aero_force(flow.alpha, flow.wing_pressure, p, ActuatorCommand{});

    const ActuatorCommand cmd = mix(allocate(in, p, opts), p);
    mem.previous_thrust = cmd.total_thrust();
    return cmd;
}

}  // namespace tailsitter
