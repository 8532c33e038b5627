#include "tailsitter/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace tailsitter {

namespace {

struct Blend {
    double s = 1.0;    // progress in [0, 1]
    double ds = 0.0;   // d s / dt
    double dds = 0.0;  // d2 s / dt2
};

// 10 tau^3 - 15 tau^4 + 6 tau^5
Blend minimum_jerk(double elapsed, double transit)
{
    if (transit <= 0.0 || elapsed >= transit) {
        return {};
    }
    if (elapsed <= 0.0) {
        return {0.0, 0.0, 0.0};
    }
    const double tau = elapsed / transit;
    const double t2 = tau * tau;
    const double t3 = t2 * tau;
    return {t3 * (10.0 - 15.0 * tau + 6.0 * t2),
            30.0 * t2 * (1.0 - 2.0 * tau + t2) / transit,
            60.0 * tau * (1.0 - 3.0 * tau + 2.0 * t2) / (transit * transit)};
}

ReferenceSample sample_schedule(double t, const WaypointSchedule& schedule)
{
    const auto& wps = schedule.waypoints;
    ReferenceSample ref;
    ref.position = wps.front().position;
    ref.yaw = wps.front().yaw;
    for (std::size_t i = 1; i < wps.size() && wps[i].activation <= t; ++i) {
        const Waypoint& from = wps[i - 1];
        const Waypoint& to = wps[i];
        const Blend b = minimum_jerk(t - to.activation, to.transit);
        const Vec3 leg = to.position - from.position;
        const double turn = normalize_angle(to.yaw - from.yaw);
        ref.position = from.position + b.s * leg;
        ref.velocity = b.ds * leg;
        ref.acceleration = b.dds * leg;
        ref.yaw = normalize_angle(from.yaw + b.s * turn);
    }
    return ref;
}

// Arc length, speed and tangential acceleration along the lap.
struct ArcState {
    double distance = 0.0;
    double speed = 0.0;
    double accel = 0.0;
};

ArcState ramp_in(double elapsed, double ramp, double cruise)
{
    // speed = cruise * (3x^2 - 2x^3), x = elapsed / ramp
    const double x = elapsed / ramp;
    return {cruise * ramp * (x * x * x - 0.5 * x * x * x * x),
            cruise * x * x * (3.0 - 2.0 * x),
            cruise * 6.0 * x * (1.0 - x) / ramp};
}

ArcState lap_arc(double elapsed, const CircularPath& c)
{
    const double length = 2.0 * kPi * c.radius;
    const double cruise = c.cruise_speed();
    const double ramp = c.ramp_time;
    if (ramp > 0.0 && elapsed < ramp) {
        return ramp_in(elapsed, ramp, cruise);
    }
    if (ramp > 0.0 && elapsed > c.lap_time - ramp) {
        const ArcState mirror = ramp_in(c.lap_time - elapsed, ramp, cruise);
        return {length - mirror.distance, mirror.speed, -mirror.accel};
    }
    return {0.5 * cruise * ramp + cruise * (elapsed - ramp), cruise, 0.0};
}

ReferenceSample sample_circle(double t, const CircularPath& c)
{
    ReferenceSample ref;
    const Vec3 start = c.start_point();
    if (t < c.climb_time) {
        const Blend b = minimum_jerk(t, c.climb_time);
        ref.position = start + Vec3(0.0, 0.0, -c.altitude * b.s);
        ref.velocity = Vec3(0.0, 0.0, -c.altitude * b.ds);
        ref.acceleration = Vec3(0.0, 0.0, -c.altitude * b.dds);
        return ref;
    }
    const double elapsed = t - c.climb_time;
    if (elapsed >= c.lap_time) {
        ref.position = start + Vec3(0.0, 0.0, -c.altitude);
        return ref;
    }
    const ArcState arc = lap_arc(elapsed, c);
    const double angle = arc.distance / c.radius;
    const double ca = std::cos(angle);
    const double sa = std::sin(angle);
    const Vec3 radial(ca, sa, 0.0);
    const Vec3 tangent(-sa, ca, 0.0);
    ref.position = c.center + c.radius * radial + Vec3(0.0, 0.0, -c.altitude);
    ref.velocity = arc.speed * tangent;
    ref.acceleration = arc.accel * tangent - (arc.speed * arc.speed / c.radius) * radial;
    return ref;
}

}  // namespace

void WaypointSchedule::validate() const
{
    if (waypoints.empty()) {
        throw std::invalid_argument("waypoint schedule is empty");
    }
    if (waypoints.front().activation != 0.0) {
        throw std::invalid_argument("first waypoint must activate at t = 0");
    }
    for (std::size_t i = 0; i < waypoints.size(); ++i) {
        const Waypoint& w = waypoints[i];
        if (!w.position.allFinite() || !std::isfinite(w.yaw) || !(w.transit >= 0.0)) {
            throw std::invalid_argument("waypoint has non-finite fields or negative transit");
        }
        if (i > 0 && !(w.activation > waypoints[i - 1].activation)) {
            throw std::invalid_argument("waypoint activation times must be strictly increasing");
        }
        if (i + 1 < waypoints.size() && w.activation + w.transit > waypoints[i + 1].activation) {
            throw std::invalid_argument("waypoint legs overlap");
        }
    }
    const Waypoint& last = waypoints.back();
    if (!(duration >= last.activation + last.transit)) {
        throw std::invalid_argument("schedule ends before the last waypoint is reached");
    }
}

double CircularPath::cruise_speed() const
{
    return 2.0 * kPi * radius / (lap_time - ramp_time);
}

void CircularPath::validate() const
{
    if (!(radius > 0.0) || !(duration > 0.0) || !(altitude >= 0.0)) {
        throw std::invalid_argument("circle needs radius > 0, duration > 0, altitude >= 0");
    }
    if (!(climb_time > 0.0) || !(lap_time > 0.0) || !(ramp_time >= 0.0) || 2.0 * ramp_time > lap_time) {
        throw std::invalid_argument("circle phase timing is inconsistent");
    }
    if (climb_time + lap_time > duration) {
        throw std::invalid_argument("circle duration shorter than climb plus lap");
    }
}

WaypointSchedule rectangular_schedule()
{
    WaypointSchedule s;
    s.duration = 70.0;
    s.waypoints = {
        {0.0, {0.0, 0.0, -5.0}, 0.0, 0.0, std::nullopt},
        {10.0, {0.0, -5.0, -5.0}, 0.0, 9.0, 20.0},
        {20.0, {20.0, -5.0, -5.0}, 0.0, 9.0, 30.0},
        {30.0, {20.0, 5.0, -5.0}, 0.0, 9.0, 40.0},
        {40.0, {0.0, 5.0, -5.0}, 0.0, 9.0, 50.0},
        {50.0, {0.0, 0.0, -5.0}, 0.0, 9.0, 60.0},
        {60.0, {0.0, 0.0, 0.0}, 0.0, 4.0, 65.0},
    };
    return s;
}

CircularPath circular_schedule(double radius, double altitude, double duration)
{
    CircularPath c;
    c.radius = radius;
    c.altitude = altitude;
    c.duration = duration;
    c.validate();
    return c;
}

ReferenceSample reference_at(double t, const Trajectory& traj)
{
    if (!(t >= 0.0)) {
        throw std::invalid_argument("reference_at: t must be non-negative");
    }
    return std::visit(
        [t](const auto& path) -> ReferenceSample {
            using T = std::decay_t<decltype(path)>;
            if constexpr (std::is_same_v<T, WaypointSchedule>) {
                return sample_schedule(t, path);
            } else {
                return sample_circle(t, path);
            }
        },
        traj);
}

double duration_of(const Trajectory& traj)
{
    return std::visit([](const auto& path) { return path.duration; }, traj);
}

std::vector<double> evaluation_times(const Trajectory& traj)
{
    std::vector<double> times;
    if (const auto* schedule = std::get_if<WaypointSchedule>(&traj)) {
        for (const Waypoint& w : schedule->waypoints) {
            if (w.evaluation) {
                times.push_back(*w.evaluation);
            }
        }
        return times;
    }
    const auto& c = std::get<CircularPath>(traj);
    times.push_back(c.climb_time);
    for (int quarter = 1; quarter <= 4; ++quarter) {
        times.push_back(c.climb_time + 0.25 * quarter * c.lap_time);
    }
    times.push_back(c.duration);
    return times;
}

const Waypoint& active_waypoint(double t, const WaypointSchedule& schedule)
{
    const Waypoint* active = &schedule.waypoints.front();
    for (const Waypoint& w : schedule.waypoints) {
        if (w.activation <= t) {
            active = &w;
        }
    }
    return *active;
}

}  // namespace tailsitter
