#include <gtest/gtest.h>

#include "tailsitter/trajectory.hpp"

using namespace tailsitter;

namespace {

// Central differences of position and velocity.
void expect_consistent_derivatives(const Trajectory& traj, double t)
{
    const double h = 1e-5;
    const ReferenceSample lo = reference_at(t - h, traj);
    const ReferenceSample mid = reference_at(t, traj);
    const ReferenceSample hi = reference_at(t + h, traj);
    EXPECT_LT(((hi.position - lo.position) / (2 * h) - mid.velocity).cwiseAbs().maxCoeff(), 1e-6) << "t = " << t;
    EXPECT_LT(((hi.velocity - lo.velocity) / (2 * h) - mid.acceleration).cwiseAbs().maxCoeff(), 1e-5)
        << "t = " << t;
}

}  // namespace

TEST(Rectangle, EvaluationTargets)
{
    const Trajectory traj = rectangular_schedule();
    const std::vector<double> times = evaluation_times(traj);
    ASSERT_EQ(times, (std::vector<double>{20, 30, 40, 50, 60, 65}));
    EXPECT_TRUE(reference_at(20.0, traj).position.isApprox(Vec3(0, -5, -5), 0.0));
    EXPECT_TRUE(reference_at(65.0, traj).position.isApprox(Vec3(0, 0, 0), 0.0));
    EXPECT_EQ(duration_of(traj), 70.0);
}

TEST(Rectangle, ScheduleIsValidAndMonotone)
{
    const WaypointSchedule s = rectangular_schedule();
    EXPECT_NO_THROW(s.validate());
    for (std::size_t i = 1; i < s.waypoints.size(); ++i) {
        EXPECT_GT(s.waypoints[i].activation, s.waypoints[i - 1].activation);
    }
}

TEST(Rectangle, ActiveWaypointLookup)
{
    const WaypointSchedule s = rectangular_schedule();
    EXPECT_TRUE(active_waypoint(0.0, s).position.isApprox(Vec3(0, 0, -5), 0.0));
    EXPECT_TRUE(active_waypoint(35.0, s).position.isApprox(Vec3(20, 5, -5), 0.0));
    EXPECT_TRUE(active_waypoint(30.0, s).position.isApprox(Vec3(20, 5, -5), 0.0));
    EXPECT_TRUE(active_waypoint(500.0, s).position.isApprox(Vec3(0, 0, 0), 0.0));
    EXPECT_TRUE(reference_at(500.0, Trajectory(s)).position.isApprox(Vec3(0, 0, 0), 0.0));
}

TEST(Rectangle, MinimumJerkLeg)
{
    const Trajectory traj = rectangular_schedule();
    // Leg from (0,-5,-5) to (20,-5,-5) over [20, 29] s.
    EXPECT_TRUE(reference_at(20.0, traj).velocity.isZero(0.0));
    EXPECT_NEAR(reference_at(24.5, traj).position.x(), 10.0, 1e-12);
    EXPECT_NEAR(reference_at(24.5, traj).velocity.x(), 1.875 * 20.0 / 9.0, 1e-12);
    EXPECT_TRUE(reference_at(29.0, traj).position.isApprox(Vec3(20, -5, -5), 1e-15));
    EXPECT_NEAR(reference_at(29.0, traj).velocity.norm(), 0.0, 1e-12);
    for (const double t : {11.0, 15.3, 22.2, 27.9, 33.3, 47.0, 55.5, 61.0, 63.9}) {
        expect_consistent_derivatives(traj, t);
    }
}

TEST(Rectangle, RejectsNegativeTime)
{
    EXPECT_THROW(reference_at(-0.1, Trajectory(rectangular_schedule())), std::invalid_argument);
}

TEST(Schedule, ValidationCatchesMistakes)
{
    WaypointSchedule s = rectangular_schedule();
    s.waypoints[3].activation = s.waypoints[2].activation;
    EXPECT_THROW(s.validate(), std::invalid_argument);

    s = rectangular_schedule();
    s.waypoints[0].activation = 1.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);

    s = rectangular_schedule();
    s.waypoints[2].transit = 15.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);

    s = rectangular_schedule();
    s.duration = 62.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);

    EXPECT_THROW(WaypointSchedule{}.validate(), std::invalid_argument);
}

TEST(Circle, Phases)
{
    const CircularPath c = circular_schedule();
    const Trajectory traj = c;
    EXPECT_TRUE(reference_at(0.0, traj).position.isApprox(Vec3(2, 0, 0), 0.0));
    EXPECT_TRUE(reference_at(5.0, traj).position.isApprox(Vec3(2, 0, -1), 1e-15));
    EXPECT_NEAR(reference_at(45.0, traj).position.x(), 2.0, 1e-12);
    EXPECT_NEAR(reference_at(45.0, traj).position.y(), 0.0, 1e-12);
    EXPECT_TRUE(reference_at(55.0, traj).velocity.isZero(1e-15));
    EXPECT_EQ(evaluation_times(traj), (std::vector<double>{5, 15, 25, 35, 45, 55}));
    EXPECT_EQ(duration_of(traj), 55.0);
}

TEST(Circle, LapStaysOnCircleAtAltitude)
{
    const Trajectory traj = circular_schedule();
    for (double t = 5.0; t <= 45.0; t += 0.25) {
        const ReferenceSample r = reference_at(t, traj);
        EXPECT_NEAR(r.position.z(), -1.0, 1e-15);
        EXPECT_NEAR(r.position.head<2>().norm(), 2.0, 1e-12);
    }
}

TEST(Circle, Speeds)
{
    const CircularPath c = circular_schedule();
    EXPECT_NEAR(c.cruise_speed(), 2.0 * kPi * 2.0 / 38.0, 1e-15);
    EXPECT_NEAR(reference_at(25.0, Trajectory(c)).velocity.norm(), c.cruise_speed(), 1e-12);

    // The lap covers the circumference in 40 s: mean speed 2 pi R / 40 ~ 0.314 m/s.
    const Trajectory traj = c;
    double arc = 0.0;
    const double h = 1e-3;
    for (double t = 5.0; t < 45.0 - 0.5 * h; t += h) {
        arc += reference_at(t + 0.5 * h, traj).velocity.norm() * h;
    }
    EXPECT_NEAR(arc / 40.0, 0.3141592653589793, 1e-6);
}

TEST(Circle, TurnsFromNorthTowardsEast)
{
    const Trajectory traj = circular_schedule();
    EXPECT_GT(reference_at(15.0, traj).position.y(), 0.0);
}

TEST(Circle, SmoothDerivatives)
{
    const Trajectory traj = circular_schedule();
    for (const double t : {1.0, 2.5, 4.0, 5.5, 6.0, 6.9, 20.0, 43.5, 44.7, 50.0}) {
        expect_consistent_derivatives(traj, t);
    }
}

TEST(Circle, Validation)
{
    CircularPath c = circular_schedule();
    c.duration = 30.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = circular_schedule();
    c.radius = 0.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = circular_schedule();
    c.ramp_time = 25.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}
