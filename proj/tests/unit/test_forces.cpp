#include <gtest/gtest.h>

#include "tailsitter/forces.hpp"

using namespace tailsitter;

namespace {

const VehicleParams kParams;

ActuatorCommand thrusts(double left, double right, double flap_left = 0.0, double flap_right = 0.0)
{
    return {left, right, flap_left, flap_right};
}

}  // namespace

TEST(SideForce, Gain)
{
    EXPECT_NEAR(side_force_gain(kParams), 1.9514564941940523, 1e-12);
    VehicleParams off = kParams;
    off.side_force_coefficient = 0.0;
    EXPECT_EQ(side_force_gain(off), 0.0);
    VehicleParams twice = kParams;
    twice.side_force_coefficient = 2.0;
    EXPECT_DOUBLE_EQ(side_force_gain(twice), 2.0 * side_force_gain(kParams));
}

TEST(ThrustForce, Values)
{
    const Vec3 even = thrust_force(thrusts(5.278, 5.278), kParams);
    EXPECT_DOUBLE_EQ(even.x(), 10.556);
    EXPECT_EQ(even.y(), 0.0);
    EXPECT_EQ(even.z(), 0.0);

    const Vec3 split = thrust_force(thrusts(7.0, 5.0), kParams);
    EXPECT_DOUBLE_EQ(split.x(), 12.0);
    EXPECT_NEAR(split.y(), 3.9029129883881047, 1e-12);

    const Vec3 swapped = thrust_force(thrusts(5.0, 7.0), kParams);
    EXPECT_EQ(swapped.x(), split.x());
    EXPECT_EQ(swapped.y(), -split.y());
}

TEST(GravityForce, Values)
{
    const Vec3 level = gravity_force_body({0, 0, 0}, kParams);
    EXPECT_TRUE(level.isApprox(Vec3(0, 0, 10.55556), 1e-15));
    const Vec3 hover = gravity_force_body({0, kPi / 2, 0}, kParams);
    EXPECT_NEAR(hover.x(), -10.55556, 1e-12);
    EXPECT_NEAR(hover.y(), 0.0, 1e-12);
    EXPECT_NEAR(hover.z(), 0.0, 1e-12);
    EXPECT_NEAR(gravity_force_body({0.4, -2.0, 1.3}, kParams).norm(), kParams.weight(), 1e-12);
}

TEST(AeroForce, ResolvesLiftAndDrag)
{
    EXPECT_TRUE(aero_force(0.1, 0.0, kParams, {}).isZero(0.0));

    // At alpha = 0 lift acts along -z and drag along -x.
    const double pd = 100.0;
    const double cl0 = kParams.cl0;
    const Vec3 level = aero_force(0.0, pd, kParams, {});
    EXPECT_NEAR(level.x(), -pd * kParams.wing_area * drag_coefficient(cl0, kParams), 1e-12);
    EXPECT_NEAR(level.z(), -pd * kParams.wing_area * cl0, 1e-12);
    EXPECT_EQ(level.y(), 0.0);

    // At alpha = 0.2: L = 5.576886 N, D = 0.752790 N.
    const Vec3 f = aero_force(0.2, pd, kParams, {});
    const double lift = 100.0 * 0.0882 * (-0.2477 + 4.4 * 0.2);
    const double drag = 100.0 * 0.0882 * (0.05 + std::pow(-0.2477 + 4.4 * 0.2, 2) / (kPi * 0.8 * 4.5));
    EXPECT_NEAR(f.x(), lift * std::sin(0.2) - drag * std::cos(0.2), 1e-12);
    EXPECT_NEAR(f.z(), -lift * std::cos(0.2) - drag * std::sin(0.2), 1e-12);
    EXPECT_EQ(f.y(), 0.0);
}

TEST(FlapForce, Values)
{
    EXPECT_TRUE(flap_force(257.4, {}, kParams).isZero(0.0));
    const Vec3 f = flap_force(257.4, thrusts(0, 0, 0.1, 0.1), kParams);
    EXPECT_EQ(f.x(), 0.0);
    EXPECT_EQ(f.y(), 0.0);
    EXPECT_NEAR(f.z(), 0.7722, 1e-12);
    EXPECT_NEAR(flap_force(257.4, thrusts(0, 0, 0.1, -0.1), kParams).z(), 0.0, 1e-15);
}

TEST(ThrustMoment, Values)
{
    const Vec3 even = thrust_moment(thrusts(5.0, 5.0), kParams);
    EXPECT_EQ(even.x(), 0.0);
    EXPECT_EQ(even.z(), 0.0);
    const Vec3 split = thrust_moment(thrusts(7.0, 5.0), kParams);
    EXPECT_NEAR(split.z(), 0.336, 1e-15);
    EXPECT_NEAR(split.x(), -2.0 * kParams.torque_per_thrust(), 1e-15);
    EXPECT_DOUBLE_EQ(thrust_moment(thrusts(14.0, 12.0), kParams).z(), split.z());
}

TEST(AeroMoment, Values)
{
    EXPECT_TRUE(aero_moment(0.0, 0.0, 0.0, {}, kParams).isZero(0.0));
    // alpha = 0 with C_M0 only, no lift offset term.
    EXPECT_NEAR(aero_moment(0.0, 257.4, 0.0, {}, kParams).y(), -0.1239566328, 1e-12);
    // Offset term alone.
    EXPECT_NEAR(aero_moment(0.0, 0.0, -1.0, {}, kParams).y(), -0.004, 1e-15);
}

TEST(FlapMoment, Values)
{
    EXPECT_EQ(flap_moment(257.4, thrusts(0, 0, 0.2, 0.2), kParams).x(), 0.0);
    const Vec3 m = flap_moment(257.4, thrusts(0, 0, 0.05, -0.05), kParams);
    EXPECT_NEAR(m.x(), 0.243243, 1e-12);
    EXPECT_EQ(m.z(), 0.0);

    // Pitch term is flap force times c_bar * C_Mdelta / C_Ldelta.
    const ActuatorCommand sym = thrusts(0, 0, 0.12, 0.04);
    const double expected =
        flap_force(210.0, sym, kParams).z() * kParams.mean_chord * kParams.cm_delta / kParams.cl_delta;
    EXPECT_NEAR(flap_moment(210.0, sym, kParams).y(), expected, 1e-14);
}

TEST(TotalWrench, ZeroCommandIsGravityOnly)
{
    RigidBodyState s;
    s.attitude = {0.2, 1.0, -0.4};
    VehicleParams p = kParams;
    const BodyWrench w = total_wrench(s, {}, p);
    // At rest the wing sees no airspeed; the flaps are neutral.
    EXPECT_TRUE(w.force.isApprox(gravity_force_body(s.attitude, p), 1e-14));
    EXPECT_TRUE(w.moment.isZero(1e-14));
}

TEST(TotalWrench, SideForceOnlyFromDifferentialThrust)
{
    RigidBodyState s;
    s.attitude = {0.0, kPi / 2, 0.0};
    s.velocity = {1.0, 0.0, 2.0};
    const BodyWrench even = total_wrench(s, thrusts(5.3, 5.3, 0.1, -0.05), kParams);
    EXPECT_NEAR(even.force.y(), gravity_force_body(s.attitude, kParams).y(), 1e-14);
    const BodyWrench split = total_wrench(s, thrusts(6.3, 4.3, 0.1, -0.05), kParams);
    EXPECT_NEAR(split.force.y() - even.force.y(), 2.0 * side_force_gain(kParams), 1e-12);
}

TEST(TotalWrench, HoverTrimNearEquilibrium)
{
    RigidBodyState s;
    s.attitude = {0.0, deg2rad(93.0), 0.0};
    // Thrust balances the nose-axis weight component; symmetric flaps balance
    // the body-z component.
    const double wx = -gravity_force_body(s.attitude, kParams).x();
    const double wz = gravity_force_body(s.attitude, kParams).z();
    const double q = dynamic_pressure(slipstream_velocity(wx, 0.0, kParams), kParams);
    const double flap = -wz / (q * kParams.flap_area * kParams.cl_delta);
    const BodyWrench w = total_wrench(s, thrusts(wx / 2, wx / 2, flap, flap), kParams);
    EXPECT_LT(std::abs(w.force.x()), 0.5);
    EXPECT_LT(std::abs(w.force.z()), 0.5);
}

TEST(TotalWrench, NonFiniteStateIsDivergence)
{
    RigidBodyState s;
    s.velocity.x() = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(total_wrench(s, thrusts(5, 5), kParams), std::exception);
}
