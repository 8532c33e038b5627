#include "tailsitter/frames.hpp"

#include <cmath>

namespace tailsitter {

Mat3 rotation_x(double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat3 r;
    r << 1.0, 0.0, 0.0,
         0.0, c, -s,
         0.0, s, c;
    return r;
}

Mat3 rotation_y(double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat3 r;
    r << c, 0.0, s,
         0.0, 1.0, 0.0,
         -s, 0.0, c;
    return r;
}

Mat3 rotation_z(double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat3 r;
    r << c, -s, 0.0,
         s, c, 0.0,
         0.0, 0.0, 1.0;
    return r;
}

Mat3 rotation_body_to_inertial(const EulerYXZ& e)
{
    return rotation_y(e.theta) * rotation_x(e.phi) * rotation_z(e.psi);
}

Mat3 rotation_inertial_to_body(const EulerYXZ& e)
{
    return rotation_body_to_inertial(e).transpose();
}

// Body rates of the YXZ sequence:
//   P = cpsi*phidot + spsi*cphi*thetadot
//   Q = -spsi*phidot + cpsi*cphi*thetadot
//   R = psidot - sphi*thetadot
// Inverted below; the result does not depend on theta.
Mat3 euler_rate_matrix(const EulerYXZ& e)
{
    const double cphi = std::cos(e.phi);
    if (std::abs(cphi) < kSingularityTolerance) {
        throw SingularityError("Euler rate matrix singular at roll = +-90 deg");
    }
    const double tphi = std::sin(e.phi) / cphi;
    const double cpsi = std::cos(e.psi);
    const double spsi = std::sin(e.psi);

    Mat3 w;
    w << cpsi, -spsi, 0.0,
         spsi / cphi, cpsi / cphi, 0.0,
         tphi * spsi, tphi * cpsi, 1.0;
    return w;
}

double normalize_angle(double angle)
{
    // remainder() is exact and lands in [-pi, pi]
    double r = std::remainder(angle, 2.0 * kPi);
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

EulerYXZ normalize(const EulerYXZ& e)
{
    return {normalize_angle(e.phi), normalize_angle(e.theta), normalize_angle(e.psi)};
}

}  // namespace tailsitter
