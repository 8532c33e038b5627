#pragma once

#include <numbers>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace tailsitter {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Euler angles of the YXZ sequence. The body-to-inertial rotation is
/// R = R_Y(theta) * R_X(phi) * R_Z(psi), so the kinematic singularity sits on
/// roll (phi = +-pi/2) and nose-up hover (theta ~ pi/2) stays regular.
struct EulerYXZ {
    double phi = 0.0;    // roll [rad]
    double theta = 0.0;  // pitch [rad]
    double psi = 0.0;    // yaw [rad]

    Vec3 as_vector() const { return {phi, theta, psi}; }
    static EulerYXZ from_vector(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
};

class SingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// |cos(phi)| below this is treated as gimbal lock.
inline constexpr double kSingularityTolerance = 1e-6;

Mat3 rotation_x(double angle);
Mat3 rotation_y(double angle);
Mat3 rotation_z(double angle);

Mat3 rotation_body_to_inertial(const EulerYXZ& e);
Mat3 rotation_inertial_to_body(const EulerYXZ& e);

/// W such that d/dt(phi, theta, psi) = W * (P, Q, R).
/// Throws SingularityError when |cos(phi)| < kSingularityTolerance.
Mat3 euler_rate_matrix(const EulerYXZ& e);

/// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

EulerYXZ normalize(const EulerYXZ& e);

}  // namespace tailsitter
