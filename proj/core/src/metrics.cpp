#include "tailsitter/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tailsitter {

std::size_t SimLog::index_near(double t) const
{
    if (rows.empty()) {
        throw std::invalid_argument("index_near on an empty log");
    }
    const double raw = std::round((t - rows.front().t) / sample_interval);
    const auto clamped = std::clamp(raw, 0.0, static_cast<double>(rows.size() - 1));
    return static_cast<std::size_t>(clamped);
}

TrackingMetrics compute_metrics(const SimLog& log, const Trajectory& traj)
{
    if (log.empty()) {
        throw std::invalid_argument("cannot compute metrics of an empty log");
    }
    const auto n = static_cast<double>(log.rows.size());

    Vec3 abs_sum = Vec3::Zero();
    Vec3 sq_sum = Vec3::Zero();
    Vec3 overshoot = Vec3::Zero();
    Vec3 approach = Vec3::Zero();  // sign of the last reference motion per axis
    double yaw_dev = 0.0;

    for (std::size_t i = 0; i < log.rows.size(); ++i) {
        const LogRow& row = log.rows[i];
        const Vec3 e = row.reference - row.position;
        abs_sum += e.cwiseAbs();
        sq_sum += e.cwiseProduct(e);

        if (i > 0) {
            const Vec3 motion = row.reference - log.rows[i - 1].reference;
            for (int k = 0; k < 3; ++k) {
                if (motion[k] != 0.0) {
                    approach[k] = motion[k] > 0.0 ? 1.0 : -1.0;
                }
            }
        }
        // past the reference along the approach direction means e has the opposite sign
        overshoot = overshoot.cwiseMax(-e.cwiseProduct(approach));

        const double yaw_ref = reference_at(std::max(row.t, 0.0), traj).yaw;
        yaw_dev = std::max(yaw_dev, std::abs(normalize_angle(deg2rad(row.euler_deg.z()) - yaw_ref)));
    }

    const Vec3 final_error = log.rows.back().reference - log.rows.back().position;
    TrackingMetrics m;
    for (int k = 0; k < 3; ++k) {
        AxisMetrics& a = m.axis[static_cast<std::size_t>(k)];
        a.mae = abs_sum[k] / n;
        a.rmse = std::sqrt(sq_sum[k] / n);
        a.iae = abs_sum[k] * log.sample_interval;
        a.max_overshoot = overshoot[k];
        a.final_error = final_error[k];
    }
    m.max_yaw_deviation = yaw_dev;
    return m;
}

}  // namespace tailsitter
