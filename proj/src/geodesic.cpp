#include "spherint/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

namespace spherint {

namespace {

thread_local std::uint64_t g_slerp_calls = 0;

constexpr double kParallelAngle = 1e-8;
constexpr double kAntipodalMargin = 1e-9;

// Index of the knot interval containing t, clamped to the valid range so
// evaluation at (or marginally beyond) the ends lands on the outermost piece.
std::size_t interval_index(double t, double t0, double dt, std::size_t n_points) {
    const double s = (t - t0) / dt;
    double idx = std::floor(s);
    idx = std::max(idx, 0.0);
    idx = std::min(idx, static_cast<double>(n_points - 2));
    return static_cast<std::size_t>(idx);
}

} // namespace

std::uint64_t slerp_call_count() noexcept { return g_slerp_calls; }

Quaternion slerp(const Quaternion& qa, const Quaternion& qb, double t) {
    ++g_slerp_calls;
    // 4D angle between the unit quaternions, robust over the whole range.
    const double omega = 2.0 * std::atan2(norm(qa - qb), norm(qa + qb));
    if (omega >= M_PI - kAntipodalMargin)
        throw AntipodalPointsError("slerp endpoints are (numerically) antipodal");
    if (omega < kParallelAngle)
        return normalized((1.0 - t) * qa + t * qb);
    const double s = std::sin(omega);
    return (std::sin((1.0 - t) * omega) / s) * qa + (std::sin(t * omega) / s) * qb;
}

SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double t) {
    const Quaternion q = slerp(to_pure(a), to_pure(b), t);
    return SpherePoint::project(q.v);
}

bool slerp_negation_check(const Quaternion& qa, const Quaternion& qb, double t, double tol) {
    const Quaternion lhs = slerp(-qa, -qb, t);
    const Quaternion rhs = -slerp(qa, qb, t);
    return norm(lhs - rhs) <= tol;
}

CurveSegment piecewise_slerp(const KnotSequence& raw) {
    const KnotSequence knots = canonicalize_signs(raw).knots;
    auto points = std::make_shared<std::vector<SpherePoint>>(knots.points());
    const double t0 = knots.t0();
    const double dt = knots.dt();
    auto eval = [points, t0, dt](double t) {
        const std::size_t i = interval_index(t, t0, dt, points->size());
        const double u = (t - (t0 + static_cast<double>(i) * dt)) / dt;
        return slerp((*points)[i], (*points)[i + 1], u);
    };
    return CurveSegment(knots.t0(), knots.t_end(), Method::slerp, 1, eval);
}

std::pair<Quaternion, Quaternion> squad_controls(const Quaternion& q_im1, const Quaternion& q_i,
                                                 const Quaternion& q_ip1, const Quaternion& q_ip2) {
    const Quaternion qi_inv = inverse(q_i);
    const Quaternion qip1_inv = inverse(q_ip1);
    const Quaternion s_i =
        q_i * exp_map(-0.25 * (log_map(qi_inv * q_ip1) + log_map(qi_inv * q_im1)));
    const Quaternion s_ip1 =
        q_ip1 * exp_map(-0.25 * (log_map(qip1_inv * q_ip2) + log_map(qip1_inv * q_i)));
    return {s_i, s_ip1};
}

namespace {

Quaternion squad_eval(const Quaternion& q_i, const Quaternion& q_ip1, const Quaternion& s_i,
                      const Quaternion& s_ip1, double t) {
    const Quaternion outer = slerp(slerp(q_i, q_ip1, t), slerp(s_i, s_ip1, t), 2.0 * t * (1.0 - t));
    if (std::abs(outer.w) > 1e-9)
        throw ImpurityError("squad interpolant acquired a scalar part; check input signs");
    Quaternion out = normalized(outer);
    out.w = 0.0;
    return out;
}

} // namespace

Quaternion squad(const Quaternion& q_im1, const Quaternion& q_i, const Quaternion& q_ip1,
                 const Quaternion& q_ip2, double t) {
    const auto [s_i, s_ip1] = squad_controls(q_im1, q_i, q_ip1, q_ip2);
    return squad_eval(q_i, q_ip1, s_i, s_ip1, t);
}

CurveSegment squad_curve(const KnotSequence& raw) {
    const KnotSequence knots = canonicalize_signs(raw).knots;
    const std::size_t n = knots.size();

    struct Interval {
        Quaternion q0, q1, s0, s1;
    };
    auto intervals = std::make_shared<std::vector<Interval>>();
    intervals->reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Quaternion q_im1 = to_pure(knots.point(i == 0 ? 0 : i - 1));
        const Quaternion q_i = to_pure(knots.point(i));
        const Quaternion q_ip1 = to_pure(knots.point(i + 1));
        const Quaternion q_ip2 = to_pure(knots.point(std::min(i + 2, n - 1)));
        const auto [s0, s1] = squad_controls(q_im1, q_i, q_ip1, q_ip2);
        intervals->push_back({q_i, q_ip1, s0, s1});
    }

    const double t0 = knots.t0();
    const double dt = knots.dt();
    const std::size_t n_points = n;
    auto eval = [intervals, t0, dt, n_points](double t) {
        const std::size_t i = interval_index(t, t0, dt, n_points);
        const double u = (t - (t0 + static_cast<double>(i) * dt)) / dt;
        const Interval& iv = (*intervals)[i];
        return pure_to_point(squad_eval(iv.q0, iv.q1, iv.s0, iv.s1, u));
    };
    return CurveSegment(knots.t0(), knots.t_end(), Method::squad, 3, eval);
}

} // namespace spherint
