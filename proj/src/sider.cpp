#include "spherint/sider.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <string>

#include "spherint/geodesic.hpp"

namespace spherint {

namespace {

// Geodesic doubling: the point at twice the angle from p through q; equals
// SLERP(p, q, 2) and stays exactly unit for unit inputs.
Vec3 double_past(const Vec3& p, const Vec3& q) { return 2.0 * dot(p, q) * q - p; }

Quaternion double_past(const Quaternion& qp, const Quaternion& qq) {
    return {0.0, double_past(qp.v, qq.v)};
}

} // namespace

SiderControls2 sider2_controls(const SpherePoint& p1, const SpherePoint& p2,
                               const SpherePoint& p3) {
    KnotSequence triple({p1, p2, p3}, 0.0, 0.5);
    const KnotSequence canon = canonicalize_signs(triple).knots;
    const Vec3 a = canon.point(0).vec();
    const Vec3 b = canon.point(1).vec();
    const Vec3 c = canon.point(2).vec();
    if (geodesic_angle(a, b) + geodesic_angle(b, c) == 0.0)
        throw Error("sider2 needs at least two distinct points");
    return {SpherePoint::from_unit(double_past(c, b)), SpherePoint::from_unit(double_past(a, b))};
}

Quaternion sider2(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3, double t) {
    const Quaternion d2a = double_past(q3, q2);
    const Quaternion d2b = double_past(q1, q2);
    return slerp(slerp(q1, d2a, t), slerp(d2b, q3, t), t);
}

Quaternion sider3(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3,
                  const Quaternion& q4, double t) {
    const double g = 1.5 * t;
    const double h = 1.5 * t - 0.5;
    return slerp(sider2(q1, q2, q3, g), sider2(q2, q3, q4, h), t);
}

Quaternion sider_n(std::span<const Quaternion> points, double t, int max_order) {
    const int n = static_cast<int>(points.size()) - 1;
    if (n < 2) throw Error("sider needs at least three points");
    if (n > max_order)
        throw RecursionDepthError("sider order " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(max_order));
    if (n == 2) return sider2(points[0], points[1], points[2], t);
    const double g = static_cast<double>(n) * t / static_cast<double>(n - 1);
    const double h = g - 1.0 / static_cast<double>(n - 1);
    return slerp(sider_n(points.first(points.size() - 1), g, max_order),
                 sider_n(points.subspan(1), h, max_order), t);
}

CurveSegment sider_curve(const KnotSequence& raw, int order) {
    if (order < 2 || order > 4) throw Error("sider_curve supports orders 2, 3 and 4");
    if (static_cast<int>(raw.size()) != order + 1)
        throw WindowSizeError("sider" + std::to_string(order) + " needs exactly " +
                              std::to_string(order + 1) + " knots, got " +
                              std::to_string(raw.size()));
    const KnotSequence knots = canonicalize_signs(raw).knots;
    auto pts = std::make_shared<std::vector<Quaternion>>();
    pts->reserve(knots.size());
    for (const SpherePoint& p : knots.points()) pts->push_back(to_pure(p));

    const double t0 = knots.t0();
    const double span = knots.t_end() - t0;
    auto eval = [pts, t0, span](double t) {
        const double u = (t - t0) / span;
        return pure_to_point(sider_n(*pts, u));
    };
    const Method tag = order == 2 ? Method::sider2 : (order == 3 ? Method::sider3 : Method::sider4);
    return CurveSegment(knots.t0(), knots.t_end(), tag, (1 << order) - 1, eval);
}

namespace {

// Smallest eigenvalue of the symmetric 3x3 second-moment matrix sum p p^T;
// zero iff all points lie in one plane through the origin.
double min_eigenvalue_sym3(const std::array<double, 6>& m) {
    // m = (xx, xy, xz, yy, yz, zz); closed-form symmetric eigensolve.
    const double xx = m[0], xy = m[1], xz = m[2], yy = m[3], yz = m[4], zz = m[5];
    const double q = (xx + yy + zz) / 3.0;
    const double p1 = xy * xy + xz * xz + yz * yz;
    const double p2 = (xx - q) * (xx - q) + (yy - q) * (yy - q) + (zz - q) * (zz - q) + 2.0 * p1;
    if (p2 <= 0.0) return q;
    const double p = std::sqrt(p2 / 6.0);
    // determinant of (M - q I) / p
    const double bxx = (xx - q) / p, byy = (yy - q) / p, bzz = (zz - q) / p;
    const double bxy = xy / p, bxz = xz / p, byz = yz / p;
    const double detb = bxx * (byy * bzz - byz * byz) - bxy * (bxy * bzz - byz * bxz) +
                        bxz * (bxy * byz - byy * bxz);
    double r = detb / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    // eigenvalues q + 2p cos(phi + 2k pi / 3); the k = 2 branch is smallest
    return q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
}

bool coplanar_with_origin(const std::vector<SpherePoint>& pts) {
    const std::size_t n = pts.size();
    if (n < 3) return true;
    if (n <= 300) {
        // exhaustive triple-product scan with early exit on a witness
        for (std::size_t i = 0; i + 2 < n; ++i)
            for (std::size_t j = i + 1; j + 1 < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (std::abs(triple(pts[i].vec(), pts[j].vec(), pts[k].vec())) > 1e-9)
                        return false;
        return true;
    }
    // mean second-moment matrix; its smallest eigenvalue is the mean squared
    // distance of the points from the best-fit plane through the origin
    std::array<double, 6> m{};
    for (const SpherePoint& p : pts) {
        const Vec3& v = p.vec();
        m[0] += v.x * v.x;
        m[1] += v.x * v.y;
        m[2] += v.x * v.z;
        m[3] += v.y * v.y;
        m[4] += v.y * v.z;
        m[5] += v.z * v.z;
    }
    for (double& e : m) e /= static_cast<double>(n);
    return min_eigenvalue_sym3(m) <= 1e-12;
}

} // namespace

ValidationReport validate_knots(const KnotSequence& knots) {
    ValidationReport report;
    report.pairs.reserve(knots.size() - 1);
    Vec3 prev = knots.point(0).vec();
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        Vec3 next = knots.point(i + 1).vec();
        const double d = dot(prev, next);
        PairReport pr{};
        pr.index = i;
        pr.ambiguous = std::abs(d) <= 1e-9;
        pr.flipped = !pr.ambiguous && d < 0.0;
        if (pr.flipped) next = -next;
        pr.angle = geodesic_angle(prev, next);
        pr.control_angle = 2.0 * pr.angle;
        pr.control_spread = pr.control_angle > M_PI / 2.0;
        report.pairs.push_back(pr);
        prev = next;
    }
    report.great_circle_warning = coplanar_with_origin(knots.points());
    return report;
}

} // namespace spherint
