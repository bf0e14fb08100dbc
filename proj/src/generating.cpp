#include "spherint/generating.hpp"

#include <cmath>
#include <vector>

namespace spherint {

double generating_z(const GeneratingCurve& curve, double t) {
    const double f = std::exp(-t * t / (2.0 * curve.sigma * curve.sigma)) * std::sin(2.0 * M_PI * t);
    return curve.kind == GeneratingCurve::Kind::kinked ? std::abs(f) : f;
}

Vec3 generating_point_r3(const GeneratingCurve& curve, double t) {
    return {1.0, t, generating_z(curve, t)};
}

SpherePoint generating_projected(const GeneratingCurve& curve, double t) {
    return SpherePoint::project(generating_point_r3(curve, t));
}

KnotSequence synthesize_knots(const GeneratingCurve& curve, int inv_dt, int pad) {
    if (inv_dt < 2) throw Error("need at least two grid intervals");
    if (pad < 0) throw Error("grid padding cannot be negative");
    const double dt = 1.0 / static_cast<double>(inv_dt);
    std::vector<SpherePoint> points;
    points.reserve(static_cast<std::size_t>(inv_dt + 2 * pad) + 1);
    for (int i = -pad; i <= inv_dt + pad; ++i)
        points.push_back(generating_projected(curve, GeneratingCurve::t_min + i * dt));
    return KnotSequence(std::move(points), GeneratingCurve::t_min - pad * dt, dt);
}

} // namespace spherint
