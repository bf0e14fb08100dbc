#pragma once

#include "spherint/knots.hpp"
#include "spherint/quat.hpp"

namespace spherint {

/// Synthetic generating curve on the plane x = 1, projected onto the sphere:
///   y(t) = t,  z(t) = f(t) = exp(-t^2 / (2 sigma^2)) sin(2 pi t)
/// over t in [-0.5, 0.5].  The kinked variant uses z(t) = |f(t)|, which is
/// continuous but not differentiable at t = 0.
struct GeneratingCurve {
    enum class Kind { smooth, kinked };
    Kind kind = Kind::smooth;
    double sigma = 0.1;

    static constexpr double t_min = -0.5;
    static constexpr double t_max = 0.5;
};

/// z-component before projection.
double generating_z(const GeneratingCurve& curve, double t);

/// The R^3 point (1, t, z(t)).
Vec3 generating_point_r3(const GeneratingCurve& curve, double t);

/// Exact normalized projection of the generating curve onto the sphere.
SpherePoint generating_projected(const GeneratingCurve& curve, double t);

/// Samples the generating curve on the uniform grid of spacing 1/inv_dt
/// over [-0.5, 0.5] (inv_dt + 1 knots) and projects onto the sphere.
/// `pad` extra samples per side extend the grid beyond the ends, giving
/// window-based methods real neighbor data on the boundary intervals.
KnotSequence synthesize_knots(const GeneratingCurve& curve, int inv_dt, int pad = 0);

} // namespace spherint
