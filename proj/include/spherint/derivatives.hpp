#pragma once

#include <optional>

#include "spherint/curve.hpp"
#include "spherint/knots.hpp"
#include "spherint/quat.hpp"

namespace spherint {

/// Quaternion-valued time derivatives of a curve at one parameter.
struct DerivativeBundle {
    Quaternion d1{};
    Quaternion d2{};
    std::optional<Quaternion> d3;
    bool one_sided = false; ///< a boundary forced one-sided stencils
};

enum class FdSide { centered, left, right };

/// Finite-difference derivatives of the curve at t, up to `order` (1..3),
/// using second-order stencils of step h.  Centered stencils fall back to
/// one-sided ones near the domain ends (one_sided flag set); if even the
/// one-sided stencil does not fit, DomainError is raised.
DerivativeBundle fd_derivatives(const CurveSegment& curve, double t, int order, double h,
                                FdSide side = FdSide::centered);

/// d/dt SLERP(qa, qb, f(t)) = SLERP(qa, qb, f(t)) ln(qa^{-1} qb) f'(t),
/// evaluated at f_t = f(t) with df = f'(t).
Quaternion slerp_derivative(const Quaternion& qa, const Quaternion& qb, double f_t, double df);

/// Closed-form first and second time derivatives for SLERP, SQUAD, SIDER2
/// and SIDER3 curves over the given knots (d3 is finite-difference-only and
/// left empty).  For the piecewise methods t must be interior to one
/// interval.  Other methods raise UnsupportedMethodError.
DerivativeBundle analytic_derivatives(Method method, const KnotSequence& knots, double t);

struct AngularKinematics {
    Vec3 omega{}; ///< rad / unit t
    Vec3 alpha{}; ///< rad / unit t^2
    Vec3 zeta{};  ///< rad / unit t^3
};

/// Angular velocity, acceleration and jerk of the pure-quaternion curve q(t):
///   omega = vec(2 q' q^{-1})
///   alpha = vec((2 q'' - omega q') q^{-1})
///   zeta  = vec((2 q''' - 2 alpha q' - omega q'') q^{-1})
/// with omega/alpha embedded as pure quaternions and all products Hamilton
/// products.  Derivatives come from fd_derivatives at step h.
AngularKinematics angular_kinematics(const CurveSegment& curve, double t, double h);

} // namespace spherint
