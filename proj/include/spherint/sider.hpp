#pragma once

#include <span>
#include <vector>

#include "spherint/curve.hpp"
#include "spherint/knots.hpp"
#include "spherint/quat.hpp"

namespace spherint {

/// Control points of a SIDER2 segment: geodesic doublings of the middle
/// knot past the outer knots,
///   c_2a = SLERP(q3, q2, 2)  and  c_2b = SLERP(q1, q2, 2).
struct SiderControls2 {
    SpherePoint c2a;
    SpherePoint c2b;
};

/// Computes the SIDER2 control points after applying the canonical sign
/// flips to (p1, p2, p3).  Doubling a geodesic is the reflection
/// 2 (p . q) q - p, which equals SLERP(p, q, 2) exactly.
SiderControls2 sider2_controls(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3);

/// SIDER2(q1, q2, q3, t) = SLERP(SLERP(q1, d2a, t), SLERP(d2b, q3, t), t).
/// Passes through q1, q2, q3 at t = 0, 1/2, 1.  Inputs must be pure unit
/// quaternions in canonical sign form (adjacent angles below pi/2).
/// Exactly 3 SLERP calls; t is unrestricted.
Quaternion sider2(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3, double t);

/// SIDER3(q1..q4, t) = SLERP(SIDER2(q1,q2,q3, 3t/2), SIDER2(q2,q3,q4, (3t-1)/2), t).
/// Passes through the knots at t = 0, 1/3, 2/3, 1.  7 SLERP calls.
Quaternion sider3(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3,
                  const Quaternion& q4, double t);

/// SIDER-n over n+1 knots (n = points.size() - 1):
///   SLERP(SIDER_{n-1}(first n, g_n(t)), SIDER_{n-1}(last n, h_n(t)), t)
/// with g_n(t) = n t/(n-1) and h_n(t) = g_n(t) - 1/(n-1); base case n = 2.
/// Interpolates knot i at t = i/n.  2^n - 1 SLERP calls.  Orders above
/// max_order raise RecursionDepthError.
Quaternion sider_n(std::span<const Quaternion> points, double t, int max_order = 8);

/// Single-window SIDER curve over the whole knot span; order must be
/// knots.size() - 1 and one of 2, 3, 4.  Applies canonical sign flips.
CurveSegment sider_curve(const KnotSequence& knots, int order);

struct PairReport {
    std::size_t index;        ///< pair (index, index + 1)
    double angle;             ///< geodesic angle after any flip
    bool flipped;             ///< second point replaced by its antipode
    bool ambiguous;           ///< |angle - pi/2| <= 1e-9 before flipping
    double control_angle;     ///< 2 * angle: spread of the doubled control point
    bool control_spread;      ///< control_angle > pi/2
};

struct ValidationReport {
    std::vector<PairReport> pairs;
    bool great_circle_warning = false;

    bool any_ambiguous() const {
        for (const auto& p : pairs)
            if (p.ambiguous) return true;
        return false;
    }
    bool any_flipped() const {
        for (const auto& p : pairs)
            if (p.flipped) return true;
        return false;
    }
    bool any_control_spread() const {
        for (const auto& p : pairs)
            if (p.control_spread) return true;
        return false;
    }
};

/// Reports, per adjacent pair, the geodesic angle, whether the canonical
/// sign flip applies, and whether the pair is ambiguous (exactly 90 deg
/// apart).  Also flags datasets lying on a single great circle.  Never
/// throws; callers decide severity.
ValidationReport validate_knots(const KnotSequence& knots);

} // namespace spherint
