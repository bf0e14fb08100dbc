#pragma once

#include <cstdint>
#include <utility>

#include "spherint/curve.hpp"
#include "spherint/knots.hpp"
#include "spherint/quat.hpp"

namespace spherint {

/// Number of SLERP evaluations performed on this thread so far.
std::uint64_t slerp_call_count() noexcept;

/// SLERP(qa, qb, t) = qa (qa^{-1} qb)^t for unit quaternions, evaluated in
/// the equivalent sine form (sin((1-t)w) qa + sin(tw) qb)/sin(w) where w is
/// the 4D angle between qa and qb.  The parameter is unrestricted: values
/// outside [0, 1] extrapolate along the same great circle.
///
/// Raises AntipodalPointsError when w >= pi - 1e-9.  For w < 1e-8 the
/// endpoints are numerically parallel and a normalized linear blend is
/// returned instead.
Quaternion slerp(const Quaternion& qa, const Quaternion& qb, double t);

/// Sphere-point overload; operates on the pure quaternions (0, p).
SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double t);

/// Test support: whether SLERP(-qa, -qb, t) == -SLERP(qa, qb, t) within tol.
bool slerp_negation_check(const Quaternion& qa, const Quaternion& qb, double t,
                          double tol = 1e-12);

/// Piecewise geodesic interpolant through the knots; 1 SLERP per evaluation.
CurveSegment piecewise_slerp(const KnotSequence& knots);

/// SQUAD control points
///   s_i     = q_i     exp[-1/4 (ln(q_i^{-1} q_{i+1})     + ln(q_i^{-1} q_{i-1}))]
///   s_{i+1} = q_{i+1} exp[-1/4 (ln(q_{i+1}^{-1} q_{i+2}) + ln(q_{i+1}^{-1} q_i))]
/// At sequence boundaries pass q_{i-1} = q_i (or q_{i+2} = q_{i+1}).
std::pair<Quaternion, Quaternion> squad_controls(const Quaternion& q_im1, const Quaternion& q_i,
                                                 const Quaternion& q_ip1, const Quaternion& q_ip2);

/// SQUAD(q_{i-1}, q_i, q_{i+1}, q_{i+2}, t)
///   = SLERP(SLERP(q_i, q_{i+1}, t), SLERP(s_i, s_{i+1}, t), 2t(1-t)).
/// Exactly 3 SLERP calls.  The result is renormalized; a scalar part above
/// 1e-9 raises ImpurityError.
Quaternion squad(const Quaternion& q_im1, const Quaternion& q_i, const Quaternion& q_ip1,
                 const Quaternion& q_ip2, double t);

/// Piecewise SQUAD over a knot sequence.  Every interval (i, i+1) uses the
/// neighbors q_{i-1} and q_{i+2} for its control points; missing neighbors
/// at the ends are replaced by the interval endpoints.  3 SLERPs per
/// evaluation (controls are precomputed per interval).
CurveSegment squad_curve(const KnotSequence& knots);

} // namespace spherint
