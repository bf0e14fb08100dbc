#pragma once

#include <cmath>

#include "spherint/errors.hpp"
#include "spherint/vec3.hpp"

namespace spherint {

/// Quaternion w + b i + c j + d k stored as (scalar, 3-vector).
/// Uses the Hamilton convention ij = k, jk = i, ki = j.
struct Quaternion {
    double w = 0.0;
    Vec3 v{};
};

constexpr Quaternion quat_identity() { return {1.0, {0.0, 0.0, 0.0}}; }

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.v + b.v};
}
constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.v - b.v};
}
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.v}; }
constexpr Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.v}; }
constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

/// Hamilton product (a1,u1)(a2,u2) = (a1 a2 - u1.u2, a1 u2 + a2 u1 + u1 x u2).
constexpr Quaternion hamilton(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - dot(a.v, b.v), a.w * b.v + b.w * a.v + cross(a.v, b.v)};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return hamilton(a, b); }

constexpr double norm2(const Quaternion& q) { return q.w * q.w + norm2(q.v); }
inline double norm(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// 4-component Euclidean inner product; for pure quaternions this is the
/// ordinary dot product of the vector parts.
constexpr double dot4(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + dot(a.v, b.v);
}

constexpr Quaternion conjugate(const Quaternion& q) { return {q.w, -q.v}; }

inline bool is_unit(const Quaternion& q, double tol = 1e-12) {
    return std::abs(norm(q) - 1.0) <= tol;
}
inline bool is_pure(const Quaternion& q, double tol = 1e-12) { return std::abs(q.w) <= tol; }

inline Quaternion normalized(const Quaternion& q) {
    const double n = norm(q);
    if (n < 1e-150) throw ZeroNormError("cannot normalize a (near-)zero quaternion");
    return (1.0 / n) * q;
}

/// q^{-1} = (a, -u) / (a^2 + b^2 + c^2 + d^2).
inline Quaternion inverse(const Quaternion& q) {
    const double n2 = norm2(q);
    if (n2 < 1e-300) throw ZeroNormError("cannot invert a (near-)zero quaternion");
    return (1.0 / n2) * conjugate(q);
}

/// exp(a, u) = e^a (cos|u|, (sin|u|/|u|) u), with the sin x / x limit at u -> 0.
inline Quaternion exp_map(const Quaternion& q) {
    const double s = norm(q.v);
    const double ea = std::exp(q.w);
    // sin(s)/s evaluates exactly to 1 for subnormal s; only s == 0 needs a branch.
    const double k = (s == 0.0) ? 1.0 : std::sin(s) / s;
    return {ea * std::cos(s), (ea * k) * q.v};
}

/// ln(a, u) = (ln|q|, (arccos(a/|q|)/|u|) u).  The angle is computed as
/// atan2(|u|, a), which equals arccos(a/|q|) and stays accurate near 0 and pi.
/// For u = 0 the vector part of the result is zero.
inline Quaternion log_map(const Quaternion& q) {
    const double n = norm(q);
    if (n < 1e-150) throw ZeroNormError("log of a (near-)zero quaternion");
    const double s = norm(q.v);
    if (s == 0.0) return {std::log(n), {0.0, 0.0, 0.0}};
    const double angle = std::atan2(s, q.w);
    return {std::log(n), (angle / s) * q.v};
}

/// q^e = exp(e ln q).
inline Quaternion pow_map(const Quaternion& q, double exponent) {
    return exp_map(exponent * log_map(q));
}

/// Unit 3-vector on the sphere.  Construct via from_unit (validating) or
/// project (normalizing).
class SpherePoint {
public:
    static SpherePoint from_unit(const Vec3& v, double tol = 1e-12) {
        if (!finite(v)) throw Error("sphere point has non-finite components");
        if (std::abs(norm(v) - 1.0) > tol)
            throw Error("vector is not unit length within tolerance");
        return SpherePoint(v);
    }

    static SpherePoint project(const Vec3& v) {
        const double n = norm(v);
        if (!(n > 1e-150)) throw ZeroNormError("cannot project a (near-)zero vector onto the sphere");
        return SpherePoint(v / n);
    }

    const Vec3& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

    SpherePoint antipode() const { return SpherePoint(-v_); }

private:
    explicit SpherePoint(const Vec3& v) : v_(v) {}
    Vec3 v_{1.0, 0.0, 0.0};
};

/// Pure unit quaternion (0, p) representing a sphere point.
inline Quaternion to_pure(const SpherePoint& p) { return {0.0, p.vec()}; }

/// Recover a sphere point from a (numerically almost) pure unit quaternion.
/// The scalar part must vanish within w_tol; the vector part is renormalized
/// whenever it has drifted by more than 1e-12.
inline SpherePoint pure_to_point(const Quaternion& q, double w_tol = 1e-9) {
    if (std::abs(q.w) > w_tol)
        throw ImpurityError("quaternion has a non-negligible scalar part");
    return SpherePoint::project(q.v);
}

/// Great-circle angle between two sphere points, in [0, pi].
inline double geodesic_angle(const SpherePoint& a, const SpherePoint& b) {
    return std::atan2(norm(cross(a.vec(), b.vec())), dot(a.vec(), b.vec()));
}

inline double geodesic_angle(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// Unit quaternion (cos(theta/2), sin(theta/2) v) encoding a rotation of
/// theta radians about the unit axis v.  A zero rotation stores the fixed
/// axis (0,0,1) so construction is total and deterministic.
class RotationQuaternion {
public:
    static RotationQuaternion axis_angle(const Vec3& axis, double angle) {
        if (angle == 0.0) return RotationQuaternion({1.0, {0.0, 0.0, 0.0}});
        const double n = norm(axis);
        if (n < 1e-150) throw ZeroNormError("rotation axis has (near-)zero length");
        const double half = 0.5 * angle;
        return RotationQuaternion({std::cos(half), (std::sin(half) / n) * axis});
    }

    static RotationQuaternion from_unit_quaternion(const Quaternion& q) {
        if (std::abs(norm(q) - 1.0) > 1e-9)
            throw NonUnitRotationError("rotation quaternion is not unit length");
        return RotationQuaternion(normalized(q));
    }

    /// Rotation that carries a onto b along their common great circle.
    static RotationQuaternion between(const SpherePoint& a, const SpherePoint& b) {
        const double angle = geodesic_angle(a, b);
        if (angle == 0.0) return axis_angle({0.0, 0.0, 1.0}, 0.0);
        const Vec3 ax = cross(a.vec(), b.vec());
        if (norm(ax) < 1e-150)
            throw AntipodalPointsError("no unique rotation between antipodal points");
        return axis_angle(ax, angle);
    }

    double angle() const { return 2.0 * std::atan2(norm(q_.v), q_.w); }

    Vec3 axis() const {
        const double s = norm(q_.v);
        if (s == 0.0) return {0.0, 0.0, 1.0};
        return q_.v / s;
    }

    const Quaternion& quat() const { return q_; }

private:
    explicit RotationQuaternion(const Quaternion& q) : q_(q) {}
    Quaternion q_ = quat_identity();
};

/// ROTATE(q, r) = r q r^{-1} on the pure quaternion (0, p).
inline SpherePoint rotate(const SpherePoint& p, const RotationQuaternion& r) {
    const Quaternion& rq = r.quat();
    const Quaternion out = rq * to_pure(p) * conjugate(rq);
    return SpherePoint::project(out.v);
}

} // namespace spherint
