#include "spherint/derivatives.hpp"

#include <algorithm>
#include <cmath>

#include "spherint/geodesic.hpp"
#include "spherint/sider.hpp"

namespace spherint {

Quaternion slerp_derivative(const Quaternion& qa, const Quaternion& qb, double f_t, double df) {
    return df * (slerp(qa, qb, f_t) * log_map(inverse(qa) * qb));
}

namespace {

// Value and first two time derivatives of a quaternion-valued expression.
struct Jet2 {
    Quaternion q{};
    Quaternion d1{};
    Quaternion d2{};
};

Jet2 const_jet(const Quaternion& q) { return {q, {}, {}}; }

// Derivatives of SLERP(A(t), B(t), w(t)) for unit-quaternion jets A, B and a
// scalar schedule w.  Works on the 4-component sine form
//   C = sin((1-w) W)/sin(W) A + sin(w W)/sin(W) B,   cos(W) = <A, B>,
// which is linear in A and B, so ordinary calculus applies; only the scalar
// coefficients need chain rules.  Near W = 0 the coefficients switch to
// their series in W^2 with W^2 = |A - B|^2 (1 + O(W^2)), which keeps the
// second derivative finite where the operand curves touch.
Jet2 slerp_jet(const Jet2& A, const Jet2& B, double w, double dw, double ddw) {
    const double c = std::clamp(dot4(A.q, B.q), -1.0, 1.0);
    const double omega = std::acos(c);

    double lam, dlam, ddlam, mu, dmu, ddmu;
    if (omega >= 1e-4) {
        const double s = std::sin(omega);
        const double c1 = dot4(A.d1, B.q) + dot4(A.q, B.d1);
        const double c2 = dot4(A.d2, B.q) + 2.0 * dot4(A.d1, B.d1) + dot4(A.q, B.d2);
        const double do1 = -c1 / s;                          // omega'
        const double do2 = -(c2 + c * do1 * do1) / s;        // omega''

        const double u = (1.0 - w) * omega;
        const double du = -dw * omega + (1.0 - w) * do1;
        const double ddu = -ddw * omega - 2.0 * dw * do1 + (1.0 - w) * do2;
        const double v = w * omega;
        const double dv = dw * omega + w * do1;
        const double ddv = ddw * omega + 2.0 * dw * do1 + w * do2;

        lam = std::sin(u) / s;
        dlam = (std::cos(u) * du - lam * c * do1) / s;
        ddlam = (-std::sin(u) * du * du + std::cos(u) * ddu - 2.0 * dlam * c * do1 +
                 lam * s * do1 * do1 - lam * c * do2) /
                s;
        mu = std::sin(v) / s;
        dmu = (std::cos(v) * dv - mu * c * do1) / s;
        ddmu = (-std::sin(v) * dv * dv + std::cos(v) * ddv - 2.0 * dmu * c * do1 +
                mu * s * do1 * do1 - mu * c * do2) /
               s;
    } else {
        // sin(x W)/sin(W) = x + (x - x^3) W^2/6 + O(W^4)
        const Quaternion d0 = A.q - B.q;
        const Quaternion d1 = A.d1 - B.d1;
        const Quaternion d2 = A.d2 - B.d2;
        const double P = dot4(d0, d0);
        const double dP = 2.0 * dot4(d0, d1);
        const double ddP = 2.0 * (dot4(d0, d2) + dot4(d1, d1));

        auto coef = [&](double x, double dx, double ddx, double& f, double& df, double& ddf) {
            const double a = x - x * x * x;        // x(1 - x^2)
            const double da = dx - 3.0 * x * x * dx;
            const double dda = ddx - 3.0 * x * x * ddx - 6.0 * x * dx * dx;
            f = x + a * P / 6.0;
            df = dx + (da * P + a * dP) / 6.0;
            ddf = ddx + (dda * P + 2.0 * da * dP + a * ddP) / 6.0;
        };
        coef(1.0 - w, -dw, -ddw, lam, dlam, ddlam);
        coef(w, dw, ddw, mu, dmu, ddmu);
    }

    Jet2 out;
    out.q = lam * A.q + mu * B.q;
    out.d1 = dlam * A.q + lam * A.d1 + dmu * B.q + mu * B.d1;
    out.d2 = ddlam * A.q + 2.0 * dlam * A.d1 + lam * A.d2 + ddmu * B.q + 2.0 * dmu * B.d1 +
             mu * B.d2;
    return out;
}

Quaternion double_past(const Quaternion& p, const Quaternion& q) {
    return {0.0, 2.0 * dot(p.v, q.v) * q.v - p.v};
}

Jet2 slerp_jet_const(const Quaternion& a, const Quaternion& b, double u, double du, double ddu) {
    return slerp_jet(const_jet(a), const_jet(b), u, du, ddu);
}

Jet2 sider2_jet(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3, double u,
                double du, double ddu) {
    const Jet2 A = slerp_jet_const(q1, double_past(q3, q2), u, du, ddu);
    const Jet2 B = slerp_jet_const(double_past(q1, q2), q3, u, du, ddu);
    return slerp_jet(A, B, u, du, ddu);
}

Jet2 sider3_jet(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3,
                const Quaternion& q4, double u, double du, double ddu) {
    const Jet2 A = sider2_jet(q1, q2, q3, 1.5 * u, 1.5 * du, 1.5 * ddu);
    const Jet2 B = sider2_jet(q2, q3, q4, 1.5 * u - 0.5, 1.5 * du, 1.5 * ddu);
    return slerp_jet(A, B, u, du, ddu);
}

Jet2 squad_jet(const Quaternion& q_im1, const Quaternion& q_i, const Quaternion& q_ip1,
               const Quaternion& q_ip2, double u, double du, double ddu) {
    const auto [s_i, s_ip1] = squad_controls(q_im1, q_i, q_ip1, q_ip2);
    const Jet2 A = slerp_jet_const(q_i, q_ip1, u, du, ddu);
    const Jet2 B = slerp_jet_const(s_i, s_ip1, u, du, ddu);
    const double w = 2.0 * u * (1.0 - u);
    const double dw = (2.0 - 4.0 * u) * du;
    const double ddw = -4.0 * du * du + (2.0 - 4.0 * u) * ddu;
    return slerp_jet(A, B, w, dw, ddw);
}

std::size_t clamp_interval(double t, double t0, double dt, std::size_t n_points) {
    double s = std::floor((t - t0) / dt);
    s = std::clamp(s, 0.0, static_cast<double>(n_points - 2));
    return static_cast<std::size_t>(s);
}

} // namespace

DerivativeBundle analytic_derivatives(Method method, const KnotSequence& raw, double t) {
    const KnotSequence knots = canonicalize_signs(raw).knots;
    const std::size_t n = knots.size();

    Jet2 jet;
    switch (method) {
        case Method::slerp: {
            const std::size_t i = clamp_interval(t, knots.t0(), knots.dt(), n);
            const double du = 1.0 / knots.dt();
            const double u = (t - knots.time(i)) * du;
            jet = slerp_jet_const(to_pure(knots.point(i)), to_pure(knots.point(i + 1)), u, du, 0.0);
            break;
        }
        case Method::squad: {
            const std::size_t i = clamp_interval(t, knots.t0(), knots.dt(), n);
            const double du = 1.0 / knots.dt();
            const double u = (t - knots.time(i)) * du;
            const Quaternion q_im1 = to_pure(knots.point(i == 0 ? 0 : i - 1));
            const Quaternion q_ip2 = to_pure(knots.point(std::min(i + 2, n - 1)));
            jet = squad_jet(q_im1, to_pure(knots.point(i)), to_pure(knots.point(i + 1)), q_ip2, u,
                            du, 0.0);
            break;
        }
        case Method::sider2: {
            if (n != 3) throw WindowSizeError("sider2 derivatives need exactly 3 knots");
            const double du = 1.0 / (knots.t_end() - knots.t0());
            const double u = (t - knots.t0()) * du;
            jet = sider2_jet(to_pure(knots.point(0)), to_pure(knots.point(1)),
                             to_pure(knots.point(2)), u, du, 0.0);
            break;
        }
        case Method::sider3: {
            if (n != 4) throw WindowSizeError("sider3 derivatives need exactly 4 knots");
            const double du = 1.0 / (knots.t_end() - knots.t0());
            const double u = (t - knots.t0()) * du;
            jet = sider3_jet(to_pure(knots.point(0)), to_pure(knots.point(1)),
                             to_pure(knots.point(2)), to_pure(knots.point(3)), u, du, 0.0);
            break;
        }
        default:
            throw UnsupportedMethodError(
                "analytic derivatives cover slerp, squad, sider2 and sider3 only");
    }

    DerivativeBundle out;
    out.d1 = jet.d1;
    out.d2 = jet.d2;
    return out;
}

DerivativeBundle fd_derivatives(const CurveSegment& curve, double t, int order, double h,
                                FdSide side) {
    if (order < 1 || order > 3) throw Error("fd_derivatives supports orders 1 to 3");
    if (!(h > 0.0)) throw Error("fd step must be positive");

    const double lo = curve.t_start();
    const double hi = curve.t_end();
    const double centered_reach = (order >= 3 ? 2.0 : 1.0) * h;
    const double one_sided_reach = static_cast<double>(order + 1) * h;

    FdSide use = side;
    if (use == FdSide::centered) {
        if (t - centered_reach < lo && t + centered_reach > hi)
            throw DomainError("curve domain too short for the fd stencil");
        if (t - centered_reach < lo)
            use = FdSide::right;
        else if (t + centered_reach > hi)
            use = FdSide::left;
    }
    if (use != FdSide::centered) {
        const double reach = one_sided_reach;
        if ((use == FdSide::right && t + reach > hi) || (use == FdSide::left && t - reach < lo))
            throw DomainError("curve domain too short for the one-sided fd stencil");
    }

    auto f = [&curve](double x) { return to_pure(curve.eval(x)); };

    DerivativeBundle out;
    out.one_sided = (use != FdSide::centered) && (side == FdSide::centered);
    if (use == FdSide::centered) {
        const Quaternion fm1 = f(t - h), fp1 = f(t + h);
        out.d1 = (1.0 / (2.0 * h)) * (fp1 - fm1);
        if (order >= 2) {
            const Quaternion f0 = f(t);
            out.d2 = (1.0 / (h * h)) * (fp1 - 2.0 * f0 + fm1);
        }
        if (order >= 3) {
            const Quaternion fm2 = f(t - 2.0 * h), fp2 = f(t + 2.0 * h);
            out.d3 = (1.0 / (2.0 * h * h * h)) * (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2);
        }
    } else {
        const double sgn = (use == FdSide::right) ? 1.0 : -1.0;
        const Quaternion f0 = f(t);
        const Quaternion f1 = f(t + sgn * h);
        const Quaternion f2 = f(t + sgn * 2.0 * h);
        out.d1 = (sgn / (2.0 * h)) * (-3.0 * f0 + 4.0 * f1 - f2);
        if (order >= 2) {
            const Quaternion f3 = f(t + sgn * 3.0 * h);
            out.d2 = (1.0 / (h * h)) * (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3);
            if (order >= 3) {
                const Quaternion f4 = f(t + sgn * 4.0 * h);
                out.d3 = (sgn / (2.0 * h * h * h)) *
                         (-5.0 * f0 + 18.0 * f1 - 24.0 * f2 + 14.0 * f3 - 3.0 * f4);
            }
        }
    }
    return out;
}

AngularKinematics angular_kinematics(const CurveSegment& curve, double t, double h) {
    const DerivativeBundle d = fd_derivatives(curve, t, 3, h);
    const Quaternion q = to_pure(curve.eval(t));
    const Quaternion qi = inverse(q);

    const Quaternion omega_q = 2.0 * (d.d1 * qi);
    const Quaternion alpha_q = (2.0 * d.d2 - omega_q * d.d1) * qi;
    const Quaternion zeta_q = (2.0 * (*d.d3) - 2.0 * (alpha_q * d.d1) - omega_q * d.d2) * qi;
    return {omega_q.v, alpha_q.v, zeta_q.v};
}

} // namespace spherint
