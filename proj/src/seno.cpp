#include "spherint/seno.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "spherint/geodesic.hpp"

namespace spherint {

VariationEstimate variation(const CurveSegment& curve, double t_i, double t_ip1, int k) {
    if (k < 1) throw Error("variation needs at least one interior sample");
    const double tol = 1e-9 * std::max(1.0, std::abs(curve.t_end() - curve.t_start()));
    if (t_i < curve.t_start() - tol || t_ip1 > curve.t_end() + tol || !(t_i < t_ip1))
        throw DomainError("variation interval lies outside the curve domain");
    double length = 0.0;
    Vec3 prev = curve.eval(t_i).vec();
    for (int j = 1; j <= k + 1; ++j) {
        const double t = t_i + (t_ip1 - t_i) * static_cast<double>(j) / static_cast<double>(k + 1);
        const Vec3 cur = curve.eval(t).vec();
        length += geodesic_angle(prev, cur);
        prev = cur;
    }
    return {length, k};
}

namespace {

struct Candidate {
    std::size_t start;              // global index of the stencil's first knot
    std::vector<Quaternion> pts;    // order + 1 pure unit quaternions
    double u_lo, u_hi;              // stencil parameters of the central interval
    double variation_length;
};

struct IntervalChoice {
    std::vector<Candidate> candidates;
    std::size_t winner; // index into candidates
};

double candidate_variation(const Candidate& c, int k) {
    double length = 0.0;
    Vec3 prev = sider_n(c.pts, c.u_lo).v;
    for (int j = 1; j <= k + 1; ++j) {
        const double u =
            c.u_lo + (c.u_hi - c.u_lo) * static_cast<double>(j) / static_cast<double>(k + 1);
        const Vec3 cur = sider_n(c.pts, u).v;
        length += geodesic_angle(prev, cur);
        prev = cur;
    }
    return length;
}

// Builds and scores the stencil candidates covering interval (i, i+1); on
// interior intervals these are the `order` windows of order+1 consecutive
// knots, near the ends whichever of them fit.
IntervalChoice choose_stencil(const std::vector<SpherePoint>& points, std::size_t i, int order,
                              int k) {
    const std::size_t n = points.size();
    const std::size_t m = static_cast<std::size_t>(order);
    const std::size_t a_lo = i + 1 >= m ? i + 1 - m : 0;
    const std::size_t a_hi = std::min(i, n - 1 - m);

    IntervalChoice choice;
    const double ideal = static_cast<double>(i) + 0.5 - static_cast<double>(m) / 2.0;
    double best_var = 0.0;
    double best_dist = 0.0;
    for (std::size_t a = a_lo; a <= a_hi; ++a) {
        Candidate c;
        c.start = a;
        c.pts.reserve(m + 1);
        for (std::size_t j = a; j <= a + m; ++j) c.pts.push_back(to_pure(points[j]));
        c.u_lo = static_cast<double>(i - a) / static_cast<double>(m);
        c.u_hi = static_cast<double>(i + 1 - a) / static_cast<double>(m);
        c.variation_length = candidate_variation(c, k);
        const double dist = std::abs(static_cast<double>(a) - ideal);
        if (choice.candidates.empty() || c.variation_length < best_var ||
            (c.variation_length == best_var && dist < best_dist)) {
            choice.winner = choice.candidates.size();
            best_var = c.variation_length;
            best_dist = dist;
        }
        choice.candidates.push_back(std::move(c));
    }
    return choice;
}

} // namespace

StencilCandidate seno_select(std::span<const SpherePoint> window, int order, int k) {
    if (order < 2) throw Error("seno order must be at least 2");
    if (static_cast<int>(window.size()) != 2 * order)
        throw WindowSizeError("seno" + std::to_string(order) + " selection needs a window of " +
                              std::to_string(2 * order) + " knots, got " +
                              std::to_string(window.size()));
    std::vector<SpherePoint> pts(window.begin(), window.end());
    const KnotSequence canon =
        canonicalize_signs(KnotSequence(std::move(pts), 0.0, 1.0)).knots;
    const std::size_t central = static_cast<std::size_t>(order) - 1;
    const IntervalChoice choice = choose_stencil(canon.points(), central, order, k);
    const Candidate& win = choice.candidates[choice.winner];

    std::vector<SpherePoint> stencil_pts(canon.points().begin() + static_cast<long>(win.start),
                                         canon.points().begin() +
                                             static_cast<long>(win.start + win.pts.size()));
    CurveSegment curve = sider_curve(
        KnotSequence(std::move(stencil_pts), 0.0, 1.0 / static_cast<double>(order)), order);
    return {static_cast<int>(win.start), std::move(curve), win.u_lo, win.u_hi,
            win.variation_length};
}

std::vector<SenoSelection> seno_selections(const KnotSequence& raw, int order, int k) {
    if (order < 2) throw Error("seno order must be at least 2");
    if (static_cast<int>(raw.size()) < order + 1)
        throw WindowSizeError("seno" + std::to_string(order) + " needs at least " +
                              std::to_string(order + 1) + " knots");
    const KnotSequence knots = canonicalize_signs(raw).knots;
    std::vector<SenoSelection> out;
    out.reserve(knots.size() - 1);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const IntervalChoice choice = choose_stencil(knots.points(), i, order, k);
        SenoSelection sel;
        sel.interval = i;
        sel.stencil_start = choice.candidates[choice.winner].start;
        for (const Candidate& c : choice.candidates) {
            sel.variations.push_back(c.variation_length);
            sel.stencil_starts.push_back(c.start);
        }
        out.push_back(std::move(sel));
    }
    return out;
}

CurveSegment seno_curve(const KnotSequence& raw, int order, int k) {
    if (order < 2 || order > 3) throw Error("seno_curve supports orders 2 and 3");
    if (static_cast<int>(raw.size()) < order + 1)
        throw WindowSizeError("seno" + std::to_string(order) + " needs at least " +
                              std::to_string(order + 1) + " knots");
    const KnotSequence knots = canonicalize_signs(raw).knots;

    auto choices = std::make_shared<std::vector<IntervalChoice>>();
    choices->reserve(knots.size() - 1);
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        choices->push_back(choose_stencil(knots.points(), i, order, k));

    const double t0 = knots.t0();
    const double dt = knots.dt();
    const std::size_t n_points = knots.size();
    auto eval = [choices, t0, dt, n_points](double t) {
        double s = std::floor((t - t0) / dt);
        s = std::clamp(s, 0.0, static_cast<double>(n_points - 2));
        const std::size_t i = static_cast<std::size_t>(s);
        const double local = (t - (t0 + s * dt)) / dt;
        const IntervalChoice& choice = (*choices)[i];
        // Every candidate is evaluated; the selection complexity of SENO is
        // order * cost(SIDER-order) per point.
        Vec3 chosen{};
        for (std::size_t c = 0; c < choice.candidates.size(); ++c) {
            const Candidate& cand = choice.candidates[c];
            const double u = cand.u_lo + (cand.u_hi - cand.u_lo) * local;
            const Vec3 value = sider_n(cand.pts, u).v;
            if (c == choice.winner) chosen = value;
        }
        return SpherePoint::project(chosen);
    };
    const Method tag = order == 2 ? Method::seno2 : Method::seno3;
    return CurveSegment(knots.t0(), knots.t_end(), tag, order * ((1 << order) - 1), eval);
}

} // namespace spherint
