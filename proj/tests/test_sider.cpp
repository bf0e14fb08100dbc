#include <doctest.h>

#include <cmath>
#include <vector>

#include "spherint/datasets.hpp"
#include "spherint/geodesic.hpp"
#include "spherint/sider.hpp"
#include "test_support.hpp"

using namespace spherint;
using spherint::testing::Rng;

TEST_CASE("sider2 controls double the geodesic") {
    // doubling a 45 degree arc from (1,0,0) through the diagonal lands on (0,1,0)
    const SpherePoint p1 = SpherePoint::from_unit({1.0, 0.0, 0.0});
    const SpherePoint p2 = SpherePoint::from_unit({std::sqrt(0.5), std::sqrt(0.5), 0.0});
    const SpherePoint p3 = SpherePoint::from_unit({std::sqrt(0.5), 0.0, std::sqrt(0.5)});
    const SiderControls2 ctrl = sider2_controls(p1, p2, p3);
    CHECK(norm(ctrl.c2b.vec() - Vec3{0.0, 1.0, 0.0}) <= 1e-15);

    // a zero-length trailing geodesic keeps the control on the data point
    const SiderControls2 degen = sider2_controls(p1, p2, p2);
    CHECK(norm(degen.c2a.vec() - p2.vec()) <= 1e-15);

    CHECK_THROWS(sider2_controls(p1, p1, p1));
}

TEST_CASE("control doubling equals slerp extrapolation to t = 2") {
    Rng rng(301);
    for (int it = 0; it < 300; ++it) {
        const SpherePoint a = spherint::testing::random_point(rng);
        const SpherePoint b = spherint::testing::step_along_sphere(rng, a, 0.05 + 0.004 * it);
        const SpherePoint c = spherint::testing::step_along_sphere(rng, b, 0.3);
        const SiderControls2 ctrl = sider2_controls(a, b, c);
        CHECK(norm(ctrl.c2b.vec() - slerp(a, b, 2.0).vec()) <= 1e-13);
        CHECK(norm(ctrl.c2a.vec() - slerp(c, b, 2.0).vec()) <= 1e-13);
        CHECK(std::abs(norm(ctrl.c2b.vec()) - 1.0) <= 1e-15);
        // the doubled control sits twice as far along the same geodesic
        CHECK(geodesic_angle(a, ctrl.c2b) ==
              doctest::Approx(2.0 * geodesic_angle(a, b)).epsilon(1e-10));
    }
}

TEST_CASE("sider2 interpolates its three knots") {
    const auto knots = datasets::three_point();
    const Quaternion q1 = to_pure(knots.point(0));
    const Quaternion q2 = to_pure(knots.point(1));
    const Quaternion q3 = to_pure(knots.point(2));

    CHECK(norm(sider2(q1, q2, q3, 0.0) - q1) <= 1e-14);
    CHECK(norm(sider2(q1, q2, q3, 0.5) - q2) <= 1e-12);
    CHECK(norm(sider2(q1, q2, q3, 1.0) - q3) <= 1e-14);

    const std::uint64_t before = slerp_call_count();
    sider2(q1, q2, q3, 0.37);
    CHECK(slerp_call_count() - before == 3);
}

TEST_CASE("sider2 reversal traces the same curve") {
    Rng rng(302);
    for (int it = 0; it < 50; ++it) {
        const auto pts = spherint::testing::random_walk(rng, 3, 0.2, 0.7);
        const Quaternion q1 = to_pure(pts[0]), q2 = to_pure(pts[1]), q3 = to_pure(pts[2]);
        double hausdorff = 0.0;
        for (int j = 0; j <= 40; ++j) {
            const double t = j / 40.0;
            const Quaternion fwd = sider2(q1, q2, q3, t);
            const Quaternion rev = sider2(q3, q2, q1, 1.0 - t);
            hausdorff = std::max(hausdorff, norm(fwd - rev));
        }
        CHECK(hausdorff <= 1e-10);
    }
    // the stated spot check
    const Quaternion a{0.0, {1.0, 0.0, 0.0}};
    const Quaternion b{0.0, {std::sqrt(0.5), std::sqrt(0.5), 0.0}};
    const Quaternion c{0.0, {0.0, 1.0, 0.0}};
    CHECK(norm(sider2(a, b, c, 0.3) - sider2(c, b, a, 0.7)) <= 1e-13);
}

TEST_CASE("sider3 interpolates four knots with seven slerps") {
    const auto knots = datasets::four_point();
    const Quaternion q1 = to_pure(knots.point(0));
    const Quaternion q2 = to_pure(knots.point(1));
    const Quaternion q3 = to_pure(knots.point(2));
    const Quaternion q4 = to_pure(knots.point(3));

    CHECK(norm(sider3(q1, q2, q3, q4, 0.0) - q1) <= 1e-14);
    CHECK(norm(sider3(q1, q2, q3, q4, 1.0 / 3.0) - q2) <= 1e-12);
    CHECK(norm(sider3(q1, q2, q3, q4, 2.0 / 3.0) - q3) <= 1e-12);
    CHECK(norm(sider3(q1, q2, q3, q4, 1.0) - q4) <= 1e-14);

    const std::uint64_t before = slerp_call_count();
    sider3(q1, q2, q3, q4, 0.41);
    CHECK(slerp_call_count() - before == 7);
}

TEST_CASE("sider_n recursion") {
    Rng rng(303);

    // n = 2 is exactly sider2
    const auto tri = spherint::testing::random_walk(rng, 3, 0.2, 0.6);
    const std::vector<Quaternion> q3{to_pure(tri[0]), to_pure(tri[1]), to_pure(tri[2])};
    for (double t : {0.0, 0.17, 0.5, 0.83, 1.0})
        CHECK(norm(sider_n(q3, t) - sider2(q3[0], q3[1], q3[2], t)) == 0.0);

    // n = 3 routes through the same schedule as sider3
    const auto quad = spherint::testing::random_walk(rng, 4, 0.2, 0.5);
    const std::vector<Quaternion> q4{to_pure(quad[0]), to_pure(quad[1]), to_pure(quad[2]),
                                     to_pure(quad[3])};
    for (double t : {0.1, 0.4, 0.9})
        CHECK(norm(sider_n(q4, t) - sider3(q4[0], q4[1], q4[2], q4[3], t)) == 0.0);

    // n = 4 hits all five knots and costs 15 slerps
    const auto pts = spherint::testing::random_walk(rng, 5, 0.1, 0.3);
    std::vector<Quaternion> q5;
    for (const auto& p : pts) q5.push_back(to_pure(p));
    for (int i = 0; i <= 4; ++i)
        CHECK(norm(sider_n(q5, i / 4.0) - q5[static_cast<std::size_t>(i)]) <= 1e-10);
    const std::uint64_t before = slerp_call_count();
    sider_n(q5, 0.63);
    CHECK(slerp_call_count() - before == 15);

    // the recursion cap
    std::vector<Quaternion> q10(10, q5[0]);
    CHECK_THROWS_AS(sider_n(q10, 0.5), RecursionDepthError);
    CHECK_FALSE(norm(sider_n(q10, 0.5, 9)) == 0.0); // raising the cap admits order 9
}

TEST_CASE("sider curves interpolate random knot sets") {
    Rng rng(304);
    for (int order = 2; order <= 4; ++order) {
        const double max_angle = order == 4 ? 0.3 : 0.5;
        for (int rep = 0; rep < 30; ++rep) {
            const KnotSequence knots = spherint::testing::random_knots(
                rng, static_cast<std::size_t>(order + 1), 0.05, max_angle);
            const CurveSegment curve = sider_curve(knots, order);
            for (std::size_t i = 0; i < knots.size(); ++i)
                CHECK(norm(curve.eval(knots.time(i)).vec() - knots.point(i).vec()) <= 1e-10);
        }
    }
}

TEST_CASE("sider output stays unit along the whole parameter range") {
    Rng rng(305);
    const KnotSequence knots = spherint::testing::random_knots(rng, 4, 0.2, 0.5);
    const CurveSegment curve = sider_curve(knots, 3);
    for (int j = 0; j <= 1000; ++j) {
        const double t = knots.t0() + (knots.t_end() - knots.t0()) * j / 1000.0;
        CHECK(std::abs(norm(curve.eval(t).vec()) - 1.0) <= 1e-10);
    }
}

TEST_CASE("sider smoothness probe at interior knots") {
    // single-window curves are smooth compositions: one-sided derivative
    // estimates around the interior knots must agree
    const double h = 1e-4;
    auto jump = [&](const CurveSegment& curve, double t, int order) {
        auto sample = [&](double sgn, int idx) {
            return curve.eval(t + sgn * h * idx).vec();
        };
        Vec3 left{}, right{};
        if (order == 1) {
            right = (-3.0 * sample(1, 0) + 4.0 * sample(1, 1) - sample(1, 2)) / (2.0 * h);
            left = (3.0 * sample(-1, 0) - 4.0 * sample(-1, 1) + sample(-1, 2)) / (2.0 * h);
        } else if (order == 2) {
            right = (2.0 * sample(1, 0) - 5.0 * sample(1, 1) + 4.0 * sample(1, 2) - sample(1, 3)) /
                    (h * h);
            left = (2.0 * sample(-1, 0) - 5.0 * sample(-1, 1) + 4.0 * sample(-1, 2) -
                    sample(-1, 3)) /
                   (h * h);
        } else {
            right = (-5.0 * sample(1, 0) + 18.0 * sample(1, 1) - 24.0 * sample(1, 2) +
                     14.0 * sample(1, 3) - 3.0 * sample(1, 4)) /
                    (2.0 * h * h * h);
            left = (5.0 * sample(-1, 0) - 18.0 * sample(-1, 1) + 24.0 * sample(-1, 2) -
                    14.0 * sample(-1, 3) + 3.0 * sample(-1, 4)) /
                   (2.0 * h * h * h);
        }
        return norm(right - left);
    };

    const CurveSegment s2 = sider_curve(datasets::three_point(), 2);
    CHECK(jump(s2, 0.5, 1) <= 100.0 * h);
    CHECK(jump(s2, 0.5, 2) <= 100.0 * h);

    const CurveSegment s3 = sider_curve(datasets::four_point(), 3);
    for (double t : {1.0 / 3.0, 2.0 / 3.0}) {
        CHECK(jump(s3, t, 1) <= 100.0 * h);
        CHECK(jump(s3, t, 2) <= 100.0 * h);
        CHECK(jump(s3, t, 3) <= 100.0 * h);
    }
}

TEST_CASE("validate_knots") {
    // a flipped pair
    const SpherePoint a = SpherePoint::from_unit({1.0, 0.0, 0.0});
    const SpherePoint far = SpherePoint::project({-0.9, 0.1, 0.05});
    ValidationReport rep = validate_knots(KnotSequence({a, far}, 0.0, 1.0));
    CHECK(rep.pairs[0].flipped);
    CHECK(rep.pairs[0].angle < M_PI_2);

    // all points on the equator trigger the great-circle warning
    std::vector<SpherePoint> equator;
    for (int k = 0; k < 5; ++k)
        equator.push_back(SpherePoint::from_unit({std::cos(0.3 * k), std::sin(0.3 * k), 0.0}));
    rep = validate_knots(KnotSequence(equator, 0.0, 1.0));
    CHECK(rep.great_circle_warning);
    CHECK_FALSE(rep.any_flipped());

    // an exactly perpendicular pair is ambiguous
    const SpherePoint b = SpherePoint::from_unit({0.0, 1.0, 0.0});
    rep = validate_knots(KnotSequence({a, b}, 0.0, 1.0));
    CHECK(rep.pairs[0].ambiguous);

    // wide spacing flags the doubled control spread
    const SpherePoint wide = SpherePoint::from_unit({std::cos(1.0), std::sin(1.0), 0.0});
    rep = validate_knots(KnotSequence({a, wide, a}, 0.0, 1.0));
    CHECK(rep.pairs[0].control_spread);

    // a generic 3D dataset is not coplanar
    Rng rng(306);
    const KnotSequence generic = spherint::testing::random_knots(rng, 6, 0.2, 0.5);
    CHECK_FALSE(validate_knots(generic).great_circle_warning);

    // large sets take the eigenvalue path instead of the O(N^3) scan
    std::vector<SpherePoint> big_circle;
    for (int k = 0; k < 400; ++k) {
        const double a = 1e-3 * k;
        big_circle.push_back(SpherePoint::from_unit({std::cos(a), std::sin(a), 0.0}));
    }
    CHECK(validate_knots(KnotSequence(big_circle, 0.0, 1.0)).great_circle_warning);
    const KnotSequence big_generic = spherint::testing::random_knots(rng, 400, 0.01, 0.05);
    CHECK_FALSE(validate_knots(big_generic).great_circle_warning);
}
