#include <doctest.h>

#include <cmath>
#include <vector>

#include "spherint/datasets.hpp"
#include "spherint/generating.hpp"
#include "spherint/geodesic.hpp"
#include "spherint/seno.hpp"
#include "spherint/sider.hpp"
#include "test_support.hpp"

using namespace spherint;
using spherint::testing::Rng;

TEST_CASE("variation of a single geodesic arc equals its angle") {
    Rng rng(401);
    const SpherePoint a = spherint::testing::random_point(rng);
    const SpherePoint b = spherint::testing::step_along_sphere(rng, a, 0.8);
    const CurveSegment arc = piecewise_slerp(KnotSequence({a, b}, 0.0, 1.0));
    for (int k : {1, 3, 7}) {
        const VariationEstimate est = variation(arc, 0.0, 1.0, k);
        CHECK(est.k == k);
        CHECK(est.length == doctest::Approx(geodesic_angle(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("variation of a constant curve is zero") {
    const SpherePoint a = SpherePoint::from_unit({0.0, 0.0, 1.0});
    const CurveSegment constant(0.0, 1.0, Method::slerp, 1, [a](double) { return a; });
    CHECK(variation(constant, 0.0, 1.0, 3).length == 0.0);
}

TEST_CASE("variation domain checks") {
    const SpherePoint a = SpherePoint::from_unit({0.0, 0.0, 1.0});
    const CurveSegment constant(0.0, 1.0, Method::slerp, 1, [a](double) { return a; });
    CHECK_THROWS_AS(variation(constant, -0.5, 0.5, 3), DomainError);
    CHECK_THROWS_AS(variation(constant, 0.5, 1.5, 3), DomainError);
    CHECK_THROWS(variation(constant, 0.0, 1.0, 0));
}

TEST_CASE("an oscillatory stencil shows a larger variation than the geodesic") {
    // the stencil that straddles the sharp turn bends away from the geodesic
    const auto knots = datasets::seno2_pick_left();
    const std::vector<SpherePoint>& p = knots.points();
    const double geo = geodesic_angle(p[1], p[2]);

    const CurveSegment left = sider_curve(KnotSequence({p[0], p[1], p[2]}, 0.0, 0.5), 2);
    const CurveSegment right = sider_curve(KnotSequence({p[1], p[2], p[3]}, 0.0, 0.5), 2);
    const double var_left = variation(left, 0.5, 1.0, 3).length;
    const double var_right = variation(right, 0.0, 0.5, 3).length;

    CHECK(var_left >= geo - 1e-9);
    CHECK(var_right >= geo - 1e-9);
    CHECK(var_right > var_left);
    CHECK(var_right > geo + 1e-3);
}

TEST_CASE("seno_select picks the least-variation stencil") {
    const auto left_case = datasets::seno2_pick_left();
    const StencilCandidate pick_a = seno_select(left_case.points(), 2);
    CHECK(pick_a.start_index == 0); // S_123

    const auto right_case = datasets::seno2_pick_right();
    const StencilCandidate pick_b = seno_select(right_case.points(), 2);
    CHECK(pick_b.start_index == 1); // S_234

    const auto six = datasets::seno3_six_point();
    const StencilCandidate pick_c = seno_select(six.points(), 3);
    CHECK(pick_c.start_index == 2); // S_3456

    CHECK_THROWS_AS(seno_select(std::span<const SpherePoint>(six.points().data(), 5), 3),
                    WindowSizeError);
}

TEST_CASE("selection is invariant under variation-sample refinement") {
    for (int k : {3, 6, 12}) {
        CHECK(seno_select(datasets::seno2_pick_left().points(), 2, k).start_index == 0);
        CHECK(seno_select(datasets::seno2_pick_right().points(), 2, k).start_index == 1);
        CHECK(seno_select(datasets::seno3_six_point().points(), 3, k).start_index == 2);
    }
}

TEST_CASE("selection optimality and variation lower bound") {
    Rng rng(402);
    for (int rep = 0; rep < 30; ++rep) {
        const KnotSequence knots = spherint::testing::random_knots(rng, 6, 0.1, 0.45);
        const auto sels = seno_selections(knots, 3);
        for (const SenoSelection& sel : sels) {
            const double geo =
                geodesic_angle(knots.point(sel.interval), knots.point(sel.interval + 1));
            double winner_var = -1.0;
            for (std::size_t c = 0; c < sel.stencil_starts.size(); ++c)
                if (sel.stencil_starts[c] == sel.stencil_start) winner_var = sel.variations[c];
            REQUIRE(winner_var >= 0.0);
            for (double var : sel.variations) {
                CHECK(var >= geo - 1e-9);     // quadrature never undercuts the geodesic
                CHECK(winner_var <= var);     // the winner is optimal
            }
        }
    }
}

TEST_CASE("seno curve interpolates knots and matches a direct sider when smooth") {
    // gentle knots: every candidate is nearly identical, so the assembled
    // curve must sit on top of the centered SIDER window
    GeneratingCurve curve;
    curve.kind = GeneratingCurve::Kind::smooth;
    const KnotSequence knots = synthesize_knots(curve, 32);

    for (int order : {2, 3}) {
        const CurveSegment seno = seno_curve(knots, order);
        for (std::size_t i = 0; i < knots.size(); ++i)
            CHECK(norm(seno.eval(knots.time(i)).vec() - knots.point(i).vec()) <= 1e-10);

        const auto sels = seno_selections(knots, order);
        for (std::size_t i = 10; i < 14; ++i) {
            const SenoSelection& sel = sels[i];
            std::vector<SpherePoint> window(
                knots.points().begin() + static_cast<long>(sel.stencil_start),
                knots.points().begin() + static_cast<long>(sel.stencil_start + order + 1));
            const KnotSequence sub(window, knots.time(sel.stencil_start), knots.dt());
            const CurveSegment direct = sider_curve(sub, order);
            for (double f : {0.25, 0.5, 0.75}) {
                const double t = knots.time(i) + f * knots.dt();
                CHECK(norm(seno.eval(t).vec() - direct.eval(t).vec()) <= 1e-6);
            }
        }
    }
}

TEST_CASE("seno2 central-interval samples trace the selected stencil") {
    const auto knots = datasets::seno2_pick_left();
    const CurveSegment seno = seno_curve(knots, 2);
    // the winner S_123 covers knots 0..2; the central interval (1,2) maps
    // onto its parameter sub-range [0.5, 1]
    const KnotSequence sub({knots.point(0), knots.point(1), knots.point(2)}, knots.time(0),
                           knots.dt());
    const CurveSegment s123 = sider_curve(sub, 2);
    for (double f : {0.1, 0.5, 0.9}) {
        const double t = knots.time(1) + f * knots.dt();
        CHECK(norm(seno.eval(t).vec() - s123.eval(t).vec()) <= 1e-12);
    }
}

TEST_CASE("minimum-size input: the central interval matches seno_select") {
    Rng rng(403);
    for (int order : {2, 3}) {
        const KnotSequence knots =
            spherint::testing::random_knots(rng, static_cast<std::size_t>(2 * order), 0.15, 0.4);
        const auto sels = seno_selections(knots, order);
        CHECK(sels.size() == knots.size() - 1);
        const StencilCandidate direct = seno_select(knots.points(), order);
        const SenoSelection& central = sels[static_cast<std::size_t>(order) - 1];
        CHECK(central.stencil_start == static_cast<std::size_t>(direct.start_index));
    }
}

TEST_CASE("boundary intervals use the stencils that fit") {
    Rng rng(404);
    const KnotSequence knots = spherint::testing::random_knots(rng, 8, 0.15, 0.4);
    const auto sels = seno_selections(knots, 3);
    CHECK(sels[0].variations.size() == 1);  // only S over knots 0..3 covers (0,1)
    CHECK(sels[0].stencil_start == 0);
    CHECK(sels[1].variations.size() == 2);
    CHECK(sels[3].variations.size() == 3);  // interior interval: full choice
    CHECK(sels[6].variations.size() == 1);
    CHECK(sels[6].stencil_start == 4);
}

TEST_CASE("selected stencils never straddle the kink on fine grids") {
    GeneratingCurve curve;
    curve.kind = GeneratingCurve::Kind::kinked;
    for (int inv : {64, 128}) {
        const KnotSequence knots = synthesize_knots(curve, inv);
        const std::size_t kink = static_cast<std::size_t>(inv) / 2; // knot at t = 0
        for (int order : {2, 3}) {
            const auto sels = seno_selections(knots, order);
            for (const SenoSelection& sel : sels) {
                const std::size_t lo = sel.stencil_start;
                const std::size_t hi = lo + static_cast<std::size_t>(order);
                const bool straddles = lo < kink && kink < hi;
                CHECK_FALSE(straddles);
            }
        }
    }
}

TEST_CASE("seno evaluation is deterministic") {
    Rng rng(405);
    const KnotSequence knots = spherint::testing::random_knots(rng, 8, 0.15, 0.4);
    const CurveSegment a = seno_curve(knots, 3);
    const CurveSegment b = seno_curve(knots, 3);
    for (int j = 0; j <= 100; ++j) {
        const double t = knots.t0() + (knots.t_end() - knots.t0()) * j / 100.0;
        const Vec3 va = a.eval(t).vec();
        const Vec3 vb = b.eval(t).vec();
        CHECK(va.x == vb.x);
        CHECK(va.y == vb.y);
        CHECK(va.z == vb.z);
    }
}

TEST_CASE("seno slerp accounting per interior evaluation") {
    Rng rng(406);
    const KnotSequence knots = spherint::testing::random_knots(rng, 8, 0.15, 0.4);

    const CurveSegment s2 = seno_curve(knots, 2);
    CHECK(s2.slerp_calls_per_eval() == 6);
    std::uint64_t before = slerp_call_count();
    for (int j = 0; j < 50; ++j) s2.eval(3.2 + 0.01 * j); // interval (3,4): interior
    CHECK(slerp_call_count() - before == 50 * 6);

    const CurveSegment s3 = seno_curve(knots, 3);
    CHECK(s3.slerp_calls_per_eval() == 21);
    before = slerp_call_count();
    for (int j = 0; j < 50; ++j) s3.eval(3.2 + 0.01 * j);
    CHECK(slerp_call_count() - before == 50 * 21);
}

TEST_CASE("seno window size errors") {
    Rng rng(407);
    const KnotSequence small = spherint::testing::random_knots(rng, 3, 0.2, 0.4);
    CHECK_THROWS_AS(seno_curve(small, 3), WindowSizeError);
    CHECK_THROWS(seno_curve(small, 5));
}
