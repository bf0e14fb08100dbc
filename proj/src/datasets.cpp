#include "spherint/datasets.hpp"

#include <cmath>

namespace spherint::datasets {

namespace {

SpherePoint sp(double x, double y, double z) { return SpherePoint::from_unit({x, y, z}); }

} // namespace

KnotSequence three_point() {
    return KnotSequence(
        {sp(0.8, -0.6, 0.0), sp(0.8, 0.6, 0.0), sp(0.0, std::sqrt(0.5), std::sqrt(0.5))}, 0.0, 0.5);
}

KnotSequence four_point() {
    return KnotSequence({sp(std::sqrt(0.6144), std::sqrt(0.3456), 0.2),
                         sp(0.0, std::sqrt(0.84), 0.4),
                         sp(-std::sqrt(0.3564), std::sqrt(0.6336), -0.1),
                         sp(-0.64, 0.48, 0.6)},
                        0.0, 1.0 / 3.0);
}

KnotSequence seno2_pick_left() { return four_point(); }

KnotSequence seno2_pick_right() {
    return KnotSequence({sp(std::sqrt(0.6144), std::sqrt(0.3456), 0.2),
                         sp(0.0, std::sqrt(0.84), 0.4),
                         sp(-std::sqrt(0.3564), std::sqrt(0.6336), -0.1),
                         sp(-std::sqrt(0.6336), std::sqrt(0.3564), 0.1)},
                        0.0, 1.0 / 3.0);
}

KnotSequence seno3_six_point() {
    return KnotSequence(
        {SpherePoint::project({-0.9462408024134863, 0.2340693569139826, -0.2232484714432692}),
         SpherePoint::project({-0.5756591575040059, 0.7203584217199284, -0.3869112025244969}),
         SpherePoint::project({-0.5139135508439371, 0.8072140040848369, 0.29034189134243293}),
         SpherePoint::project({0.1733822829796129, 0.5285757390277231, 0.830991138376381}),
         SpherePoint::project({0.8196895318805648, -0.045366259610012546, 0.571008733571053}),
         SpherePoint::project({0.8410803457569805, 0.5409102069487302, 0.0})},
        0.0, 0.2);
}

} // namespace spherint::datasets
