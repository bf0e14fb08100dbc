#pragma once

#include "spherint/knots.hpp"

namespace spherint::datasets {

/// Three points with a sharp turn at the middle knot (t = 0, 0.5, 1).
/// Exercises piecewise SLERP kinks, SQUAD joints and single-window SIDER2.
KnotSequence three_point();

/// Four well-spread points (t = 0, 1/3, 2/3, 1) for single-window SIDER3.
KnotSequence four_point();

/// Four points whose last knot bends sharply at p3; SENO2 on the central
/// interval (p2, p3) picks the left stencil S_123.
KnotSequence seno2_pick_left();

/// Same first three points with a mirrored fourth knot; SENO2 picks the
/// right stencil S_234.
KnotSequence seno2_pick_right();

/// Six scattered points; SENO3 on the central interval (p3, p4) picks the
/// stencil S_3456.
KnotSequence seno3_six_point();

} // namespace spherint::datasets
