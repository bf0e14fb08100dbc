#pragma once

#include <span>
#include <vector>

#include "spherint/curve.hpp"
#include "spherint/knots.hpp"
#include "spherint/quat.hpp"
#include "spherint/sider.hpp"

namespace spherint {

/// Approximate arc length of a curve between two consecutive knots.
struct VariationEstimate {
    double length; ///< accumulated geodesic arc, radians
    int k;         ///< number of interior sample points
};

/// Composite-trapezoid style variation: k equally spaced interior
/// parameters split [t_i, t_ip1] into k+1 sub-segments whose geodesic
/// distances are summed.  Raises DomainError when the interval lies
/// outside the curve domain.
VariationEstimate variation(const CurveSegment& curve, double t_i, double t_ip1, int k);

/// One stencil candidate for the central interval of a window.
struct StencilCandidate {
    int start_index;        ///< offset of the stencil's first knot in the window
    CurveSegment curve;     ///< SIDER interpolant over the stencil knots
    double u_lo;            ///< curve parameter mapped onto t_i
    double u_hi;            ///< curve parameter mapped onto t_{i+1}
    double variation_length;
};

/// Selects, among the `order` SIDER-`order` candidates of a 2*order-knot
/// window (central interval between knots order-1 and order), the one of
/// least variation.  Ties break toward the most centered stencil, then the
/// smaller start index.  Raises WindowSizeError on a wrong window size.
StencilCandidate seno_select(std::span<const SpherePoint> window, int order, int k = 3);

/// Per-interval record of a SENO selection over a full knot sequence.
struct SenoSelection {
    std::size_t interval;            ///< interval (i, i+1)
    std::size_t stencil_start;       ///< global index of the winning stencil's first knot
    std::vector<double> variations;  ///< variation per candidate, ordered by start index
    std::vector<std::size_t> stencil_starts; ///< global start per candidate
};

/// The stencil decisions a SENO curve makes on each interval.
std::vector<SenoSelection> seno_selections(const KnotSequence& knots, int order, int k = 3);

/// Assembled SENO curve: on each interval the least-variation SIDER-`order`
/// stencil, affinely reparametrized onto [t_i, t_{i+1}].  Interior
/// intervals draw from `order` candidates; boundary intervals use the
/// stencils that fit.  Evaluation computes every candidate of the interval
/// (order * (2^order - 1) SLERPs) and returns the selected one.
CurveSegment seno_curve(const KnotSequence& knots, int order, int k = 3);

} // namespace spherint
