#include "spherint/knots.hpp"

#include <cmath>
#include <string>

namespace spherint {

SignFlipResult canonicalize_signs(const KnotSequence& knots) {
    std::vector<SpherePoint> points = knots.points();
    std::vector<bool> flipped(points.size(), false);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double d = dot(points[i].vec(), points[i + 1].vec());
        if (std::abs(d) <= 1e-9)
            throw AmbiguousAntipodeError("adjacent knots " + std::to_string(i) + " and " +
                                         std::to_string(i + 1) +
                                         " are 90 degrees apart; sign flip is ambiguous");
        if (d < 0.0) {
            points[i + 1] = points[i + 1].antipode();
            flipped[i + 1] = true;
        }
    }
    return {KnotSequence(std::move(points), knots.t0(), knots.dt()), std::move(flipped)};
}

} // namespace spherint
