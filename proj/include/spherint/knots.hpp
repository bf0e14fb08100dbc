#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spherint/errors.hpp"
#include "spherint/quat.hpp"

namespace spherint {

/// Ordered sphere points on a uniform time grid t0, t0 + dt, ...
class KnotSequence {
public:
    KnotSequence(std::vector<SpherePoint> points, double t0, double dt)
        : points_(std::move(points)), t0_(t0), dt_(dt) {
        if (points_.size() < 2) throw Error("knot sequence needs at least two points");
        if (!(dt_ > 0.0)) throw Error("knot spacing must be positive");
    }

    /// Builds from explicit timestamps, which must be uniformly spaced.
    static KnotSequence from_times(std::vector<SpherePoint> points,
                                   const std::vector<double>& times,
                                   double rel_tol = 1e-9) {
        if (points.size() != times.size())
            throw Error("point and time counts differ");
        if (times.size() < 2) throw Error("knot sequence needs at least two points");
        const double dt = times[1] - times[0];
        if (!(dt > 0.0)) throw UniformTimeRequiredError("timestamps must be strictly increasing");
        for (std::size_t i = 1; i + 1 < times.size(); ++i) {
            const double step = times[i + 1] - times[i];
            if (std::abs(step - dt) > rel_tol * std::max(std::abs(dt), 1.0))
                throw UniformTimeRequiredError("timestamps are not uniformly spaced");
        }
        return KnotSequence(std::move(points), times[0], dt);
    }

    std::size_t size() const { return points_.size(); }
    const SpherePoint& point(std::size_t i) const { return points_[i]; }
    const std::vector<SpherePoint>& points() const { return points_; }

    double t0() const { return t0_; }
    double dt() const { return dt_; }
    double time(std::size_t i) const { return t0_ + static_cast<double>(i) * dt_; }
    double t_end() const { return time(points_.size() - 1); }

private:
    std::vector<SpherePoint> points_;
    double t0_;
    double dt_;
};

struct SignFlipResult {
    KnotSequence knots;
    std::vector<bool> flipped;

    bool any() const {
        for (bool f : flipped)
            if (f) return true;
        return false;
    }
};

/// Walks the sequence and replaces p_{i+1} by -p_{i+1} whenever
/// p_i . p_{i+1} < 0, so adjacent geodesic angles end up below pi/2.
/// An adjacent pair exactly 90 degrees apart (|dot| <= 1e-9) has no
/// nearer representative and raises AmbiguousAntipodeError.
SignFlipResult canonicalize_signs(const KnotSequence& knots);

} // namespace spherint
