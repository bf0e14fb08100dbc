#pragma once

#include <stdexcept>
#include <string>

namespace spherint {

/// Base class for every error the library raises.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Quaternion or vector norm too small to invert / normalize.
struct ZeroNormError : Error {
    using Error::Error;
};

/// A rotation quaternion drifted too far from unit length.
struct NonUnitRotationError : Error {
    using Error::Error;
};

/// Geodesic endpoints are (numerically) antipodal; no unique great circle.
struct AntipodalPointsError : Error {
    using Error::Error;
};

/// Adjacent points sit exactly 90 degrees apart; the canonical sign flip
/// cannot decide between p and -p.
struct AmbiguousAntipodeError : Error {
    using Error::Error;
};

/// A curve evaluation produced a quaternion with a non-negligible scalar
/// part where a pure quaternion was required.
struct ImpurityError : Error {
    using Error::Error;
};

/// Knot timestamps are not uniformly spaced.
struct UniformTimeRequiredError : Error {
    using Error::Error;
};

/// Recursive interpolant order exceeds the configured cap.
struct RecursionDepthError : Error {
    using Error::Error;
};

/// A stencil window has the wrong number of knots.
struct WindowSizeError : Error {
    using Error::Error;
};

/// A parameter lies outside the domain of a curve or stencil.
struct DomainError : Error {
    using Error::Error;
};

/// Operation not defined for the requested interpolation method.
struct UnsupportedMethodError : Error {
    using Error::Error;
};

/// Malformed input data (CSV/JSON ingestion).
struct ParseError : Error {
    using Error::Error;
};

} // namespace spherint
