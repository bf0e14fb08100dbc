#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spherint/curve.hpp"
#include "spherint/knots.hpp"

namespace spherint {

enum class FileFormat { csv, json };

/// Guesses csv/json from the file extension; defaults to csv.
FileFormat format_from_path(const std::string& path);

/// Reads knot rows (t, x, y, z).  CSV accepts an optional header line and
/// '#' comments; JSON accepts an array of [t,x,y,z] arrays, an array of
/// {t,x,y,z} objects, or an object with a "points" member.  Vectors within
/// 1e-6 of unit length are normalized; anything farther off is rejected
/// with ParseError.  Timestamps must be uniform (UniformTimeRequiredError).
KnotSequence read_knots(std::istream& in, FileFormat format);
KnotSequence read_knots_file(const std::string& path);
KnotSequence read_knots_file(const std::string& path, FileFormat format);

/// Writes density + 1 curve samples (t, x, y, z) over the curve domain.
/// with_derivatives appends finite-difference d1 and d2 vector channels.
void write_samples(std::ostream& out, const CurveSegment& curve, int density, FileFormat format,
                   bool with_derivatives = false);

/// Writes knots as rows (t, x, y, z) in the given format.
void write_knots(std::ostream& out, const KnotSequence& knots, FileFormat format);

} // namespace spherint
