#pragma once

#include <string>
#include <vector>

#include "spherint/curve.hpp"
#include "spherint/generating.hpp"
#include "spherint/knots.hpp"

namespace spherint {

/// Builds the interpolant of the requested method over the knots.
/// slerp/squad/seno2/seno3 accept any length; sider2/sider3/sider4 require
/// exactly 3/4/5 knots (single window).  seno_k is the SENO variation
/// sample count.
CurveSegment make_interpolant(const KnotSequence& knots, Method method, int seno_k = 3);

/// L1 reconstruction error integral(||y(t) - z(t)||, t = -0.5 .. 0.5)
/// approximated by the composite trapezoid rule on `samples` uniform
/// sub-intervals (samples + 1 evaluation points).
double reconstruction_error(const CurveSegment& interpolant, const GeneratingCurve& curve,
                            int samples);

/// One grid size of a convergence study.  errors/orders align with the
/// method list passed to convergence_study; orders hold NaN on the first row.
struct ConvergenceRow {
    int inv_dt;
    std::vector<double> errors;
    std::vector<double> orders;
};

/// Errors and observed orders rho = log2(e_dt / e_{dt/2}) over the doubling
/// grid sequence inv_dt_min, 2*inv_dt_min, ..., inv_dt_max.  The error
/// integral uses samples_per_knot * inv_dt sub-intervals.
std::vector<ConvergenceRow> convergence_study(const GeneratingCurve& curve,
                                              const std::vector<Method>& methods, int inv_dt_min,
                                              int inv_dt_max, int samples_per_knot = 64,
                                              int seno_k = 3);

struct TimingRecord {
    Method method;
    int inv_dt;
    double wall_seconds; ///< median over the repetitions
    double error;
};

/// Wall-clock cost of building the interpolant and evaluating it on the
/// error-integral grid, alongside the reconstruction error, per grid size.
/// Runs serially; at least 3 repetitions, median reported.
std::vector<TimingRecord> efficiency_study(const GeneratingCurve& curve,
                                           const std::vector<Method>& methods, int inv_dt_min,
                                           int inv_dt_max, int reps = 3,
                                           int samples_per_knot = 64, int seno_k = 3);

/// Doubles printed with 17 significant digits; non-finite values as "nan".
std::string format_g17(double value);

std::string convergence_csv(const std::vector<ConvergenceRow>& rows,
                            const std::vector<Method>& methods);
std::string convergence_json(const std::vector<ConvergenceRow>& rows,
                             const std::vector<Method>& methods);
std::string efficiency_csv(const std::vector<TimingRecord>& records);
std::string efficiency_json(const std::vector<TimingRecord>& records);

} // namespace spherint
