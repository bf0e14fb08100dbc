#include "spherint/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spherint/geodesic.hpp"
#include "spherint/seno.hpp"
#include "spherint/sider.hpp"

namespace spherint {

CurveSegment make_interpolant(const KnotSequence& knots, Method method, int seno_k) {
    switch (method) {
        case Method::slerp: return piecewise_slerp(knots);
        case Method::squad: return squad_curve(knots);
        case Method::sider2: return sider_curve(knots, 2);
        case Method::sider3: return sider_curve(knots, 3);
        case Method::sider4: return sider_curve(knots, 4);
        case Method::seno2: return seno_curve(knots, 2, seno_k);
        case Method::seno3: return seno_curve(knots, 3, seno_k);
    }
    throw Error("unknown method");
}

double reconstruction_error(const CurveSegment& interpolant, const GeneratingCurve& curve,
                            int samples) {
    if (samples < 2) throw Error("error integral needs at least two samples");
    const double a = GeneratingCurve::t_min;
    const double b = GeneratingCurve::t_max;
    const double step = (b - a) / static_cast<double>(samples);
    double sum = 0.0;
    for (int j = 0; j <= samples; ++j) {
        const double t = a + j * step;
        const double g =
            norm(interpolant.eval(t).vec() - generating_projected(curve, t).vec());
        sum += (j == 0 || j == samples) ? 0.5 * g : g;
    }
    return sum * step;
}

std::vector<ConvergenceRow> convergence_study(const GeneratingCurve& curve,
                                              const std::vector<Method>& methods, int inv_dt_min,
                                              int inv_dt_max, int samples_per_knot, int seno_k) {
    if (inv_dt_min < 2 || inv_dt_max < inv_dt_min)
        throw Error("invalid grid range");
    std::vector<ConvergenceRow> rows;
    for (int inv = inv_dt_min; inv <= inv_dt_max; inv *= 2) {
        // one padding sample per side: boundary windows see real neighbors
        const KnotSequence knots = synthesize_knots(curve, inv, 1);
        ConvergenceRow row;
        row.inv_dt = inv;
        for (Method m : methods) {
            const CurveSegment interp = make_interpolant(knots, m, seno_k);
            row.errors.push_back(reconstruction_error(interp, curve, samples_per_knot * inv));
        }
        row.orders.assign(methods.size(), std::numeric_limits<double>::quiet_NaN());
        if (!rows.empty()) {
            for (std::size_t j = 0; j < methods.size(); ++j)
                row.orders[j] = std::log2(rows.back().errors[j] / row.errors[j]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TimingRecord> efficiency_study(const GeneratingCurve& curve,
                                           const std::vector<Method>& methods, int inv_dt_min,
                                           int inv_dt_max, int reps, int samples_per_knot,
                                           int seno_k) {
    if (reps < 3) throw Error("timing needs at least three repetitions");
    std::vector<TimingRecord> records;
    for (int inv = inv_dt_min; inv <= inv_dt_max; inv *= 2) {
        const KnotSequence knots = synthesize_knots(curve, inv, 1);
        const int samples = samples_per_knot * inv;
        const double a = GeneratingCurve::t_min;
        const double step = (GeneratingCurve::t_max - a) / static_cast<double>(samples);
        for (Method m : methods) {
            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(reps));
            double checksum = 0.0;
            for (int r = 0; r < reps; ++r) {
                const auto start = std::chrono::steady_clock::now();
                const CurveSegment interp = make_interpolant(knots, m, seno_k);
                for (int j = 0; j <= samples; ++j) checksum += interp.eval(a + j * step).x();
                const auto stop = std::chrono::steady_clock::now();
                times.push_back(std::chrono::duration<double>(stop - start).count());
            }
            (void)checksum;
            std::sort(times.begin(), times.end());
            const CurveSegment interp = make_interpolant(knots, m, seno_k);
            records.push_back(
                {m, inv, times[times.size() / 2], reconstruction_error(interp, curve, samples)});
        }
    }
    return records;
}

std::string format_g17(double value) {
    if (!std::isfinite(value)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows,
                            const std::vector<Method>& methods) {
    std::ostringstream out;
    out << "inv_dt";
    for (Method m : methods) out << ",e_" << method_name(m) << ",rho_" << method_name(m);
    out << "\n";
    for (const ConvergenceRow& row : rows) {
        out << row.inv_dt;
        for (std::size_t j = 0; j < methods.size(); ++j)
            out << "," << format_g17(row.errors[j]) << "," << format_g17(row.orders[j]);
        out << "\n";
    }
    return out.str();
}

std::string convergence_json(const std::vector<ConvergenceRow>& rows,
                             const std::vector<Method>& methods) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const ConvergenceRow& row : rows) {
        nlohmann::ordered_json r;
        r["inv_dt"] = row.inv_dt;
        for (std::size_t j = 0; j < methods.size(); ++j) {
            nlohmann::ordered_json cell;
            cell["error"] = row.errors[j];
            if (std::isfinite(row.orders[j]))
                cell["order"] = row.orders[j];
            else
                cell["order"] = nullptr;
            r[method_name(methods[j])] = cell;
        }
        doc.push_back(r);
    }
    return doc.dump(2) + "\n";
}

std::string efficiency_csv(const std::vector<TimingRecord>& records) {
    std::ostringstream out;
    out << "method,inv_dt,wall_seconds,error\n";
    for (const TimingRecord& rec : records)
        out << method_name(rec.method) << "," << rec.inv_dt << "," << format_g17(rec.wall_seconds)
            << "," << format_g17(rec.error) << "\n";
    return out.str();
}

std::string efficiency_json(const std::vector<TimingRecord>& records) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const TimingRecord& rec : records) {
        nlohmann::ordered_json r;
        r["method"] = method_name(rec.method);
        r["inv_dt"] = rec.inv_dt;
        r["wall_seconds"] = rec.wall_seconds;
        r["error"] = rec.error;
        doc.push_back(r);
    }
    return doc.dump(2) + "\n";
}

} // namespace spherint
