#include "spherint/dataset_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "spherint/derivatives.hpp"
#include "spherint/harness.hpp"

namespace spherint {

namespace {

struct Row {
    double t, x, y, z;
};

bool parse_double(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<Row> read_rows_csv(std::istream& in) {
    std::vector<Row> rows;
    std::string line;
    std::size_t lineno = 0;
    bool first_data = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        const auto fields = split_csv(body);
        if (first_data) {
            first_data = false;
            double probe;
            if (!parse_double(trim(fields[0]), probe)) continue; // header line
        }
        if (fields.size() != 4)
            throw ParseError("line " + std::to_string(lineno) + ": expected 4 fields (t,x,y,z), got " +
                             std::to_string(fields.size()));
        Row r{};
        double* dst[4] = {&r.t, &r.x, &r.y, &r.z};
        for (int j = 0; j < 4; ++j)
            if (!parse_double(trim(fields[static_cast<std::size_t>(j)]), *dst[j]))
                throw ParseError("line " + std::to_string(lineno) + ": field " + std::to_string(j + 1) +
                                 " is not a number");
        rows.push_back(r);
    }
    return rows;
}

std::vector<Row> read_rows_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("points")) doc = doc["points"];
    if (!doc.is_array()) throw ParseError("JSON input must be an array of points");
    std::vector<Row> rows;
    for (const auto& item : doc) {
        Row r{};
        if (item.is_array()) {
            if (item.size() != 4) throw ParseError("JSON point arrays must have 4 entries (t,x,y,z)");
            r.t = item[0].get<double>();
            r.x = item[1].get<double>();
            r.y = item[2].get<double>();
            r.z = item[3].get<double>();
        } else if (item.is_object()) {
            for (const char* key : {"t", "x", "y", "z"})
                if (!item.contains(key))
                    throw ParseError(std::string("JSON point is missing field \"") + key + "\"");
            r.t = item["t"].get<double>();
            r.x = item["x"].get<double>();
            r.y = item["y"].get<double>();
            r.z = item["z"].get<double>();
        } else {
            throw ParseError("JSON points must be arrays or objects");
        }
        rows.push_back(r);
    }
    return rows;
}

KnotSequence rows_to_knots(const std::vector<Row>& rows) {
    if (rows.size() < 2) throw ParseError("need at least two data points");
    std::vector<SpherePoint> points;
    std::vector<double> times;
    points.reserve(rows.size());
    times.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Vec3 v{rows[i].x, rows[i].y, rows[i].z};
        const double n = norm(v);
        if (std::abs(n - 1.0) > 1e-6)
            throw ParseError("point " + std::to_string(i + 1) +
                             " is not unit length (|p| = " + format_g17(n) + ")");
        points.push_back(SpherePoint::project(v));
        times.push_back(rows[i].t);
    }
    return KnotSequence::from_times(std::move(points), times);
}

} // namespace

FileFormat format_from_path(const std::string& path) {
    const auto pos = path.rfind('.');
    if (pos != std::string::npos) {
        std::string ext = path.substr(pos + 1);
        for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (ext == "json") return FileFormat::json;
    }
    return FileFormat::csv;
}

KnotSequence read_knots(std::istream& in, FileFormat format) {
    return rows_to_knots(format == FileFormat::csv ? read_rows_csv(in) : read_rows_json(in));
}

KnotSequence read_knots_file(const std::string& path) {
    return read_knots_file(path, format_from_path(path));
}

KnotSequence read_knots_file(const std::string& path, FileFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    return read_knots(in, format);
}

void write_samples(std::ostream& out, const CurveSegment& curve, int density, FileFormat format,
                   bool with_derivatives) {
    if (density < 1) throw Error("sample density must be positive");
    const double t0 = curve.t_start();
    const double step = (curve.t_end() - t0) / static_cast<double>(density);

    auto derivatives_at = [&](double t) {
        return fd_derivatives(curve, t, 2, 1e-5);
    };

    if (format == FileFormat::csv) {
        out << "t,x,y,z";
        if (with_derivatives) out << ",d1x,d1y,d1z,d2x,d2y,d2z";
        out << "\n";
        for (int j = 0; j <= density; ++j) {
            const double t = t0 + j * step;
            const SpherePoint p = curve.eval(t);
            out << format_g17(t) << "," << format_g17(p.x()) << "," << format_g17(p.y()) << ","
                << format_g17(p.z());
            if (with_derivatives) {
                const DerivativeBundle d = derivatives_at(t);
                out << "," << format_g17(d.d1.v.x) << "," << format_g17(d.d1.v.y) << ","
                    << format_g17(d.d1.v.z) << "," << format_g17(d.d2.v.x) << ","
                    << format_g17(d.d2.v.y) << "," << format_g17(d.d2.v.z);
            }
            out << "\n";
        }
        return;
    }

    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (int j = 0; j <= density; ++j) {
        const double t = t0 + j * step;
        const SpherePoint p = curve.eval(t);
        nlohmann::ordered_json row;
        row["t"] = t;
        row["x"] = p.x();
        row["y"] = p.y();
        row["z"] = p.z();
        if (with_derivatives) {
            const DerivativeBundle d = derivatives_at(t);
            row["d1"] = {d.d1.v.x, d.d1.v.y, d.d1.v.z};
            row["d2"] = {d.d2.v.x, d.d2.v.y, d.d2.v.z};
        }
        doc.push_back(row);
    }
    out << doc.dump(2) << "\n";
}

void write_knots(std::ostream& out, const KnotSequence& knots, FileFormat format) {
    if (format == FileFormat::csv) {
        out << "t,x,y,z\n";
        for (std::size_t i = 0; i < knots.size(); ++i) {
            const SpherePoint& p = knots.point(i);
            out << format_g17(knots.time(i)) << "," << format_g17(p.x()) << ","
                << format_g17(p.y()) << "," << format_g17(p.z()) << "\n";
        }
        return;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const SpherePoint& p = knots.point(i);
        doc.push_back({knots.time(i), p.x(), p.y(), p.z()});
    }
    out << doc.dump(2) << "\n";
}

} // namespace spherint
