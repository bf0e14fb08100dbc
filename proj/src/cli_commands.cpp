#include "spherint/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spherint/dataset_io.hpp"
#include "spherint/datasets.hpp"
#include "spherint/errors.hpp"
#include "spherint/harness.hpp"
#include "spherint/seno.hpp"
#include "spherint/sider.hpp"

namespace spherint {

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumerical = 4;

Method parse_method(const std::string& name) {
    const auto m = method_from_name(name);
    if (!m) throw Error("unknown method: " + name);
    return *m;
}

FileFormat parse_format(const std::string& name, const std::string& in_path) {
    if (name == "csv") return FileFormat::csv;
    if (name == "json") return FileFormat::json;
    return format_from_path(in_path);
}

// Writes to the --out path, or standard output when none was given.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw Error("cannot open output file: " + out_path);
    file << text;
}

void print_validation(const ValidationReport& report, std::ostream& out) {
    for (const PairReport& p : report.pairs) {
        out << "pair " << p.index << "-" << p.index + 1 << ": angle " << format_g17(p.angle);
        if (p.flipped) out << " [sign flip applied]";
        if (p.ambiguous) out << " [ambiguous: exactly 90 degrees]";
        if (p.control_spread) out << " [control spread above 90 degrees]";
        out << "\n";
    }
    if (report.great_circle_warning)
        out << "warning: all points lie on one great circle; high-order "
               "interpolation degenerates\n";
}

std::string stencil_label(std::size_t start, int order, std::size_t n_knots) {
    std::ostringstream s;
    s << "S_";
    const bool compact = n_knots <= 9;
    for (int j = 0; j <= order; ++j) {
        if (!compact && j > 0) s << ".";
        s << start + static_cast<std::size_t>(j) + 1;
    }
    return s.str();
}

struct EvalOptions {
    std::string in_path;
    std::string out_path;
    std::string method = "slerp";
    std::string format = "auto";
    int density = 200;
    int seno_k = 3;
    bool derivatives = false;
};

int run_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
    KnotSequence knots = read_knots_file(opt.in_path);

    const ValidationReport report = validate_knots(knots);
    if (report.any_ambiguous()) {
        err << "error: dataset has an ambiguous (exactly 90 degree) adjacent pair\n";
        return kExitValidation;
    }
    if (report.any_flipped())
        err << "note: canonical sign flips applied to keep adjacent angles below 90 degrees\n";
    if (report.any_control_spread())
        err << "warning: an adjacent angle exceeds 45 degrees; doubled control points "
               "fall more than 90 degrees out\n";
    if (report.great_circle_warning)
        err << "warning: all points lie on one great circle\n";

    const CurveSegment curve = make_interpolant(knots, parse_method(opt.method), opt.seno_k);
    std::ostringstream text;
    write_samples(text, curve, opt.density, parse_format(opt.format, opt.out_path),
                  opt.derivatives);
    emit(text.str(), opt.out_path, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spherint: spherical interpolation toolkit"};
    app.require_subcommand(1);

    // eval
    EvalOptions ev;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an interpolant over a dataset");
    eval_cmd->add_option("--in", ev.in_path, "input knot file (csv or json)")->required();
    eval_cmd->add_option("--out", ev.out_path, "output sample file (default: stdout)");
    eval_cmd->add_option("--method", ev.method,
                         "slerp|squad|sider2|sider3|sider4|seno2|seno3");
    eval_cmd->add_option("--density", ev.density, "number of sample intervals (default 200)");
    eval_cmd->add_option("--k", ev.seno_k, "SENO variation sample count (default 3)");
    eval_cmd->add_option("--format", ev.format, "csv|json (default: from output extension)");
    eval_cmd->add_flag("--derivatives", ev.derivatives, "append d1/d2 finite-difference channels");

    // validate
    std::string val_in;
    CLI::App* val_cmd = app.add_subcommand("validate", "report adjacency angles and warnings");
    val_cmd->add_option("--in", val_in, "input knot file")->required();

    // select
    std::string sel_in, sel_method = "seno2";
    int sel_k = 3;
    CLI::App* sel_cmd = app.add_subcommand("select", "print SENO stencil decisions per interval");
    sel_cmd->add_option("--in", sel_in, "input knot file")->required();
    sel_cmd->add_option("--method", sel_method, "seno2|seno3");
    sel_cmd->add_option("--k", sel_k, "variation sample count (default 3)");

    // convergence / efficiency (shared options)
    struct StudyOptions {
        std::string curve = "smooth";
        double sigma = 0.1;
        std::vector<std::string> methods;
        int inv_dt_min = 16;
        int inv_dt_max = 2048;
        int samples = 64;
        int seno_k = 3;
        int reps = 3;
        std::string out_path;
        std::string format = "csv";
    };
    StudyOptions conv, eff;
    auto add_study_options = [](CLI::App* cmd, StudyOptions& o, bool timing) {
        cmd->add_option("--curve", o.curve, "smooth|kinked (default smooth)");
        cmd->add_option("--sigma", o.sigma, "generating curve width (default 0.1)");
        cmd->add_option("--method", o.methods,
                        "methods to study; repeatable (default slerp squad seno2 seno3)");
        cmd->add_option("--inv-dt-min", o.inv_dt_min, "coarsest grid 1/dt (default 16)");
        cmd->add_option("--inv-dt-max", o.inv_dt_max, "finest grid 1/dt (default 2048)");
        cmd->add_option("--samples", o.samples, "error-integral samples per knot (default 64)");
        cmd->add_option("--k", o.seno_k, "SENO variation sample count (default 3)");
        if (timing) cmd->add_option("--reps", o.reps, "timing repetitions, median kept (default 3)");
        cmd->add_option("--out", o.out_path, "output file (default: stdout)");
        cmd->add_option("--format", o.format, "csv|json (default csv)");
    };
    CLI::App* conv_cmd =
        app.add_subcommand("convergence", "grid-refinement error and order study");
    add_study_options(conv_cmd, conv, false);
    CLI::App* eff_cmd = app.add_subcommand("efficiency", "time-versus-error study");
    add_study_options(eff_cmd, eff, true);

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("spherint");
        for (const std::string& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (eval_cmd->parsed()) return run_eval(ev, out, err);

        if (val_cmd->parsed()) {
            const KnotSequence knots = read_knots_file(val_in);
            const ValidationReport report = validate_knots(knots);
            print_validation(report, out);
            return report.any_ambiguous() ? kExitValidation : 0;
        }

        if (sel_cmd->parsed()) {
            const KnotSequence knots = read_knots_file(sel_in);
            const Method m = parse_method(sel_method);
            if (m != Method::seno2 && m != Method::seno3)
                throw Error("select requires --method seno2 or seno3");
            const int order = m == Method::seno2 ? 2 : 3;
            const auto selections = seno_selections(knots, order, sel_k);
            for (const SenoSelection& sel : selections) {
                out << "interval " << sel.interval << " [t=" << format_g17(knots.time(sel.interval))
                    << "," << format_g17(knots.time(sel.interval + 1)) << "] -> "
                    << stencil_label(sel.stencil_start, order, knots.size()) << " (variations:";
                for (std::size_t c = 0; c < sel.variations.size(); ++c)
                    out << " " << stencil_label(sel.stencil_starts[c], order, knots.size()) << "="
                        << format_g17(sel.variations[c]);
                out << ")\n";
            }
            return 0;
        }

        auto parse_study = [&](const StudyOptions& o, GeneratingCurve& curve,
                               std::vector<Method>& methods) {
            if (o.curve == "smooth")
                curve.kind = GeneratingCurve::Kind::smooth;
            else if (o.curve == "kinked")
                curve.kind = GeneratingCurve::Kind::kinked;
            else
                throw Error("unknown curve kind: " + o.curve);
            curve.sigma = o.sigma;
            if (o.methods.empty())
                methods = {Method::slerp, Method::squad, Method::seno2, Method::seno3};
            else
                for (const std::string& name : o.methods) methods.push_back(parse_method(name));
        };

        if (conv_cmd->parsed()) {
            GeneratingCurve curve;
            std::vector<Method> methods;
            parse_study(conv, curve, methods);
            const auto rows = convergence_study(curve, methods, conv.inv_dt_min, conv.inv_dt_max,
                                                conv.samples, conv.seno_k);
            const std::string text = conv.format == "json" ? convergence_json(rows, methods)
                                                           : convergence_csv(rows, methods);
            emit(text, conv.out_path, out);
            return 0;
        }

        if (eff_cmd->parsed()) {
            GeneratingCurve curve;
            std::vector<Method> methods;
            parse_study(eff, curve, methods);
            const auto records = efficiency_study(curve, methods, eff.inv_dt_min, eff.inv_dt_max,
                                                  eff.reps, eff.samples, eff.seno_k);
            const std::string text =
                eff.format == "json" ? efficiency_json(records) : efficiency_csv(records);
            emit(text, eff.out_path, out);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const AmbiguousAntipodeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const UniformTimeRequiredError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const WindowSizeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}

} // namespace spherint
