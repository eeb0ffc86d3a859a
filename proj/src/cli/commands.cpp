#include "leafcurve/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "leafcurve/errors.hpp"
#include "leafcurve/format.hpp"
#include "leafcurve/imagewarp.hpp"

namespace leafcurve::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

std::size_t checked_count(int n, const char* what) {
    if (n < 2) {
        throw ArgumentError(std::string(what) + " must be at least 2");
    }
    return static_cast<std::size_t>(n);
}

}  // namespace

Polyline plot_polyline(const RunConfig& cfg) {
    const std::size_t n = checked_count(cfg.samples, "--samples");
    const Tolerance<double> tol = cfg.tolerance();
    Polyline line;
    auto push = [&line](double s, const Point2<double>& p) {
        line.s.push_back(s);
        line.x.push_back(p.x());
        line.y.push_back(p.y());
    };
    switch (cfg.curve) {
        case CurveKind::Spiral:
            for (const auto& sample : sample_spiral(cfg.spiral(), n, tol).samples) {
                push(sample.s, sample.p);
            }
            break;
        case CurveKind::Elastica:
            for (const auto& sample : sample_elastica(cfg.elastica(), n).samples) {
                push(sample.s, sample.p);
            }
            break;
        case CurveKind::Profile:
            for (const auto& sample : build_profile(cfg.spiral(), n, tol).samples) {
                push(sample.s, sample.stretched);
            }
            break;
    }
    return line;
}

std::string polyline_csv(const Polyline& line) {
    std::string out = "s,x,y\n";
    for (std::size_t i = 0; i < line.s.size(); ++i) {
        out += format_number(line.s[i]) + "," + format_number(line.x[i]) + "," + format_number(line.y[i]) + "\n";
    }
    return out;
}

std::string polyline_svg(const Polyline& line, std::string_view title) {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (std::size_t i = 0; i < line.x.size(); ++i) {
        xmin = std::min(xmin, line.x[i]);
        xmax = std::max(xmax, line.x[i]);
        ymin = std::min(ymin, -line.y[i]);
        ymax = std::max(ymax, -line.y[i]);
    }
    double w = xmax - xmin;
    double h = ymax - ymin;
    const double extent = std::max({w, h, 1e-9});
    // A flat curve still gets a visible box.
    if (w < 1e-9 * extent) {
        w = extent;
        xmin -= extent / 2;
    }
    if (h < 1e-9 * extent) {
        h = extent;
        ymin -= extent / 2;
    }
    const double mx = 0.05 * w;
    const double my = 0.05 * h;
    const double stroke = 0.005 * std::max(w, h);

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + format_number(xmin - mx) + " " +
           format_number(ymin - my) + " " + format_number(w + 2 * mx) + " " + format_number(h + 2 * my) + "\">\n";
    out += "<title>" + std::string(title) + "</title>\n";
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" + format_number(stroke) + "\" points=\"";
    for (std::size_t i = 0; i < line.x.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += format_number(line.x[i]) + "," + format_number(-line.y[i]);
    }
    out += "\"/>\n</svg>\n";
    return out;
}

FlattenMap config_map(const RunConfig& cfg) {
    if (cfg.curve != CurveKind::Profile) {
        throw ArgumentError("flatten maps are built from bent profiles; choose a profile preset (fig4, fig5)");
    }
    const SpiralParams<double> params = cfg.spiral();
    const Tolerance<double> tol = cfg.tolerance();
    const std::size_t n = checked_count(cfg.knots, "--knots");
    std::optional<std::pair<double, double>> window;
    if (cfg.fold_free) {
        window = single_valued_window(params, tol);
    }
    return build_map(build_profile(params, n, tol, window));
}

SampledCurve<double> read_profile_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("profile CSV is empty");
    }
    line = strip_cr(line);
    bool has_s;
    if (line == "s,x,y") {
        has_s = true;
    } else if (line == "x,y") {
        has_s = false;
    } else {
        throw FormatError("profile CSV header must be 's,x,y' or 'x,y', got '" + line + "'");
    }
    SampledCurve<double> curve{SpiralParams<double>{}, {}};
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != (has_s ? 3u : 2u)) {
            throw FormatError("profile CSV line " + std::to_string(line_no) + ": wrong number of fields");
        }
        const double s = has_s ? parse_number(fields[0]) : 0.0;
        const Point2<double> p(parse_number(fields[has_s ? 1 : 0]), parse_number(fields[has_s ? 2 : 1]));
        curve.samples.push_back({s, p});
    }
    if (!has_s) {
        double acc = 0.0;
        for (std::size_t i = 0; i < curve.samples.size(); ++i) {
            if (i > 0) {
                acc += (curve.samples[i].p - curve.samples[i - 1].p).norm();
            }
            curve.samples[i].s = acc;
        }
    }
    return curve;
}

FitAxis parse_axis(std::string_view text) {
    const auto parts = split(text, ':');
    try {
        if (parts.size() == 1) {
            const double v = parse_number(parts[0]);
            return FitAxis{v, v, 1};
        }
        if (parts.size() == 3) {
            const double count = parse_number(parts[2]);
            if (count != std::floor(count) || count < 0 || count > 1e6) {
                throw ArgumentError("grid count must be a non-negative integer");
            }
            return FitAxis{parse_number(parts[0]), parse_number(parts[1]), static_cast<int>(count)};
        }
    } catch (const FormatError& err) {
        throw ArgumentError(std::string("bad grid axis '") + std::string(text) + "': " + err.what());
    }
    throw ArgumentError("grid axis must be 'lo:hi:count' or a single value, got '" + std::string(text) + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("error reading '" + path + "'");
    }
    return data;
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw IoError("error writing '" + path + "'");
    }
}

void cmd_plot(const RunConfig& cfg, const std::string& prefix) {
    const Polyline line = plot_polyline(cfg);
    const std::string title = cfg.preset.value_or("curve");
    write_file(prefix + ".csv", polyline_csv(line));
    write_file(prefix + ".svg", polyline_svg(line, title));
}

void cmd_table(const RunConfig& cfg, const std::string& path) { write_file(path, write_map_csv(config_map(cfg))); }

void cmd_bend(const RunConfig& cfg, const std::string& in_path, const std::string& out_path) {
    const RasterImage img = read_pnm(read_file(in_path));
    const FlattenMap map = config_map(cfg);
    const int width = cfg.width > 0 ? cfg.width : img.width;
    write_file(out_path, write_pnm(bend_image(img, map, cfg.resample_mode(), width)));
}

void cmd_dewarp(const RunConfig& cfg, const std::string& in_path, const std::string& out_path) {
    const RasterImage img = read_pnm(read_file(in_path));
    const FlattenMap map = config_map(cfg);
    const int width = cfg.width > 0 ? cfg.width : img.width;
    write_file(out_path, write_pnm(dewarp_image(img, map, cfg.resample_mode(), width)));
}

FitResult cmd_fit(const RunConfig& cfg, const std::string& csv_path, const FitGrid& grid, std::ostream& out) {
    const SampledCurve<double> observed = read_profile_csv(read_file(csv_path));
    const SpiralParams<double> base = cfg.spiral();
    FitOptions options;
    options.phase = base.phase;
    options.weight = base.weight;
    const FitResult result = fit_params(observed, grid, cfg.tolerance(), options);
    out << "l=" << format_number(result.params.s_end, 17) << "\n";
    out << "e=" << format_number(result.params.s_start, 17) << "\n";
    out << "lambda=" << format_number(result.params.lambda, 17) << "\n";
    if (grid.m) {
        out << "m=" << format_number(result.params.phase.m, 17) << "\n";
    }
    out << "rms_residual=" << format_number(result.rms_residual, 17) << "\n";
    out << "iterations=" << result.iterations << "\n";
    return result;
}

namespace {

struct Flags {
    std::string config_path;
    std::string preset;
    std::string curve;
    std::string phase;
    double m = 0, e = 0, l = 0, lambda = 0, k = 0, tol = 0;
    std::string weight;
    int knots = 0, samples = 0, width = 0;
    std::string mode;
    bool fold_free = false;
};

void add_model_flags(CLI::App* app, Flags& f, bool images) {
    app->add_option("--config", f.config_path, "JSON config; flags override its keys");
    app->add_option("--preset", f.preset, "fig2 | fig3 | fig4 | fig5");
    app->add_option("--curve", f.curve, "spiral | elastica | profile");
    app->add_option("--phase", f.phase, "cornu | euler");
    app->add_option("--m", f.m, "shifted Euler curvature at s = 0");
    app->add_option("--e", f.e, "arc length of the free end");
    app->add_option("--l", f.l, "arc length of the axial end");
    app->add_option("--lambda", f.lambda, "stretch exponent");
    app->add_option("--weight", f.weight, "end | arc");
    app->add_option("--k", f.k, "elastica modulus");
    app->add_option("--knots", f.knots, "flatten map knot count");
    app->add_option("--samples", f.samples, "plot sample count");
    app->add_option("--tol", f.tol, "quadrature absolute tolerance");
    app->add_flag("--fold-free", f.fold_free, "restrict the map to the single-valued window");
    if (images) {
        app->add_option("--mode", f.mode, "nearest | linear");
        app->add_option("--width", f.width, "output width in pixels (default: input width)");
    }
}

RunConfig resolve(const Flags& f, CLI::App* app) {
    RunConfig cfg;
    auto given = [app](const char* name) {
        const CLI::Option* opt = app->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("--config")) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_file(f.config_path));
        } catch (const nlohmann::json::parse_error& err) {
            throw FormatError(std::string("config JSON: ") + err.what());
        }
        apply_json(cfg, j);
    }
    if (given("--preset")) cfg.preset = f.preset;
    if (given("--curve")) {
        nlohmann::json j = {{"curve", f.curve}};
        apply_json(cfg, j);
    }
    if (given("--phase")) cfg.phase = f.phase;
    if (given("--m")) cfg.m = f.m;
    if (given("--e")) cfg.e = f.e;
    if (given("--l")) cfg.l = f.l;
    if (given("--lambda")) cfg.lambda = f.lambda;
    if (given("--weight")) cfg.weight = f.weight;
    if (given("--k")) cfg.k = f.k;
    if (given("--knots")) cfg.knots = f.knots;
    if (given("--samples")) cfg.samples = f.samples;
    if (given("--tol")) cfg.tol = f.tol;
    if (given("--fold-free")) cfg.fold_free = f.fold_free;
    if (given("--mode")) cfg.mode = f.mode;
    if (given("--width")) cfg.width = f.width;
    apply_preset(cfg);
    if (cfg.width < 0) {
        throw ArgumentError("--width must be positive");
    }
    return cfg;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bent page cross-section model: plot curves, build flatten maps, bend and dewarp images"};
    app.require_subcommand(1);

    Flags plot_flags, table_flags, bend_flags, dewarp_flags, fit_flags;
    std::string prefix, table_out, bend_in, bend_out, dewarp_in, dewarp_out, fit_csv;
    std::string l_range = "1.5:3.0:7", e_range = "-1.5:0.0:7", lambda_range = "0:3:7", m_range;

    CLI::App* plot = app.add_subcommand("plot", "write <out>.csv and <out>.svg for a curve");
    add_model_flags(plot, plot_flags, false);
    plot->add_option("--out", prefix, "output path prefix (default: preset name or 'curve')");

    CLI::App* table = app.add_subcommand("table", "write the flatten map CSV (s,u)");
    add_model_flags(table, table_flags, false);
    table->add_option("--out", table_out, "output CSV path")->required();

    CLI::App* bend = app.add_subcommand("bend", "bend a flat PGM/PPM page image");
    add_model_flags(bend, bend_flags, true);
    bend->add_option("input", bend_in, "flat image")->required();
    bend->add_option("output", bend_out, "bent image")->required();

    CLI::App* dewarp = app.add_subcommand("dewarp", "flatten a bent PGM/PPM page image");
    add_model_flags(dewarp, dewarp_flags, true);
    dewarp->add_option("input", dewarp_in, "bent image")->required();
    dewarp->add_option("output", dewarp_out, "flattened image")->required();

    CLI::App* fit = app.add_subcommand("fit", "recover (l, e, lambda) from a profile CSV");
    add_model_flags(fit, fit_flags, false);
    fit->add_option("profile", fit_csv, "CSV with header s,x,y or x,y")->required();
    fit->add_option("--l-range", l_range, "lo:hi:count for l")->capture_default_str();
    fit->add_option("--e-range", e_range, "lo:hi:count for e")->capture_default_str();
    fit->add_option("--lambda-range", lambda_range, "lo:hi:count for lambda")->capture_default_str();
    fit->add_option("--m-range", m_range, "lo:hi:count for m (shifted Euler phase only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    }

    try {
        if (plot->parsed()) {
            const RunConfig cfg = resolve(plot_flags, plot);
            cmd_plot(cfg, prefix.empty() ? cfg.preset.value_or("curve") : prefix);
        } else if (table->parsed()) {
            cmd_table(resolve(table_flags, table), table_out);
        } else if (bend->parsed()) {
            cmd_bend(resolve(bend_flags, bend), bend_in, bend_out);
        } else if (dewarp->parsed()) {
            cmd_dewarp(resolve(dewarp_flags, dewarp), dewarp_in, dewarp_out);
        } else if (fit->parsed()) {
            const RunConfig cfg = resolve(fit_flags, fit);
            FitGrid grid;
            grid.s_end = parse_axis(l_range);
            grid.s_start = parse_axis(e_range);
            grid.lambda = parse_axis(lambda_range);
            if (!m_range.empty()) {
                grid.m = parse_axis(m_range);
            }
            cmd_fit(cfg, fit_csv, grid, out);
        }
    } catch (const NonMonotoneError& e) {
        err << "model error: " << e.what() << "\n";
        return kModelError;
    } catch (const GeometryError& e) {
        err << "model error: " << e.what() << "\n";
        return kModelError;
    } catch (const NumericError& e) {
        err << "model error: " << e.what() << "\n";
        return kModelError;
    } catch (const DomainError& e) {
        err << "model error: " << e.what() << "\n";
        return kModelError;
    } catch (const OutOfDomainError& e) {
        err << "model error: " << e.what() << "\n";
        return kModelError;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return kIoError;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIoError;
    }
    return kOk;
}

}  // namespace leafcurve::cli
