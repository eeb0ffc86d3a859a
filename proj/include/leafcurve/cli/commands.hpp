#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "leafcurve/cli/config.hpp"
#include "leafcurve/fit.hpp"
#include "leafcurve/flattenmap.hpp"

namespace leafcurve::cli {

/// Process exit codes; a stable contract for scripts.
enum ExitCode : int { kOk = 0, kUsageError = 1, kModelError = 2, kIoError = 3 };

struct Polyline {
    std::vector<double> s;
    std::vector<double> x;
    std::vector<double> y;
};

/// The curve selected by `cfg` (spiral, elastica, or stretched profile),
/// sampled at cfg.samples points.
Polyline plot_polyline(const RunConfig& cfg);

/// `s,x,y` header then one row per sample, 9 significant digits.
std::string polyline_csv(const Polyline& line);
/// Standalone SVG with one polyline; viewBox fitted with a 5% margin, y up.
std::string polyline_svg(const Polyline& line, std::string_view title);

/// The flatten map for the profile in `cfg`, restricted to the single-valued
/// window when cfg.fold_free is set.
FlattenMap config_map(const RunConfig& cfg);

/// Reads `s,x,y` or `x,y` CSV. Without an s column the arc length is the
/// cumulative chord length.
SampledCurve<double> read_profile_csv(std::string_view text);

/// Parses "lo:hi:count" (or a single value, pinning the axis).
FitAxis parse_axis(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

void cmd_plot(const RunConfig& cfg, const std::string& prefix);
void cmd_table(const RunConfig& cfg, const std::string& path);
void cmd_bend(const RunConfig& cfg, const std::string& in_path, const std::string& out_path);
void cmd_dewarp(const RunConfig& cfg, const std::string& in_path, const std::string& out_path);
/// Prints key=value lines: l, e, lambda, [m,] rms_residual, iterations.
FitResult cmd_fit(const RunConfig& cfg, const std::string& csv_path, const FitGrid& grid, std::ostream& out);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leafcurve::cli
