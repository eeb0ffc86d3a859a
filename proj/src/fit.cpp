#include "leafcurve/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "leafcurve/errors.hpp"

namespace leafcurve {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_axis(const FitAxis& axis, const char* name) {
    if (axis.count < 1 || !std::isfinite(axis.lo) || !std::isfinite(axis.hi) || axis.lo > axis.hi) {
        throw ArgumentError(std::string("fit grid axis '") + name + "' is empty");
    }
}

double axis_value(const FitAxis& axis, int i) {
    if (axis.count == 1) {
        return axis.lo;
    }
    return axis.lo + (axis.hi - axis.lo) * static_cast<double>(i) / static_cast<double>(axis.count - 1);
}

double axis_step(const FitAxis& axis) {
    return axis.count > 1 ? (axis.hi - axis.lo) / static_cast<double>(axis.count - 1) : 0.0;
}

// Parameter vector layout: s_end, s_start, lambda, m.
using Vec = std::array<double, 4>;

struct Problem {
    const SampledCurve<double>& observed;
    const Tolerance<double>& tol;
    const FitOptions& options;
    bool use_m;

    SpiralParams<double> params_of(const Vec& x) const {
        SpiralParams<double> p;
        p.phase = options.phase;
        if (use_m) {
            p.phase = PhaseKind<double>::shifted_euler(x[3]);
        }
        p.s_end = x[0];
        p.s_start = x[1];
        p.lambda = x[2];
        p.weight = options.weight;
        return p;
    }

    double operator()(const Vec& x) const { return profile_rms(observed, params_of(x), tol); }
};

// Golden-section minimisation of f on [a, b]; returns the abscissa of the
// best value seen, which includes the starting point `x0`.
template <typename F>
double golden_section(const F& f, double a, double b, double x0, double f0, double xtol) {
    constexpr double invphi = 0.6180339887498948482;
    double best_x = x0;
    double best_f = f0;
    auto track = [&](double x, double fx) {
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    };
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    track(c, fc);
    track(d, fd);
    while (b - a > xtol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
            track(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
            track(d, fd);
        }
    }
    return best_x;
}

}  // namespace

double profile_rms(const SampledCurve<double>& observed, const SpiralParams<double>& candidate,
                   const Tolerance<double>& tol) {
    const auto& samples = observed.samples;
    if (samples.size() < 2) {
        throw ArgumentError("observed profile needs at least 2 samples");
    }
    try {
        candidate.validate();
        const Frame<double> frame = axial_frame(candidate, tol);
        const double s0 = samples.front().s;
        const double span = samples.back().s - s0;
        const double len = candidate.s_end - candidate.s_start;
        double sum = 0.0;
        for (const auto& sample : samples) {
            const double fraction = (sample.s - s0) / span;
            const double t = std::clamp(candidate.s_start + fraction * len, candidate.s_start, candidate.s_end);
            sum += (stretched_point(t, candidate, frame, tol) - sample.p).squaredNorm();
        }
        const double rms = std::sqrt(sum / static_cast<double>(samples.size()));
        return std::isfinite(rms) ? rms : kInf;
    } catch (const ArgumentError&) {
        return kInf;
    } catch (const GeometryError&) {
        return kInf;
    }
}

FitResult fit_params(const SampledCurve<double>& observed, const FitGrid& grid, const Tolerance<double>& tol,
                     const FitOptions& options) {
    if (observed.samples.size() < 16) {
        throw ArgumentError("fit needs at least 16 observed samples, got " + std::to_string(observed.samples.size()));
    }
    for (std::size_t i = 1; i < observed.samples.size(); ++i) {
        if (!(observed.samples[i].s > observed.samples[i - 1].s)) {
            throw ArgumentError("observed samples must be strictly increasing in s");
        }
    }
    check_axis(grid.s_end, "l");
    check_axis(grid.s_start, "e");
    check_axis(grid.lambda, "lambda");
    const bool use_m = grid.m.has_value();
    if (use_m) {
        check_axis(*grid.m, "m");
    }
    const FitAxis m_axis = use_m ? *grid.m : FitAxis{options.phase.m, options.phase.m, 1};
    const std::array<FitAxis, 4> axes{grid.s_end, grid.s_start, grid.lambda, m_axis};

    const Problem f{observed, tol, options, use_m};

    Vec best{};
    double best_rms = kInf;
    for (int i = 0; i < axes[0].count; ++i) {
        for (int j = 0; j < axes[1].count; ++j) {
            for (int k = 0; k < axes[2].count; ++k) {
                for (int q = 0; q < axes[3].count; ++q) {
                    const Vec x{axis_value(axes[0], i), axis_value(axes[1], j), axis_value(axes[2], k),
                                axis_value(axes[3], q)};
                    const double r = f(x);
                    if (r < best_rms) {
                        best_rms = r;
                        best = x;
                    }
                }
            }
        }
    }
    if (!std::isfinite(best_rms)) {
        throw NumericError("no grid point produced a finite residual");
    }

    std::array<double, 4> step{};
    for (std::size_t a = 0; a < 4; ++a) {
        step[a] = axis_step(axes[a]);
    }

    int sweeps = 0;
    while (sweeps < options.max_sweeps) {
        ++sweeps;
        const Vec before = best;
        double moved = 0.0;
        for (std::size_t a = 0; a < 4; ++a) {
            if (step[a] == 0.0) {
                continue;
            }
            const double lo = std::max(axes[a].lo, best[a] - step[a]);
            const double hi = std::min(axes[a].hi, best[a] + step[a]);
            auto along = [&](double v) {
                Vec x = best;
                x[a] = v;
                return f(x);
            };
            const double v = golden_section(along, lo, hi, best[a], best_rms, options.step_tol);
            if (v != best[a]) {
                moved = std::max(moved, std::abs(v - best[a]));
                best[a] = v;
                best_rms = along(v);
            }
            // Shrink the bracket towards the last move, but never below the tolerance.
            step[a] = std::max(std::min(step[a], 4.0 * std::abs(v - before[a]) + 1e3 * options.step_tol),
                               options.step_tol);
        }

        // Pattern step along this sweep's net displacement.
        Vec dir{};
        double dir_norm = 0.0;
        for (std::size_t a = 0; a < 4; ++a) {
            dir[a] = best[a] - before[a];
            dir_norm = std::max(dir_norm, std::abs(dir[a]));
        }
        if (dir_norm > 0.0) {
            double t_hi = 4.0;
            for (std::size_t a = 0; a < 4; ++a) {
                if (dir[a] > 0.0) {
                    t_hi = std::min(t_hi, (axes[a].hi - best[a]) / dir[a]);
                } else if (dir[a] < 0.0) {
                    t_hi = std::min(t_hi, (axes[a].lo - best[a]) / dir[a]);
                }
            }
            if (t_hi > 0.0) {
                auto along = [&](double t) {
                    Vec x = best;
                    for (std::size_t a = 0; a < 4; ++a) {
                        x[a] += t * dir[a];
                    }
                    return f(x);
                };
                const double t = golden_section(along, 0.0, t_hi, 0.0, best_rms, options.step_tol / dir_norm);
                if (t != 0.0) {
                    for (std::size_t a = 0; a < 4; ++a) {
                        best[a] += t * dir[a];
                    }
                    best_rms = along(0.0);
                    moved = std::max(moved, t * dir_norm);
                }
            }
        }
        if (moved <= options.step_tol) {
            break;
        }
    }

    if (!std::isfinite(best_rms)) {
        throw NumericError("fit residual is not finite");
    }
    return FitResult{f.params_of(best), best_rms, sweeps};
}

}  // namespace leafcurve
