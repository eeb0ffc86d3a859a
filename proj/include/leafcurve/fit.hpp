#pragma once

#include <optional>

#include "leafcurve/bentframe.hpp"

namespace leafcurve {

/// `count` equally spaced values over [lo, hi]; count == 1 pins the axis at lo.
struct FitAxis {
    double lo;
    double hi;
    int count;
};

/// Search box for the fit. `m` is only used with the shifted Euler phase.
struct FitGrid {
    FitAxis s_end{1.5, 3.0, 7};
    FitAxis s_start{-1.5, 0.0, 7};
    FitAxis lambda{0.0, 3.0, 7};
    std::optional<FitAxis> m;
};

struct FitOptions {
    PhaseKind<double> phase = PhaseKind<double>::cornu();
    WeightMode weight = WeightMode::End;
    int max_sweeps = 200;
    /// Refinement stops once a sweep moves no parameter by more than this.
    double step_tol = 1e-11;
};

struct FitResult {
    SpiralParams<double> params;
    double rms_residual;
    int iterations;
};

/// RMS distance between the observed points and the candidate's stretched
/// profile evaluated at the observed arc fractions (s - s_0) / (s_last - s_0).
/// Returns +infinity for candidates that violate the parameter invariants or
/// have a degenerate frame.
double profile_rms(const SampledCurve<double>& observed, const SpiralParams<double>& candidate,
                   const Tolerance<double>& tol = Tolerance<double>());

/// Recovers (s_end, s_start, lambda[, m]) from a profile polyline: exhaustive
/// grid search in axis order, then coordinate-wise golden-section refinement
/// with a pattern step, confined to the grid's bounding box. Deterministic.
FitResult fit_params(const SampledCurve<double>& observed, const FitGrid& grid,
                     const Tolerance<double>& tol = Tolerance<double>(), const FitOptions& options = {});

}  // namespace leafcurve
