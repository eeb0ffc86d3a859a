#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "leafcurve/curves.hpp"
#include "leafcurve/errors.hpp"

namespace leafcurve {

/// Placement of the spiral so the axial end sits at the origin.
///
/// `pivot` is the spiral point at s_end; `rotation` is the direction of the
/// chord from that point back to the spiral point at s_start. The map
///   x' = c (x - px) + s (y - py),   y' = s (x - px) - c (y - py)
/// with (c, s) = (cos, sin) of the rotation takes the pivot to the origin and
/// lays the chord along the positive x-axis. Its linear part has determinant
/// -1: it is an isometry that also mirrors the curve.
template <typename Scalar>
struct Frame {
    Scalar rotation;
    Point2<Scalar> pivot;

    Eigen::Matrix<Scalar, 2, 2> linear() const {
        const Scalar c = std::cos(rotation), s_rot = std::sin(rotation);
        Eigen::Matrix<Scalar, 2, 2> m;
        m << c, s_rot, s_rot, -c;
        return m;
    }

    Point2<Scalar> apply(const Point2<Scalar>& p) const { return linear() * (p - pivot); }
};

template <typename Scalar>
struct ProfileSample {
    Scalar s;
    Point2<Scalar> transformed;
    Point2<Scalar> stretched;
};

/// The transformed and stretch-weighted cross-section, sampled uniformly in
/// arc length over `window` (the full [s_start, s_end] unless restricted).
template <typename Scalar>
struct BentProfile {
    SpiralParams<Scalar> params;
    Frame<Scalar> frame;
    Scalar window_lo;
    Scalar window_hi;
    std::vector<ProfileSample<Scalar>> samples;
};

template <typename Scalar>
Frame<Scalar> axial_frame(const SpiralParams<Scalar>& params, const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    params.validate();
    const Point2<Scalar> end = spiral_point(params.s_end, params.phase, tol);
    const Point2<Scalar> start = spiral_point(params.s_start, params.phase, tol);
    const Point2<Scalar> chord = start - end;
    if (chord.norm() < Scalar(1e-12)) {
        throw GeometryError("degenerate chord between curve ends; cannot orient the axial frame");
    }
    Scalar rotation = std::atan2(chord.y(), chord.x());
    if (rotation <= -std::numbers::pi_v<Scalar>) {
        rotation = std::numbers::pi_v<Scalar>;
    }
    return Frame<Scalar>{rotation, end};
}

namespace detail {

template <typename Scalar>
void require_on_span(Scalar t, const SpiralParams<Scalar>& params) {
    if (!(t >= params.s_start && t <= params.s_end)) {
        throw ArgumentError("arc length outside [s_start, s_end]");
    }
}

}  // namespace detail

/// Lateral-stretch weight at arc length t.
template <typename Scalar>
Scalar stretch_weight(Scalar t, const SpiralParams<Scalar>& params) {
    detail::require_on_span(t, params);
    if (params.lambda == Scalar(0)) {
        return Scalar(1);
    }
    const Scalar base = params.weight == WeightMode::End ? params.s_end - t : t - params.s_start;
    return std::pow(base, params.lambda);
}

template <typename Scalar>
Point2<Scalar> transformed_point(Scalar t, const SpiralParams<Scalar>& params, const Frame<Scalar>& frame,
                                 const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    detail::require_on_span(t, params);
    return frame.apply(spiral_point(t, params.phase, tol));
}

template <typename Scalar>
Point2<Scalar> stretched_point(Scalar t, const SpiralParams<Scalar>& params, const Frame<Scalar>& frame,
                               const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    return transformed_point(t, params, frame, tol) * stretch_weight(t, params);
}

/// Samples the bent profile at n arc lengths uniform over the window
/// [lo, hi] (default: the whole span). The frame always comes from the full
/// span, so a restricted window is a sub-arc of the same curve.
template <typename Scalar>
BentProfile<Scalar> build_profile(const SpiralParams<Scalar>& params, std::size_t n,
                                  const Tolerance<Scalar>& tol = Tolerance<Scalar>(),
                                  std::type_identity_t<std::optional<std::pair<Scalar, Scalar>>> window = std::nullopt) {
    params.validate();
    const Scalar lo = window ? window->first : params.s_start;
    const Scalar hi = window ? window->second : params.s_end;
    if (!(lo < hi) || lo < params.s_start || hi > params.s_end) {
        throw ArgumentError("profile window must be a non-empty sub-interval of [s_start, s_end]");
    }
    BentProfile<Scalar> profile{params, axial_frame(params, tol), lo, hi, {}};
    const auto grid = detail::uniform_grid(lo, hi, n);
    profile.samples.reserve(n);
    for (Scalar t : grid) {
        const Point2<Scalar> xt = transformed_point(t, params, profile.frame, tol);
        profile.samples.push_back({t, xt, Point2<Scalar>(xt * stretch_weight(t, params))});
    }
    return profile;
}

}  // namespace leafcurve
