#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <variant>
#include <vector>

#include "leafcurve/errors.hpp"
#include "leafcurve/phase.hpp"
#include "leafcurve/specfun.hpp"

namespace leafcurve {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

/// Where the lateral-stretch weight is anchored.
///  End: w(t) = (l - t)^lambda, zero at the axial end.
///  Arc: w(t) = (t - e)^lambda, zero at the free end.
enum class WeightMode { End, Arc };

/// Parameters of the bent-page cross-section: phase law, arc-length span
/// [s_start, s_end] (the free end e and the axial end l) and stretch exponent.
template <typename Scalar>
struct SpiralParams {
    PhaseKind<Scalar> phase = PhaseKind<Scalar>::cornu();
    Scalar s_start = Scalar(0);
    Scalar s_end = Scalar(1);
    Scalar lambda = Scalar(0);
    WeightMode weight = WeightMode::End;

    void validate() const {
        if (!std::isfinite(s_start) || !std::isfinite(s_end) || !std::isfinite(lambda) ||
            !std::isfinite(phase.m)) {
            throw ArgumentError("spiral parameters must be finite");
        }
        if (!(s_start < s_end)) {
            throw ArgumentError("spiral parameters need s_start < s_end");
        }
        if (lambda < Scalar(0)) {
            throw ArgumentError("stretch exponent lambda must be >= 0");
        }
    }

    friend bool operator==(const SpiralParams&, const SpiralParams&) = default;
};

template <typename Scalar>
struct ElasticaParams {
    Scalar k = Scalar(0.3);
    Scalar s_start = Scalar(0);
    Scalar s_end = Scalar(1);

    void validate() const {
        EllipticModulus<Scalar>{k};
        if (!std::isfinite(s_start) || !std::isfinite(s_end) || !(s_start < s_end)) {
            throw ArgumentError("elastica parameters need finite s_start < s_end");
        }
    }

    friend bool operator==(const ElasticaParams&, const ElasticaParams&) = default;
};

template <typename Scalar>
struct CurveSample {
    Scalar s;
    Point2<Scalar> p;
};

template <typename Scalar>
struct SampledCurve {
    std::variant<SpiralParams<Scalar>, ElasticaParams<Scalar>> params;
    std::vector<CurveSample<Scalar>> samples;
};

template <typename Scalar>
Scalar spiral_phase(Scalar s, const PhaseKind<Scalar>& phase) {
    return detail::phase_value(s, phase);
}

/// Curvature d(phi)/ds: 2s for Cornu, m - s for the shifted Euler law.
template <typename Scalar>
Scalar spiral_curvature(Scalar s, const PhaseKind<Scalar>& phase) {
    if (phase.is_cornu()) {
        return Scalar(2) * s;
    }
    return phase.m - s;
}

/// Arc-length parameterised spiral point (integral cos phi, integral sin phi).
template <typename Scalar>
Point2<Scalar> spiral_point(Scalar s, const PhaseKind<Scalar>& phase,
                            const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    return phase_integral_pair(s, phase, tol);
}

template <typename Scalar>
Point2<Scalar> spiral_tangent(Scalar s, const PhaseKind<Scalar>& phase) {
    const Scalar phi = spiral_phase(s, phase);
    return Point2<Scalar>(std::cos(phi), std::sin(phi));
}

/// Elastica in modulus form: (2k cn(s, k), 2 eps(s, k) - s).
template <typename Scalar>
Point2<Scalar> elastica_point(Scalar s, const ElasticaParams<Scalar>& params) {
    const EllipticModulus<Scalar> k(params.k);
    return Point2<Scalar>(Scalar(2) * params.k * jacobi_cn(s, k), Scalar(2) * jacobi_epsilon(s, k) - s);
}

namespace detail {

template <typename Scalar>
std::vector<Scalar> uniform_grid(Scalar lo, Scalar hi, std::size_t n) {
    if (n < 2) {
        throw ArgumentError("sampling needs at least 2 points");
    }
    std::vector<Scalar> grid(n);
    const Scalar span = hi - lo;
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = lo + span * static_cast<Scalar>(i) / static_cast<Scalar>(n - 1);
    }
    grid.back() = hi;
    return grid;
}

}  // namespace detail

template <typename Scalar>
SampledCurve<Scalar> sample_spiral(const SpiralParams<Scalar>& params, std::size_t n,
                                   const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    params.validate();
    SampledCurve<Scalar> curve{params, {}};
    curve.samples.reserve(n);
    for (Scalar s : detail::uniform_grid(params.s_start, params.s_end, n)) {
        curve.samples.push_back({s, spiral_point(s, params.phase, tol)});
    }
    return curve;
}

template <typename Scalar>
SampledCurve<Scalar> sample_elastica(const ElasticaParams<Scalar>& params, std::size_t n) {
    params.validate();
    SampledCurve<Scalar> curve{params, {}};
    curve.samples.reserve(n);
    for (Scalar s : detail::uniform_grid(params.s_start, params.s_end, n)) {
        curve.samples.push_back({s, elastica_point(s, params)});
    }
    return curve;
}

}  // namespace leafcurve
