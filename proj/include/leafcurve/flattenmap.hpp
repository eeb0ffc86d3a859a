#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leafcurve/bentframe.hpp"

namespace leafcurve {

/// Piecewise-linear correspondence between flat arc length s and the
/// projected coordinate u of the bent profile.
///
/// Knots are strictly increasing in s and strictly monotone in u (either
/// direction). forward() and inverse() interpolate linearly between adjacent
/// knots and return knot values exactly at knots.
class FlattenMap {
public:
    static constexpr std::size_t kMinKnots = 8;

    /// Throws ArgumentError for fewer than kMinKnots knots or non-increasing s,
    /// NonMonotoneError when u reverses direction.
    FlattenMap(std::vector<double> s, std::vector<double> u);

    double forward(double s) const;
    double inverse(double u) const;

    std::span<const double> s_knots() const { return s_; }
    std::span<const double> u_knots() const { return u_; }
    std::size_t size() const { return s_.size(); }

    std::pair<double, double> s_range() const { return {s_.front(), s_.back()}; }
    /// [u_min, u_max] regardless of direction.
    std::pair<double, double> u_range() const;
    /// u at the first and last knot (in s order).
    double u_first() const { return u_.front(); }
    double u_last() const { return u_.back(); }
    bool increasing() const { return increasing_; }

private:
    std::vector<double> s_;
    std::vector<double> u_;
    bool increasing_;
};

/// Pairs each profile sample's arc length with its stretched x-coordinate.
FlattenMap build_map(const BentProfile<double>& profile);

/// The widest arc-length window [lo, hi] on which the projected coordinate is
/// strictly monotone and attained by no other part of the curve, so every
/// projected column sees exactly one point of the page.
///
/// Located on a `probes`-point sampling and its interior ends refined by
/// bisection. Equals [s_start, s_end] when the whole projection is monotone.
std::pair<double, double> single_valued_window(const SpiralParams<double>& params,
                                               const Tolerance<double>& tol = Tolerance<double>(),
                                               std::size_t probes = 2048);

/// CSV with header `s,u`, one knot per line, 9 significant digits.
std::string write_map_csv(const FlattenMap& map);
FlattenMap read_map_csv(std::string_view text);

}  // namespace leafcurve
