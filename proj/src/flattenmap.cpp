#include "leafcurve/flattenmap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "leafcurve/errors.hpp"
#include "leafcurve/format.hpp"

namespace leafcurve {

namespace {

double lerp_segment(std::span<const double> from, std::span<const double> to, std::size_t i, double x) {
    if (x == from[i]) {
        return to[i];
    }
    if (x == from[i + 1]) {
        return to[i + 1];
    }
    const double alpha = (x - from[i]) / (from[i + 1] - from[i]);
    return to[i] + alpha * (to[i + 1] - to[i]);
}

}  // namespace

FlattenMap::FlattenMap(std::vector<double> s, std::vector<double> u) : s_(std::move(s)), u_(std::move(u)) {
    if (s_.size() != u_.size()) {
        throw ArgumentError("flatten map needs as many u knots as s knots");
    }
    if (s_.size() < kMinKnots) {
        throw ArgumentError("flatten map needs at least " + std::to_string(kMinKnots) + " knots, got " +
                            std::to_string(s_.size()));
    }
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (!std::isfinite(s_[i]) || !std::isfinite(u_[i])) {
            throw NumericError("flatten map knots must be finite");
        }
        if (i > 0 && !(s_[i] > s_[i - 1])) {
            throw ArgumentError("flatten map knots must be strictly increasing in s");
        }
    }
    increasing_ = u_[1] > u_[0];
    for (std::size_t i = 1; i < u_.size(); ++i) {
        const bool ok = increasing_ ? u_[i] > u_[i - 1] : u_[i] < u_[i - 1];
        if (!ok) {
            throw NonMonotoneError(s_[i - 1], s_[i]);
        }
    }
}

std::pair<double, double> FlattenMap::u_range() const {
    return increasing_ ? std::pair{u_.front(), u_.back()} : std::pair{u_.back(), u_.front()};
}

double FlattenMap::forward(double s) const {
    if (!(s >= s_.front() && s <= s_.back())) {
        throw OutOfDomainError(s, s_.front(), s_.back());
    }
    auto it = std::upper_bound(s_.begin(), s_.end(), s);
    std::size_t i = it == s_.end() ? s_.size() - 2 : static_cast<std::size_t>(it - s_.begin()) - 1;
    return lerp_segment(s_, u_, i, s);
}

double FlattenMap::inverse(double u) const {
    const auto [lo, hi] = u_range();
    if (!(u >= lo && u <= hi)) {
        throw OutOfDomainError(u, lo, hi);
    }
    std::size_t i;
    if (increasing_) {
        auto it = std::upper_bound(u_.begin(), u_.end(), u);
        i = it == u_.end() ? u_.size() - 2 : static_cast<std::size_t>(it - u_.begin()) - 1;
    } else {
        auto it = std::upper_bound(u_.begin(), u_.end(), u, std::greater<>());
        i = it == u_.end() ? u_.size() - 2 : static_cast<std::size_t>(it - u_.begin()) - 1;
    }
    return lerp_segment(u_, s_, i, u);
}

FlattenMap build_map(const BentProfile<double>& profile) {
    std::vector<double> s;
    std::vector<double> u;
    s.reserve(profile.samples.size());
    u.reserve(profile.samples.size());
    for (const auto& sample : profile.samples) {
        s.push_back(sample.s);
        u.push_back(sample.stretched.x());
    }
    return FlattenMap(std::move(s), std::move(u));
}

std::pair<double, double> single_valued_window(const SpiralParams<double>& params, const Tolerance<double>& tol,
                                               std::size_t probes) {
    const BentProfile<double> profile = build_profile(params, probes, tol);
    const std::size_t n = profile.samples.size();
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = profile.samples[i].stretched.x();
    }

    // Maximal runs [first, last] of strictly monotone samples.
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t first = 0;
    int direction = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const int d = u[i] > u[i - 1] ? 1 : (u[i] < u[i - 1] ? -1 : 0);
        if (d == 0) {
            if (i - 1 > first) {
                runs.emplace_back(first, i - 1);
            }
            first = i;
            direction = 0;
        } else if (direction == 0) {
            direction = d;
        } else if (d != direction) {
            runs.emplace_back(first, i - 1);
            first = i - 1;
            direction = d;
        }
    }
    if (n - 1 > first) {
        runs.emplace_back(first, n - 1);
    }
    if (runs.empty()) {
        throw GeometryError("projected coordinate is constant; no single-valued window");
    }

    // Open u-intervals covered by the curve outside a run; a run sample
    // inside any of them shares its column with another part of the page.
    struct Cover {
        double lo;
        double hi;
    };
    auto covers_for = [&](std::size_t a, std::size_t b) {
        std::vector<Cover> covers;
        if (a > 0) {
            const auto [mn, mx] = std::minmax_element(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(a) + 1);
            covers.push_back({*mn, *mx});
        }
        if (b + 1 < n) {
            const auto [mn, mx] = std::minmax_element(u.begin() + static_cast<std::ptrdiff_t>(b), u.end());
            covers.push_back({*mn, *mx});
        }
        return covers;
    };
    auto unique_value = [](double v, const std::vector<Cover>& covers) {
        return std::all_of(covers.begin(), covers.end(), [v](const Cover& c) { return !(v > c.lo && v < c.hi); });
    };

    double best_len = -1.0;
    double best_lo = 0.0;
    double best_hi = 0.0;
    for (const auto& [a, b] : runs) {
        const auto covers = covers_for(a, b);
        std::size_t i = a;
        while (i <= b) {
            if (!unique_value(u[i], covers)) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + 1 <= b && unique_value(u[j + 1], covers)) {
                ++j;
            }
            auto u_at = [&](double t) { return stretched_point(t, params, profile.frame, tol).x(); };
            // Bisect each end that stops short of a non-unique neighbour.
            auto refine = [&](double inside, double outside) {
                for (int it = 0; it < 80; ++it) {
                    const double mid = 0.5 * (inside + outside);
                    if (mid == inside || mid == outside) {
                        break;
                    }
                    (unique_value(u_at(mid), covers) ? inside : outside) = mid;
                }
                return inside;
            };
            const double lo = i > a ? refine(profile.samples[i].s, profile.samples[i - 1].s) : profile.samples[i].s;
            const double hi = j < b ? refine(profile.samples[j].s, profile.samples[j + 1].s) : profile.samples[j].s;
            if (hi - lo > best_len) {
                best_len = hi - lo;
                best_lo = lo;
                best_hi = hi;
            }
            i = j + 1;
        }
    }
    if (!(best_len > 0.0)) {
        throw GeometryError("no single-valued window of positive length");
    }
    return {best_lo, best_hi};
}

std::string write_map_csv(const FlattenMap& map) {
    std::string out = "s,u\n";
    const auto s = map.s_knots();
    const auto u = map.u_knots();
    for (std::size_t i = 0; i < map.size(); ++i) {
        out += format_number(s[i]);
        out += ',';
        out += format_number(u[i]);
        out += '\n';
    }
    return out;
}

FlattenMap read_map_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || (line != "s,u" && line != "s,u\r")) {
        throw FormatError("flatten map CSV must start with header 's,u'");
    }
    std::vector<double> s;
    std::vector<double> u;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw FormatError("flatten map CSV line " + std::to_string(line_no) + ": expected two fields");
        }
        s.push_back(parse_number(line.substr(0, comma)));
        u.push_back(parse_number(line.substr(comma + 1)));
    }
    return FlattenMap(std::move(s), std::move(u));
}

}  // namespace leafcurve
