#pragma once

// Reference computations for the tests. Nothing here calls into leafcurve:
// Fresnel integrals come from their Maclaurin series, quadratures from a
// plain adaptive Simpson rule, elliptic functions from Boost.Math.

#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef LEAFCURVE_GOLDEN_DIR
#error "LEAFCURVE_GOLDEN_DIR must point at tests/golden"
#endif

namespace oracle {

// Series truncated once |term| < 1e-12.
inline long double fresnel_c_series(long double t) {
    const long double t4 = t * t * t * t;
    long double p = 1.0L;  // (-1)^n t^{4n} / (2n)!
    long double sum = 0.0L;
    for (int n = 0; n < 200; ++n) {
        const long double term = t * p / (4 * n + 1);
        sum += term;
        if (std::fabs(term) < 1e-12L && n > 0) {
            break;
        }
        p = -p * t4 / ((2.0L * n + 1) * (2.0L * n + 2));
    }
    return sum;
}

inline long double fresnel_s_series(long double t) {
    const long double t4 = t * t * t * t;
    long double q = t * t;  // (-1)^n t^{4n+2} / (2n+1)!
    long double sum = 0.0L;
    for (int n = 0; n < 200; ++n) {
        const long double term = t * q / (4 * n + 3);
        sum += term;
        if (std::fabs(term) < 1e-12L && n > 0) {
            break;
        }
        q = -q * t4 / ((2.0L * n + 2) * (2.0L * n + 3));
    }
    return sum;
}

namespace detail {
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                           double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * eps) {
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double eps = 1e-13) {
    if (a == b) {
        return 0.0;
    }
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_step(f, a, b, fa, fm, fb, whole, eps, 50);
}

// Boost takes the modulus first.
inline double cn(double u, double k) { return boost::math::jacobi_cn(k, u); }
inline double sn(double u, double k) { return boost::math::jacobi_sn(k, u); }
inline double dn(double u, double k) { return boost::math::jacobi_dn(k, u); }

inline double epsilon(double u, double k) {
    return adaptive_simpson([k](double v) { return dn(v, k) * dn(v, k); }, 0.0, u, 1e-14);
}

// Bent profile composed directly from the reference-model formulas:
//   m = C(l), n = S(l), a = C(e), b = S(e), theta = atan2(b - n, a - m)
//   x = c (C(t) - m) + s (S(t) - n),  y = s (C(t) - m) - c (S(t) - n)
//   weight (l - t)^lambda
struct ProfileOracle {
    long double e, l, lambda;
    long double m, n, c, s;

    ProfileOracle(long double e_, long double l_, long double lambda_) : e(e_), l(l_), lambda(lambda_) {
        m = fresnel_c_series(l);
        n = fresnel_s_series(l);
        const long double a = fresnel_c_series(e);
        const long double b = fresnel_s_series(e);
        const long double theta = std::atan2(b - n, a - m);
        c = std::cos(theta);
        s = std::sin(theta);
    }

    long double weight(long double t) const { return lambda == 0 ? 1.0L : std::pow(l - t, lambda); }
    long double x(long double t) const {
        return (c * (fresnel_c_series(t) - m) + s * (fresnel_s_series(t) - n)) * weight(t);
    }
    long double y(long double t) const {
        return (s * (fresnel_c_series(t) - m) - c * (fresnel_s_series(t) - n)) * weight(t);
    }
};

inline nlohmann::json golden_json(const std::string& name) {
    std::ifstream in(std::string(LEAFCURVE_GOLDEN_DIR) + "/" + name);
    if (!in) {
        throw std::runtime_error("missing golden file " + name);
    }
    return nlohmann::json::parse(in);
}

inline double golden_scalar(const std::string& key) {
    static const nlohmann::json j = golden_json("scalars.json");
    return std::stod(j.at(key).get<std::string>());
}

inline std::vector<std::vector<double>> golden_csv(const std::string& name) {
    std::ifstream in(std::string(LEAFCURVE_GOLDEN_DIR) + "/" + name);
    if (!in) {
        throw std::runtime_error("missing golden file " + name);
    }
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            row.push_back(std::stod(field));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace oracle
