#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "leafcurve/errors.hpp"
#include "leafcurve/phase.hpp"
#include "leafcurve/quadrature.hpp"

namespace leafcurve {

enum class Trig { Cos, Sin };

/// Modulus k of the Jacobi elliptic functions, 0 <= k <= 1.
///
/// This is the modulus, not the parameter m = k^2: cn(u, k) here equals
/// Boost's jacobi_cn(k, u) and mpmath's ellipfun('cn', u, m=k*k).
template <typename Scalar>
class EllipticModulus {
public:
    explicit EllipticModulus(Scalar k) : k_(k) {
        if (!(k >= Scalar(0) && k <= Scalar(1))) {
            throw DomainError("elliptic modulus must lie in [0, 1]");
        }
    }
    Scalar value() const { return k_; }

private:
    Scalar k_;
};

namespace detail {

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + ": argument must be finite");
    }
}

template <typename Scalar>
Scalar phase_value(Scalar u, const PhaseKind<Scalar>& phase) {
    if (phase.is_cornu()) {
        return u * u;
    }
    return phase.m * u - u * u / Scalar(2);
}

// Carlson's symmetric integrals by the duplication theorem.
template <typename Scalar>
Scalar carlson_rf(Scalar x, Scalar y, Scalar z) {
    constexpr Scalar errtol = Scalar(0.0025);
    Scalar ave, dx, dy, dz;
    do {
        const Scalar sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const Scalar lambda = sx * (sy + sz) + sy * sz;
        x = (x + lambda) / Scalar(4);
        y = (y + lambda) / Scalar(4);
        z = (z + lambda) / Scalar(4);
        ave = (x + y + z) / Scalar(3);
        dx = (ave - x) / ave;
        dy = (ave - y) / ave;
        dz = (ave - z) / ave;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > errtol);
    const Scalar e2 = dx * dy - dz * dz;
    const Scalar e3 = dx * dy * dz;
    return (Scalar(1) + (e2 / Scalar(24) - Scalar(0.1) - Scalar(3) * e3 / Scalar(44)) * e2 +
            e3 / Scalar(14)) /
           std::sqrt(ave);
}

template <typename Scalar>
Scalar carlson_rd(Scalar x, Scalar y, Scalar z) {
    constexpr Scalar errtol = Scalar(0.0015);
    constexpr Scalar c1 = Scalar(3) / Scalar(14), c2 = Scalar(1) / Scalar(6);
    constexpr Scalar c3 = Scalar(9) / Scalar(22), c4 = Scalar(3) / Scalar(26);
    constexpr Scalar c5 = c3 / Scalar(4), c6 = c4 * Scalar(1.5);
    Scalar sum = 0, fac = 1, ave, dx, dy, dz;
    do {
        const Scalar sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        const Scalar lambda = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (z + lambda));
        fac /= Scalar(4);
        x = (x + lambda) / Scalar(4);
        y = (y + lambda) / Scalar(4);
        z = (z + lambda) / Scalar(4);
        ave = (x + y + Scalar(3) * z) / Scalar(5);
        dx = (ave - x) / ave;
        dy = (ave - y) / ave;
        dz = (ave - z) / ave;
    } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > errtol);
    const Scalar ea = dx * dy, eb = dz * dz;
    const Scalar ec = ea - eb, ed = ea - Scalar(6) * eb, ee = ed + ec + ec;
    return Scalar(3) * sum +
           fac * (Scalar(1) + ed * (-c1 + c5 * ed - c6 * dz * ee) + dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
               (ave * std::sqrt(ave));
}

}  // namespace detail

/// Integral of cos(phi(u)) or sin(phi(u)) from 0 to t.
///
/// For the Cornu phase the integrand is even, so the integral is evaluated
/// on |t| and the sign reapplied; this makes fresnel_c and fresnel_s odd to
/// the last bit.
template <typename Scalar>
Scalar phase_integral(Scalar t, const PhaseKind<Scalar>& phase, Trig trig,
                      const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    detail::require_finite(static_cast<double>(t), "phase_integral");
    detail::require_finite(static_cast<double>(phase.m), "phase_integral");
    auto integrand = [&](Scalar u) {
        const Scalar phi = detail::phase_value(u, phase);
        return trig == Trig::Cos ? std::cos(phi) : std::sin(phi);
    };
    if (phase.is_cornu()) {
        const Scalar a = std::abs(t);
        const Scalar r = integrate(integrand, Scalar(0), a, tol.abs_tol).value;
        return t < 0 ? -r : r;
    }
    return integrate(integrand, Scalar(0), t, tol.abs_tol).value;
}

/// C(t) = integral of cos(u^2) from 0 to t (no pi/2 normalisation).
template <typename Scalar>
Scalar fresnel_c(Scalar t, const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    return phase_integral(t, PhaseKind<Scalar>::cornu(), Trig::Cos, tol);
}

/// S(t) = integral of sin(u^2) from 0 to t.
template <typename Scalar>
Scalar fresnel_s(Scalar t, const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    return phase_integral(t, PhaseKind<Scalar>::cornu(), Trig::Sin, tol);
}

/// Both phase integrals in one adaptive pass: (integral cos phi, integral sin phi).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> phase_integral_pair(Scalar t, const PhaseKind<Scalar>& phase,
                                                 const Tolerance<Scalar>& tol = Tolerance<Scalar>()) {
    using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
    detail::require_finite(static_cast<double>(t), "phase_integral_pair");
    detail::require_finite(static_cast<double>(phase.m), "phase_integral_pair");
    auto integrand = [&](Scalar u) {
        const Scalar phi = detail::phase_value(u, phase);
        return Vec2(std::cos(phi), std::sin(phi));
    };
    if (phase.is_cornu()) {
        const Vec2 r = integrate(integrand, Scalar(0), std::abs(t), tol.abs_tol).value;
        return t < 0 ? Vec2(-r) : r;
    }
    return integrate(integrand, Scalar(0), t, tol.abs_tol).value;
}

template <typename Scalar>
struct JacobiValues {
    Scalar sn;
    Scalar cn;
    Scalar dn;
    Scalar amplitude;  // am(u, k), unwrapped (continuous in u)
};

/// sn, cn, dn and am by the arithmetic-geometric mean and descending Landen
/// transformation. Degenerate moduli take their closed forms: k = 0 gives
/// the circular functions, k = 1 the hyperbolic ones.
template <typename Scalar>
JacobiValues<Scalar> jacobi_sncndn(Scalar u, EllipticModulus<Scalar> modulus) {
    detail::require_finite(static_cast<double>(u), "jacobi_sncndn");
    const Scalar k = modulus.value();
    if (k == Scalar(0)) {
        return {std::sin(u), std::cos(u), Scalar(1), u};
    }
    if (k == Scalar(1)) {
        const Scalar sech = Scalar(1) / std::cosh(u);
        return {std::tanh(u), sech, sech, Scalar(2) * std::atan(std::tanh(u / Scalar(2)))};
    }

    constexpr int max_steps = 64;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    Scalar a[max_steps + 1];
    Scalar c[max_steps + 1];
    a[0] = Scalar(1);
    c[0] = k;
    Scalar b = std::sqrt((Scalar(1) - k) * (Scalar(1) + k));
    int n = 0;
    while (n < max_steps && std::abs(c[n]) > eps * a[n]) {
        const Scalar an = a[n];
        a[n + 1] = (an + b) / Scalar(2);
        c[n + 1] = (an - b) / Scalar(2);
        b = std::sqrt(an * b);
        ++n;
    }

    Scalar phi = std::ldexp(a[n] * u, n);
    Scalar phi_above = phi;
    for (int j = n; j >= 1; --j) {
        phi_above = phi;
        phi = (phi + std::asin(c[j] / a[j] * std::sin(phi))) / Scalar(2);
    }
    const Scalar sn = std::sin(phi);
    const Scalar cn = std::cos(phi);
    const Scalar dn = n == 0 ? Scalar(1) : cn / std::cos(phi_above - phi);
    return {sn, cn, dn, phi};
}

template <typename Scalar>
Scalar jacobi_cn(Scalar u, EllipticModulus<Scalar> k) {
    return jacobi_sncndn(u, k).cn;
}

template <typename Scalar>
Scalar jacobi_cn(Scalar u, Scalar k) {
    return jacobi_cn(u, EllipticModulus<Scalar>(k));
}

/// Jacobi epsilon: integral of dn^2(v, k) from 0 to u, which equals the
/// incomplete elliptic integral of the second kind at the amplitude am(u, k).
/// Evaluated through Carlson's R_F and R_D with the amplitude reduced to
/// [-pi/2, pi/2] plus whole multiples of the complete integral.
template <typename Scalar>
Scalar jacobi_epsilon(Scalar u, EllipticModulus<Scalar> modulus) {
    detail::require_finite(static_cast<double>(u), "jacobi_epsilon");
    const Scalar k = modulus.value();
    if (k == Scalar(0)) {
        return u;
    }
    if (k == Scalar(1)) {
        return std::tanh(u);
    }
    const Scalar k2 = k * k;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar phi = jacobi_sncndn(u, modulus).amplitude;
    const Scalar turns = std::round(phi / pi);
    const Scalar r = phi - turns * pi;
    const Scalar s = std::sin(r);
    const Scalar cc = std::cos(r) * std::cos(r);
    const Scalar q = Scalar(1) - k2 * s * s;
    Scalar value = s * detail::carlson_rf(cc, q, Scalar(1)) -
                   k2 / Scalar(3) * s * s * s * detail::carlson_rd(cc, q, Scalar(1));
    if (turns != Scalar(0)) {
        const Scalar kc2 = Scalar(1) - k2;
        const Scalar complete =
            detail::carlson_rf(Scalar(0), kc2, Scalar(1)) - k2 / Scalar(3) * detail::carlson_rd(Scalar(0), kc2, Scalar(1));
        value += Scalar(2) * turns * complete;
    }
    return value;
}

template <typename Scalar>
Scalar jacobi_epsilon(Scalar u, Scalar k) {
    return jacobi_epsilon(u, EllipticModulus<Scalar>(k));
}

}  // namespace leafcurve
