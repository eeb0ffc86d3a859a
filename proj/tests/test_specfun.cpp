#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "leafcurve/specfun.hpp"
#include "oracles.hpp"

using namespace leafcurve;

namespace {
const Tolerance<double> kTol{};
const PhaseKind<double> kCornu = PhaseKind<double>::cornu();
}  // namespace

TEST(Fresnel, ZeroIsEmptyIntegral) {
    EXPECT_EQ(fresnel_c(0.0), 0.0);
    EXPECT_EQ(fresnel_s(0.0), 0.0);
}

TEST(Fresnel, MatchesSeriesAtOne) {
    EXPECT_NEAR(fresnel_c(1.0), 0.9045243, 1e-6);  // published to 7 digits; true value 0.904524238
    EXPECT_NEAR(fresnel_s(1.0), 0.3102683, 5e-8);
    EXPECT_NEAR(fresnel_c(1.0), static_cast<double>(oracle::fresnel_c_series(1.0L)), 1e-10);
    EXPECT_NEAR(fresnel_s(1.0), static_cast<double>(oracle::fresnel_s_series(1.0L)), 1e-10);
    EXPECT_NEAR(fresnel_s(-1.0), -0.3102683, 5e-8);
}

TEST(Fresnel, GoldenAtAxialEnd) {
    EXPECT_NEAR(fresnel_c(2.170803), oracle::golden_scalar("fresnel_c_l"), 1e-10);
    EXPECT_NEAR(fresnel_s(2.170803), oracle::golden_scalar("fresnel_s_l"), 1e-10);
    EXPECT_NEAR(fresnel_c(-0.78622), oracle::golden_scalar("fresnel_c_e"), 1e-10);
    EXPECT_NEAR(fresnel_s(-0.78622), oracle::golden_scalar("fresnel_s_e"), 1e-10);
}

TEST(Fresnel, SeriesAgreementOverRange) {
    for (double t = -3.0; t <= 3.0; t += 0.125) {
        EXPECT_NEAR(fresnel_c(t), static_cast<double>(oracle::fresnel_c_series(t)), 1e-10) << t;
        EXPECT_NEAR(fresnel_s(t), static_cast<double>(oracle::fresnel_s_series(t)), 1e-10) << t;
    }
}

TEST(Fresnel, OddSymmetry) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double t = dist(rng);
        EXPECT_NEAR(fresnel_c(-t), -fresnel_c(t), 1e-12);
        EXPECT_NEAR(fresnel_s(-t), -fresnel_s(t), 1e-12);
    }
}

TEST(Fresnel, DerivativeIsIntegrand) {
    const double h = 1e-5;
    for (double t = 0.0; t <= 2.5; t += 0.05) {
        EXPECT_NEAR((fresnel_c(t + h) - fresnel_c(t - h)) / (2 * h), std::cos(t * t), 1e-6) << t;
        EXPECT_NEAR((fresnel_s(t + h) - fresnel_s(t - h)) / (2 * h), std::sin(t * t), 1e-6) << t;
    }
}

TEST(Fresnel, NonFiniteIsDomainError) {
    EXPECT_THROW(fresnel_c(std::numeric_limits<double>::quiet_NaN()), DomainError);
    EXPECT_THROW(fresnel_s(std::numeric_limits<double>::infinity()), DomainError);
    EXPECT_THROW(Tolerance<double>(0.0), DomainError);
}

TEST(PhaseIntegral, CornuReducesToFresnel) {
    EXPECT_EQ(phase_integral(1.3, kCornu, Trig::Cos, kTol), fresnel_c(1.3));
    EXPECT_EQ(phase_integral(1.3, kCornu, Trig::Sin, kTol), fresnel_s(1.3));
}

TEST(PhaseIntegral, ZeroLength) {
    EXPECT_EQ(phase_integral(0.0, PhaseKind<double>::shifted_euler(2.0), Trig::Sin, kTol), 0.0);
    EXPECT_EQ(phase_integral(0.0, kCornu, Trig::Cos, kTol), 0.0);
}

TEST(PhaseIntegral, ShiftedEulerSignConvention) {
    // m = 0 leaves phi(u) = -u^2/2: the sine integral is negative.
    const auto phase = PhaseKind<double>::shifted_euler(0.0);
    const double sin_ref = oracle::adaptive_simpson([](double u) { return std::sin(-u * u / 2); }, 0.0, 1.0);
    const double cos_ref = oracle::adaptive_simpson([](double u) { return std::cos(-u * u / 2); }, 0.0, 1.0);
    EXPECT_NEAR(phase_integral(1.0, phase, Trig::Sin, kTol), sin_ref, 1e-10);
    EXPECT_NEAR(phase_integral(1.0, phase, Trig::Cos, kTol), cos_ref, 1e-10);
    EXPECT_NEAR(sin_ref, oracle::golden_scalar("shifted_euler_m0_sin_1"), 1e-12);
    EXPECT_LT(phase_integral(1.0, phase, Trig::Sin, kTol), 0.0);

    const auto phase2 = PhaseKind<double>::shifted_euler(1.5);
    EXPECT_NEAR(phase_integral(2.0, phase2, Trig::Cos, kTol), oracle::golden_scalar("shifted_euler_m1.5_cos_2"),
                1e-10);
    EXPECT_NEAR(phase_integral(2.0, phase2, Trig::Sin, kTol), oracle::golden_scalar("shifted_euler_m1.5_sin_2"),
                1e-10);
}

TEST(PhaseIntegral, NegativeUpperLimit) {
    const auto phase = PhaseKind<double>::shifted_euler(0.8);
    const double ref =
        -oracle::adaptive_simpson([](double u) { return std::cos(0.8 * u - u * u / 2); }, -1.2, 0.0);
    EXPECT_NEAR(phase_integral(-1.2, phase, Trig::Cos, kTol), ref, 1e-10);
}

TEST(PhaseIntegral, DerivativeIsIntegrand) {
    const auto phase = PhaseKind<double>::shifted_euler(1.1);
    const double h = 1e-5;
    for (double t = -1.0; t <= 2.5; t += 0.1) {
        const double phi = 1.1 * t - t * t / 2;
        EXPECT_NEAR((phase_integral(t + h, phase, Trig::Cos, kTol) - phase_integral(t - h, phase, Trig::Cos, kTol)) /
                        (2 * h),
                    std::cos(phi), 1e-6);
        EXPECT_NEAR((phase_integral(t + h, phase, Trig::Sin, kTol) - phase_integral(t - h, phase, Trig::Sin, kTol)) /
                        (2 * h),
                    std::sin(phi), 1e-6);
    }
}

TEST(PhaseIntegral, PairMatchesScalarIntegrals) {
    const auto phase = PhaseKind<double>::shifted_euler(-0.4);
    for (double t = -2.0; t <= 3.0; t += 0.25) {
        const auto p = phase_integral_pair(t, phase, kTol);
        EXPECT_NEAR(p.x(), phase_integral(t, phase, Trig::Cos, kTol), 1e-10);
        EXPECT_NEAR(p.y(), phase_integral(t, phase, Trig::Sin, kTol), 1e-10);
    }
}

TEST(PhaseIntegral, TighterToleranceIsHonoured) {
    const Tolerance<double> tight(1e-14);
    EXPECT_NEAR(fresnel_c(2.9, tight), static_cast<double>(oracle::fresnel_c_series(2.9L)), 1e-12);
}

TEST(PhaseIntegral, FloatInstantiation) {
    EXPECT_NEAR(fresnel_c(1.0f, Tolerance<float>(1e-6f)), 0.9045243f, 1e-5f);
}

TEST(Jacobi, ReferenceValues) {
    EXPECT_EQ(jacobi_cn(0.0, 0.3), 1.0);
    EXPECT_NEAR(jacobi_cn(0.7, 0.0), std::cos(0.7), 1e-15);
    EXPECT_NEAR(jacobi_cn(0.7, 0.0), 0.7648422, 5e-8);
    EXPECT_NEAR(jacobi_cn(1.0, 1.0), 1.0 / std::cosh(1.0), 1e-10);
    EXPECT_NEAR(jacobi_cn(1.0, 1.0), 0.6480543, 5e-8);
    EXPECT_NEAR(jacobi_cn(1.0, 0.3), oracle::golden_scalar("jacobi_cn_1_0.3"), 1e-13);
}

TEST(Jacobi, ModulusOutsideRange) {
    EXPECT_THROW(jacobi_cn(0.5, -0.1), DomainError);
    EXPECT_THROW(jacobi_cn(0.5, 1.5), DomainError);
    EXPECT_THROW(jacobi_epsilon(0.5, 1.01), DomainError);
    EXPECT_THROW(jacobi_cn(std::nan(""), 0.3), DomainError);
}

TEST(Jacobi, AgreesWithBoost) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ud(-8.0, 8.0);
    std::uniform_real_distribution<double> kd(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double u = ud(rng);
        const double k = i == 0 ? 0.999999 : kd(rng);
        const auto v = jacobi_sncndn(u, EllipticModulus<double>(k));
        EXPECT_NEAR(v.sn, oracle::sn(u, k), 1e-12) << u << " " << k;
        EXPECT_NEAR(v.cn, oracle::cn(u, k), 1e-12) << u << " " << k;
        EXPECT_NEAR(v.dn, oracle::dn(u, k), 1e-12) << u << " " << k;
    }
}

TEST(Jacobi, Identities) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ud(-10.0, 10.0);
    std::uniform_real_distribution<double> kd(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double u = ud(rng);
        const double k = kd(rng);
        const auto v = jacobi_sncndn(u, EllipticModulus<double>(k));
        EXPECT_NEAR(v.cn * v.cn + v.sn * v.sn, 1.0, 1e-10);
        EXPECT_NEAR(v.dn * v.dn, 1.0 - k * k * v.sn * v.sn, 1e-10);
        EXPECT_LE(std::abs(v.cn), 1.0);
    }
}

TEST(Jacobi, HyperbolicLimit) {
    for (double u = -3.0; u <= 3.0; u += 0.5) {
        EXPECT_NEAR(jacobi_cn(u, 1.0), 1.0 / std::cosh(u), 1e-15);
        EXPECT_NEAR(jacobi_epsilon(u, 1.0), std::tanh(u), 1e-15);
    }
}

TEST(JacobiEpsilon, ReferenceValues) {
    EXPECT_EQ(jacobi_epsilon(0.0, 0.3), 0.0);
    EXPECT_EQ(jacobi_epsilon(2.5, 0.0), 2.5);
    EXPECT_NEAR(jacobi_epsilon(1.0, 0.3), oracle::golden_scalar("jacobi_epsilon_1_0.3"), 1e-12);
    EXPECT_NEAR(jacobi_epsilon(1.0, 0.3), oracle::epsilon(1.0, 0.3), 1e-12);
}

TEST(JacobiEpsilon, QuadratureOracleAcrossPeriods) {
    // Amplitudes beyond +-pi/2 exercise the complete-integral reduction.
    for (double k : {0.1, 0.5, 0.9, 0.99}) {
        for (double u : {-7.3, -2.0, 0.4, 1.9, 3.3, 6.0, 11.0}) {
            EXPECT_NEAR(jacobi_epsilon(u, k), oracle::epsilon(u, k), 1e-10) << u << " " << k;
        }
    }
}

TEST(JacobiEpsilon, DerivativeIsDnSquared) {
    const double h = 1e-5;
    for (double k : {0.2, 0.6, 0.95}) {
        for (double u = -4.0; u <= 4.0; u += 0.37) {
            const double dn = jacobi_sncndn(u, EllipticModulus<double>(k)).dn;
            EXPECT_NEAR((jacobi_epsilon(u + h, k) - jacobi_epsilon(u - h, k)) / (2 * h), dn * dn, 1e-6);
        }
    }
}

TEST(JacobiEpsilon, ZeroModulusIsIdentity) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ud(-50.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double u = ud(rng);
        EXPECT_NEAR(jacobi_epsilon(u, 0.0), u, 1e-12);
    }
}

TEST(Quadrature, VectorValuedMatchesScalar) {
    auto f = [](double x) { return Eigen::Vector2d(std::exp(x), std::sin(3 * x)); };
    const auto r = integrate(f, 0.0, 2.0, 1e-12);
    EXPECT_NEAR(r.value.x(), std::exp(2.0) - 1.0, 1e-12);
    EXPECT_NEAR(r.value.y(), (1.0 - std::cos(6.0)) / 3.0, 1e-12);
    const auto back = integrate(f, 2.0, 0.0, 1e-12);
    EXPECT_EQ(back.value.x(), -r.value.x());
}
