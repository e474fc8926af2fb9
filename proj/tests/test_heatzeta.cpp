#include "hcycle/functions.hpp"
#include "hcycle/heatzeta.hpp"

#include "doctest.h"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <numbers>

using namespace hcycle;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

/// (1 / Gamma(s)) int_0^inf t^{s-1} e^{-alpha^2 coth(t) / 4} / (2 sinh t) dt
double translated_zeta_oracle(double alpha, double s)
{
    auto g = [=](double t) {
        return std::pow(t, s - 1.0) * std::exp(-alpha * alpha / (4.0 * std::tanh(t))) / (2.0 * std::sinh(t));
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate(g) / boost::math::tgamma(s);
}

}  // namespace

TEST_SUITE("heatzeta")
{
    TEST_CASE("Mehler kernel: value, symmetry, two forms")
    {
        CHECK(std::abs(mehler_kernel(0.5, 0.0, 0.0) - 1.0 / std::sqrt(two_pi * std::sinh(1.0))) < 1e-14);
        CHECK(std::abs(mehler_eigensum(0.5, 0.0, 0.0) - mehler_kernel(0.5, 0.0, 0.0)) < 1e-10);
        CHECK(mehler_kernel(0.37, 1.1, -0.4) == doctest::Approx(mehler_kernel(0.37, -0.4, 1.1)).epsilon(1e-15));
        double worst = 0.0;
        for (double t : {0.01, 0.1, 0.7, 2.0, 5.0})
            for (double x = -8.0; x <= 8.0; x += 0.5)
                for (double y = -8.0; y <= 8.0; y += 0.5)
                    worst = std::max(worst, std::abs(mehler_kernel(t, x, y) - mehler_kernel_classic(t, x, y)));
        CHECK(worst <= 1e-12);
        CHECK_THROWS_AS(mehler_kernel(0.0, 0.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(heat_trace(-1.0), std::domain_error);
    }

    TEST_CASE("eigen-sum agrees with the closed kernel")
    {
        double worst = 0.0;
        for (double t : {0.2, 0.5, 1.0})
            for (double x = -4.0; x <= 4.0; x += 0.25)
                for (double y = -4.0; y <= 4.0; y += 0.25)
                    worst = std::max(worst, std::abs(mehler_eigensum(t, x, y) - mehler_kernel(t, x, y)));
        CHECK(worst <= 1e-8);
    }

    TEST_CASE("heat traces")
    {
        for (double t : {0.05, 0.1, 0.5, 1.0, 3.0, 5.0}) CHECK(std::abs(heat_trace(t) * 2.0 * std::sinh(t) - 1.0) <= 1e-10);
        const auto one = make_function("one");
        CHECK(std::abs(heat_trace_weighted(one, 0.0, 0.4) - heat_trace(0.4)) < 1e-12);
        for (double a : {0.3, 1.0, 2.0})
            for (double t : {0.05, 0.5, 2.0}) {
                const double exact = std::exp(-a * a / (4.0 * std::tanh(t))) / (2.0 * std::sinh(t));
                CHECK(std::abs(heat_trace_weighted(one, a, t) - exact) < 1e-10);
            }
        CHECK(std::abs(heat_trace_weighted(one, 1.0, 0.01)) <= 1e-8);
    }

    TEST_CASE("zeta of the oscillator")
    {
        const auto one = make_function("one");
        const auto z = zeta_trace(one, 0.0, 2.0);
        CHECK(std::abs(z.value - pi * pi / 8.0) <= 1e-8);
        CHECK(z.error_estimate >= 0.0);
        CHECK(z.method == ZetaMethod::eigen_sum_tail);

        double previous = INFINITY;
        for (int j = 1; j <= 3; ++j) {
            const double s = 1.0 + std::pow(10.0, -j);
            const double gap = std::abs((s - 1.0) * zeta_trace(one, 0.0, s).value - 0.5);
            CHECK(gap < previous);
            previous = gap;
        }
        CHECK(previous < 1e-3);

        const auto c = make_function("cos");
        CHECK(std::abs(0.001 * zeta_trace(c, 0.0, 1.001).value) <= 1e-3);
    }

    TEST_CASE("odd zeta tail")
    {
        const double exact = (1.0 - std::pow(2.0, -3.0)) * boost::math::zeta(3.0) - 1.0 - std::pow(3.0, -3.0);
        CHECK(std::abs(odd_zeta_tail(3.0, 2) - exact) < 1e-14);
        const cplx s(0.5, 7.0);
        for (std::size_t n : {0u, 10u, 100u}) {
            const cplx step = std::pow(2.0 * static_cast<double>(n) + 1.0, -s);
            CHECK(std::abs(odd_zeta_tail(s, n) - odd_zeta_tail(s, n + 1) - step) < 1e-12);
        }
        CHECK_THROWS_AS(odd_zeta_tail(1.0, 5), std::domain_error);
    }

    TEST_CASE("residues at s = 1")
    {
        CHECK(std::abs(residue_at_1(make_function("one")) - 0.5) < 1e-14);
        CHECK(std::abs(residue_at_1(make_function("sin"))) < 1e-14);
        const auto f = RealLineFunction::periodic([](double x) { return cplx(2.0 + std::cos(4.0 * pi * x)); }, 0.5);
        CHECK(std::abs(residue_at_1(f) - 1.0) < 1e-13);
        CHECK_THROWS_AS(residue_at_1(make_function("arctan")), std::domain_error);

        FunctionParams params;
        params.hbar = 0.3;
        for (const auto& [name, res] : {std::pair{"one", 0.5}, {"one-plus-cos", 0.5}, {"riesz-ramp", 0.15}, {"cos", 0.0}}) {
            CAPTURE(name);
            const auto g = make_function(name, params);
            CHECK(std::abs(residue_extrapolated(g) - res) <= 1e-3);
            CHECK(std::abs(residue_extrapolated(g) - residue_at_1(g)) <= 1e-3);
        }
    }

    TEST_CASE("declared periods are verified")
    {
        CHECK_THROWS_AS(RealLineFunction::periodic([](double x) { return cplx(x); }), std::invalid_argument);
        CHECK_NOTHROW(RealLineFunction::periodic([](double x) { return cplx(std::cos(4.0 * pi * x)); }, 0.5));
    }

    TEST_CASE("asymptotic means")
    {
        const auto s = asymptotic_mean(make_function("sin"));
        CHECK(std::abs(s.mu_plus) < 1e-12);
        CHECK(std::abs(s.mu_minus) < 1e-12);
        // The running mean of arctan carries a log(x) / x term, so X = 1e4 leaves about 1e-4.
        const auto arctan = RealLineFunction::generic([](double x) { return cplx(std::atan(x)); });
        const auto a = asymptotic_mean(arctan);
        CHECK(std::abs(a.mu_plus - pi / 2.0) < 2e-4);
        CHECK(std::abs(a.mu_minus + pi / 2.0) < 2e-4);
        CHECK(std::abs(a.mu) < 1e-12);
        CHECK(a.error_estimate > 0.0);
        const auto far = asymptotic_mean(arctan, 1e6);
        CHECK(std::abs(far.mu_plus - pi / 2.0) < 4e-6);
        const auto p = asymptotic_mean(RealLineFunction::periodic([](double x) { return cplx(3.0 + std::sin(x)); }, two_pi));
        CHECK(std::abs(p.mu - 3.0) < 1e-12);
    }

    TEST_CASE("Dixmier limit")
    {
        CHECK(std::abs(dixmier_limit(make_function("one")) - 0.5) <= 1e-3);
        CHECK(std::abs(dixmier_limit(make_function("arctan"))) <= 1e-3);
        const auto g = make_function("one-plus-cos");
        CHECK(std::abs(dixmier_limit(g) - 0.5) <= 1e-3);
        CHECK(std::abs(dixmier_limit(g) - residue_at_1(g)) <= 1e-3);
    }

    TEST_CASE("delta map")
    {
        const auto c = delta_map(RealLineFunction::periodic([](double) { return cplx(2.5); }));
        for (double x : {-3.2, 0.0, 0.7, 5.1}) CHECK(std::abs(c(x)) < 1e-12);

        const auto dc = delta_map(make_function("cos"));
        CHECK(dc.kind() == RealLineFunction::Kind::periodic);
        for (double x : {-1.3, 0.2, 0.9, 4.4}) CHECK(std::abs(dc(x) - std::sin(two_pi * x) / two_pi) < 1e-12);
        CHECK(std::abs(asymptotic_mean(dc).mu) < 1e-12);

        const auto ds = delta_map(make_function("sin"));
        for (double x : {-0.6, 0.35, 2.8}) CHECK(std::abs(ds(x) - (1.0 - std::cos(two_pi * x)) / two_pi) < 1e-12);
        CHECK(std::abs(asymptotic_mean(ds).mu - 1.0 / two_pi) < 1e-12);

        const auto da = delta_map(make_function("arctan"));
        CHECK(std::abs(da(10.0) - (10.0 * std::atan(10.0) - 0.5 * std::log(101.0) - 5.0 * pi)) < 1e-10);

        const auto wander = RealLineFunction::generic([](double x) { return cplx(std::cos(std::log1p(std::abs(x)))); });
        CHECK_THROWS_AS(delta_map(wander), std::domain_error);
    }

    TEST_CASE("translated zeta matches the Mellin oracle")
    {
        const auto one = make_function("one");
        ZetaOptions mellin;
        mellin.method = ZetaMethod::heat_mellin;
        for (double a : {0.3, 1.0, 3.0}) {
            CAPTURE(a);
            const double at_one = 0.5 * boost::math::cyl_bessel_k(0, a * a / 4.0);
            CHECK(std::abs(zeta_trace(one, a, 1.0, mellin).value - at_one) < 1e-8);
            CHECK(std::abs(translated_zeta_oracle(a, 1.0) - at_one) < 1e-8);
            for (double s : {1.01, 1.1, 1.5})
                CHECK(std::abs(zeta_trace(one, a, s, mellin).value - translated_zeta_oracle(a, s)) < 1e-8);
        }
        // The eigen-sum converges slowly once s is near 1; at s = 1.5 it is already close.
        CHECK(std::abs(zeta_trace(one, 1.0, 1.5).value - translated_zeta_oracle(1.0, 1.5)) < 2e-3);
        CHECK_THROWS_AS(zeta_trace(one, 0.0, 1.5, mellin), std::domain_error);
        CHECK_THROWS_AS(zeta_trace(RealLineFunction::generic([](double) { return cplx(1.0); }), 0.0, 1.0),
                        std::domain_error);
    }

    TEST_CASE("entire_check reports the translated zeta near s = 1")
    {
        ZetaOptions mellin;
        mellin.method = ZetaMethod::heat_mellin;
        const auto one = make_function("one");
        const auto r = entire_check(one, 0.5, {1.5, 1.1, 1.01}, 1e-3, mellin);
        REQUIRE(r.rows.size() == 3);
        for (const auto& row : r.rows) {
            CHECK(std::abs(row.value - translated_zeta_oracle(0.5, row.s)) < 1e-8);
            CHECK(row.pole_part == doctest::Approx(std::abs((row.s - 1.0) * row.value)));
        }
        // (s - 1) Tr(T_alpha H^{-s}) tends to zero linearly, from the finite value K0(alpha^2 / 4) / 2.
        CHECK(r.rows[2].pole_part < r.rows[1].pole_part);
        CHECK(r.pole_vanishes == (r.rows[2].pole_part <= 1e-3));
        CHECK(r.max_abs_value < 2.0);
        CHECK_THROWS_AS(entire_check(one, 0.0, {1.5}), std::domain_error);
    }

    TEST_CASE("function registry")
    {
        CHECK(function_names().size() == 7);
        FunctionParams params;
        params.fourier = parse_fourier_terms("0:1,1:0.5,-1:0.5");
        const auto f = make_function("custom-fourier", params);
        CHECK(std::abs(f(0.25) - 1.0) < 1e-14);
        CHECK(std::abs(f(0.0) - 2.0) < 1e-14);
        CHECK_THROWS_AS(parse_fourier_terms("1;2"), std::invalid_argument);
        CHECK_THROWS_AS(make_function("nope"), std::invalid_argument);
        params.hbar = 2.0;
        CHECK_THROWS_AS(make_function("riesz-ramp", params), std::domain_error);
    }
}
