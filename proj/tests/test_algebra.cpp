#include "hcycle/algebra.hpp"
#include "hcycle/ktheory.hpp"
#include "hcycle/report.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

using namespace hcycle;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
const cplx I(0.0, 1.0);
constexpr std::size_t small_grid = 256;

PeriodicFunction character(int k, std::size_t m = PeriodicFunction::default_size)
{
    return PeriodicFunction::from_function([k](double x) { return std::polar(1.0, two_pi * k * x); }, m);
}

/// Trigonometric polynomial with a few random low modes.
PeriodicFunction random_smooth(std::mt19937& rng)
{
    std::normal_distribution<double> gauss;
    std::vector<cplx> c(small_grid, 0.0);
    for (int k = -4; k <= 4; ++k) c[static_cast<std::size_t>((k + static_cast<int>(small_grid)) % small_grid)] =
        cplx(gauss(rng), gauss(rng)) / (1.0 + k * k);
    return PeriodicFunction::from_coefficients(c);
}

AlgebraElement random_element(double hbar, std::mt19937& rng)
{
    AlgebraElement::Coeffs c;
    for (int n = -2; n <= 2; ++n) c.emplace(n, random_smooth(rng));
    return AlgebraElement(hbar, std::move(c));
}

double distance(const AlgebraElement& a, const AlgebraElement& b)
{
    return sup_norm(a - b);
}

const double rieffel_hbars[] = {0.2, 0.3, 0.5, 0.7, std::numbers::sqrt2 - 1.0};

}  // namespace

TEST_SUITE("algebra")
{
    TEST_CASE("UV = e^{-2 pi i hbar} VU")
    {
        const double h = 0.3;
        const auto u = AlgebraElement::monomial(h, 0, character(1));
        const auto v = AlgebraElement::monomial(h, 1, PeriodicFunction::constant(1.0));
        CHECK(distance(u * v, std::polar(1.0, -two_pi * h) * (v * u)) < 1e-12);
    }

    TEST_CASE("elementary products")
    {
        const double h = 0.41;
        const auto f = character(2) + PeriodicFunction::constant(1.0);
        const auto g = character(-1);
        CHECK(distance(AlgebraElement::monomial(h, 0, f) * AlgebraElement::monomial(h, 0, g),
                       AlgebraElement::monomial(h, 0, multiply(f, g))) < 1e-13);
        const auto one = PeriodicFunction::constant(1.0);
        CHECK(distance(AlgebraElement::monomial(h, 1, one) * AlgebraElement::monomial(h, -1, one),
                       AlgebraElement::identity(h)) < 1e-13);
        const auto lhs = AlgebraElement::monomial(h, 1, f) * AlgebraElement::monomial(h, 2, g);
        CHECK(lhs.coeffs().size() == 1);
        CHECK(sup_distance(lhs.coeff(3), multiply(f, shift(g, -h))) < 1e-12);
    }

    TEST_CASE("mismatched hbar is rejected")
    {
        CHECK_THROWS_AS(AlgebraElement::identity(0.3) * AlgebraElement::identity(0.4), std::invalid_argument);
        CHECK_THROWS_AS(AlgebraElement::identity(0.3) + AlgebraElement::identity(0.4), std::invalid_argument);
    }

    TEST_CASE("trace and derivations")
    {
        const double h = 0.3;
        CHECK(std::abs(trace(AlgebraElement::identity(h)) - 1.0) < 1e-15);
        CHECK(std::abs(trace(AlgebraElement::monomial(h, 0, character(1)))) < 1e-15);
        CHECK(std::abs(trace(AlgebraElement::monomial(h, 1, PeriodicFunction::constant(1.0)))) < 1e-15);
        const auto f = character(2);
        const auto d = delta2(AlgebraElement::monomial(h, 3, f));
        CHECK(sup_distance(d.coeff(3), 6.0 * std::numbers::pi * I * f) < 1e-12);
        CHECK(sup_norm(delta1(AlgebraElement::identity(h))) < 1e-14);
    }

    TEST_CASE("adjoint is an involution and reverses products")
    {
        std::mt19937 rng(7);
        const double h = 0.37;
        const auto a = random_element(h, rng);
        const auto b = random_element(h, rng);
        CHECK(distance(adjoint(adjoint(a)), a) < 1e-12);
        CHECK(distance(adjoint(a * b), adjoint(b) * adjoint(a)) < 1e-10);
    }

    TEST_CASE("random elements: associativity, trace property, Leibniz")
    {
        std::mt19937 rng(2024);
        const double h = std::numbers::sqrt2 - 1.0;
        for (int trial = 0; trial < 3; ++trial) {
            const auto a = random_element(h, rng);
            const auto b = random_element(h, rng);
            const auto c = random_element(h, rng);
            CHECK(distance((a * b) * c, a * (b * c)) < 1e-10);
            CHECK(std::abs(trace(a * b) - trace(b * a)) < 1e-10);
            CHECK(distance(delta1(a * b), delta1(a) * b + a * delta1(b)) < 1e-10);
            CHECK(distance(delta2(a * b), delta2(a) * b + a * delta2(b)) < 1e-10);
        }
    }

    TEST_CASE("Rieffel projection identities")
    {
        for (double h : rieffel_hbars) {
            CAPTURE(h);
            const auto p = rieffel_projection(h);
            CHECK(sup_norm(p * p - p) <= 1e-10);
            CHECK(std::abs(trace(p) - (h - std::floor(h))) <= 1e-10);
            CHECK(std::abs(curvature_c1(p) - 1.0) <= 1e-6);
            CHECK(in_gap_label_group(trace(p).real(), h));
        }
    }

    TEST_CASE("Rieffel projection exactness on a fine grid")
    {
        // The ramp for hbar = 0.2 is 1/15 wide; its spectrum needs more than 2048 samples to fall below 1e-12.
        for (double h : rieffel_hbars) {
            CAPTURE(h);
            const auto p = rieffel_projection(h, 4096);
            CHECK(sup_norm(adjoint(p) - p) <= 1e-14);
            const auto g = AlgebraElement::monomial(h, 1, p.coeff(1));
            CHECK(sup_norm((g * g).coeff(2)) <= 1e-12);
        }
    }

    TEST_CASE("Rieffel projection depends on frac(hbar) only through its coefficients")
    {
        const auto a = rieffel_projection(0.3);
        const auto b = rieffel_projection(1.3);
        CHECK(b.hbar() == 1.3);
        for (int n : {-1, 0, 1}) CHECK(sup_distance(a.coeff(n), b.coeff(n)) < 1e-12);
        CHECK(sup_norm(b * b - b) <= 1e-10);
    }

    TEST_CASE("Rieffel projection rejects integers")
    {
        CHECK_THROWS_WITH_AS(rieffel_projection(1.0), doctest::Contains("no Rieffel representative"),
                             std::domain_error);
        CHECK_THROWS_AS(rieffel_projection(-2.0004), std::domain_error);
    }

    TEST_CASE("curvature of trivial and non-projections")
    {
        CHECK(std::abs(curvature_c1(AlgebraElement::identity(0.3))) < 1e-15);
        CHECK_THROWS_AS(curvature_c1(2.0 * AlgebraElement::identity(0.3)), std::domain_error);
    }

    TEST_CASE("tau2 identities")
    {
        const auto p = rieffel_projection(0.3);
        const auto one = AlgebraElement::identity(0.3);
        CHECK(std::abs(tau2(p, p, p) - two_pi * I * curvature_c1(p)) < 1e-6);
        CHECK(std::abs(tau2(p, p, p) - two_pi * I) < 1e-6);
        CHECK(std::abs(tau2(p - 0.5 * one, p, p) - tau2(p, p, p)) < 1e-8);
        CHECK(std::abs(tau2(p, one, p)) < 1e-14);

        std::mt19937 rng(11);
        const auto a = random_element(0.3, rng);
        const auto b = random_element(0.3, rng);
        const auto c = random_element(0.3, rng);
        CHECK(std::abs(tau2(a, b, c) - tau2(c, a, b)) < 1e-8);
    }

    TEST_CASE("commutators with the ladder operators")
    {
        const double h = 0.3;
        const auto f = character(1);
        const auto [a0, b0] = commutators_with_D(AlgebraElement::monomial(h, 0, f));
        CHECK(sup_distance(a0.coeff(0), derivative(f)) < 1e-9);
        CHECK(sup_distance(b0.coeff(0), -1.0 * derivative(f)) < 1e-9);

        // [x, V] = -hbar V since V translates by -hbar.
        const auto v = AlgebraElement::monomial(h, 1, PeriodicFunction::constant(1.0));
        const auto [a1, b1] = commutators_with_D(v);
        CHECK(distance(a1, -h * v) < 1e-14);
        CHECK(distance(b1, -h * v) < 1e-14);

        const auto [a2, b2] = commutators_with_D(AlgebraElement::identity(h));
        CHECK(sup_norm(a2) < 1e-14);
        CHECK(sup_norm(b2) < 1e-14);
    }

    TEST_CASE("JSON round trip")
    {
        const auto p = rieffel_projection(0.7, small_grid);
        const auto q = algebra_from_json(to_json(p));
        CHECK(q.hbar() == 0.7);
        CHECK(distance(p, q) == 0.0);
    }
}
