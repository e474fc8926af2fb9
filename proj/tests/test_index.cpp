#include "hcycle/index.hpp"
#include "hcycle/ktheory.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace hcycle;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

const HermiteBasis& basis400()
{
    static const HermiteBasis b(400);
    return b;
}

}  // namespace

TEST_SUITE("index")
{
    TEST_CASE("psi0 of the identity")
    {
        const auto one = AlgebraElement::identity(0.3);
        CHECK(std::abs(psi0(one, basis400()) - 1.0) <= 1e-3);
        for (double t : {0.005, 0.01, 0.02, 0.3}) CHECK(std::abs(psi0_theta(one, basis400(), t) - std::exp(-t)) <= 1e-10);
        const double bad[] = {0.1, 0.2};
        CHECK_THROWS_AS(psi0(one, basis400(), bad), std::invalid_argument);
    }

    TEST_CASE("psi0 kills translated terms")
    {
        // The translated diagonal decays like exp(-(k hbar)^2 / 4t), so k hbar must be resolved by the default times.
        const auto one = PeriodicFunction::constant(1.0);
        const auto u = PeriodicFunction::from_function([](double x) { return std::polar(1.0, two_pi * x); });
        CHECK(std::abs(psi0(AlgebraElement::monomial(0.7, 1, one), basis400())) <= 1e-3);
        CHECK(std::abs(psi0(AlgebraElement::monomial(0.7, -1, one), basis400())) <= 1e-3);
        CHECK(std::abs(psi0(AlgebraElement::monomial(1.3, 2, one), basis400())) <= 1e-3);
        CHECK(std::abs(psi0(AlgebraElement::monomial(0.3, 1, u), basis400())) <= 1e-3);
        CHECK(std::abs(psi0(AlgebraElement::monomial(0.3, 0, u), basis400())) <= 1e-3);
    }

    TEST_CASE("psi0 of the Rieffel projection")
    {
        CHECK(std::abs(psi0(rieffel_projection(0.3), basis400()) - 0.3) <= 5e-3);
    }

    TEST_CASE("psi2")
    {
        const auto p = rieffel_projection(0.3);
        const auto one = AlgebraElement::identity(0.3);
        CHECK(std::abs(psi2(p - 0.5 * one, p, p) - 0.3) <= 1e-6);
        CHECK(std::abs(psi2(p - 0.5 * one, p, p) - psi2(p, p, p)) <= 1e-8);
        CHECK(std::abs(psi2(p, one, p)) < 1e-14);
        const auto f = PeriodicFunction::from_function([](double x) { return cplx(std::cos(two_pi * x)); });
        const auto a = AlgebraElement::monomial(0.0, 0, f);
        CHECK(std::abs(psi2(a, a, a)) == 0.0);
    }

    TEST_CASE("Fedosov index of the identity")
    {
        const auto r = fedosov_details(AlgebraElement::identity(0.3), basis400());
        CHECK(std::abs(r.value - 1.0) <= 1e-3);
        CHECK(r.dilation == 1.0);
        CHECK(r.window == 150);
        CHECK(std::abs(r.imaginary) <= 1e-6);
    }

    TEST_CASE("Fedosov index of Rieffel projections")
    {
        CHECK(std::abs(fedosov_index(rieffel_projection(0.3), basis400())) <= 1e-2);
        CHECK(std::abs(fedosov_index(rieffel_projection(1.3), basis400()) + 1.0) <= 1e-2);
    }

    TEST_CASE("Fedosov preconditions")
    {
        CHECK_THROWS_AS(fedosov_index(AlgebraElement::identity(0.3), HermiteBasis(100)), std::invalid_argument);
        CHECK_THROWS_AS(fedosov_index(2.0 * AlgebraElement::identity(0.3), basis400()), std::domain_error);
        FedosovOptions coarse;
        coarse.dilation = 1.0;
        CHECK_THROWS_WITH_AS(fedosov_index(rieffel_projection(2.6), HermiteBasis(200), coarse),
                             doctest::Contains("not clustered"), std::domain_error);
    }

    TEST_CASE("pairing reports")
    {
        const auto r1 = pairing(AlgebraElement::identity(0.7), basis400());
        CHECK(std::abs(r1.closed_form - 1.0) <= 1e-12);
        CHECK(std::abs(r1.local_formula - 1.0) <= 1e-3);
        CHECK(std::abs(r1.fedosov - 1.0) <= 1e-3);
        CHECK(r1.rounded_integer == 1);
        CHECK(r1.modes == 400);

        CHECK(std::abs(closed_form_pairing(rieffel_projection(2.6)) + 2.0) <= 1e-6);
        CHECK(std::abs(closed_form_pairing(rieffel_projection(-0.4)) - 1.0) <= 1e-6);
    }

    TEST_CASE("sweep produces the staircase")
    {
        const double hbars[] = {0.3, 0.7, 1.3, -0.4};
        const long expected[] = {0, 0, -1, 1};
        const auto reports = sweep(hbars, basis400());
        REQUIRE(reports.size() == 4);
        for (std::size_t j = 0; j < 4; ++j) {
            CAPTURE(hbars[j]);
            CHECK(reports[j].rounded_integer == expected[j]);
            CHECK(reports[j].rounded_integer == std::lround(k_pairing({0, 1}, hbars[j], 0)));
            CHECK(reports[j].residuals[0] <= 2e-2);
            CHECK(reports[j].residuals[1] <= 2e-2);
            CHECK(reports[j].residuals[2] <= 1e-6);
        }
        const double integer[] = {2.0};
        CHECK_THROWS_AS(sweep(integer, basis400()), std::domain_error);
    }
}
