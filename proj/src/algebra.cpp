#include "hcycle/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcycle {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double projection_tol = 1e-8;

void require_same_hbar(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.hbar() != b.hbar())
        throw std::invalid_argument("algebra elements carry different hbar: " +
                                    std::to_string(a.hbar()) + " vs " + std::to_string(b.hbar()));
}

void accumulate(AlgebraElement::Coeffs& into, int n, PeriodicFunction f)
{
    auto it = into.find(n);
    if (it == into.end())
        into.emplace(n, std::move(f));
    else
        it->second += f;
}

}  // namespace

AlgebraElement::AlgebraElement(double hbar, std::size_t grid) : hbar_(hbar), grid_(grid) {}

AlgebraElement::AlgebraElement(double hbar, Coeffs coeffs)
    : hbar_(hbar), grid_(PeriodicFunction::default_size), coeffs_(std::move(coeffs))
{
    if (!coeffs_.empty()) grid_ = coeffs_.begin()->second.size();
    for (const auto& [n, f] : coeffs_)
        if (f.size() != grid_)
            throw std::invalid_argument("coefficients of one element must share a grid");
}

AlgebraElement AlgebraElement::monomial(double hbar, int n, PeriodicFunction f)
{
    Coeffs c;
    c.emplace(n, std::move(f));
    return AlgebraElement(hbar, std::move(c));
}

AlgebraElement AlgebraElement::identity(double hbar, std::size_t grid)
{
    return monomial(hbar, 0, PeriodicFunction::constant(1.0, grid));
}

PeriodicFunction AlgebraElement::coeff(int n) const
{
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? PeriodicFunction::constant(0.0, grid_) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    require_same_hbar(*this, other);
    if (coeffs_.empty()) grid_ = other.grid_;
    for (const auto& [n, f] : other.coeffs_) accumulate(coeffs_, n, f);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    require_same_hbar(*this, other);
    if (coeffs_.empty()) grid_ = other.grid_;
    for (const auto& [n, f] : other.coeffs_) accumulate(coeffs_, n, -1.0 * f);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(cplx c)
{
    for (auto& [n, f] : coeffs_) f *= c;
    return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(cplx c, AlgebraElement a) { return a *= c; }
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b)
{
    require_same_hbar(a, b);
    AlgebraElement::Coeffs out;
    for (const auto& [n, f] : a.coeffs()) {
        for (const auto& [m, g] : b.coeffs()) {
            const auto moved = n == 0 ? g : shift(g, -n * a.hbar());
            accumulate(out, n + m, multiply(f, moved));
        }
    }
    if (out.empty()) return AlgebraElement(a.hbar(), a.grid());
    return AlgebraElement(a.hbar(), std::move(out));
}

AlgebraElement adjoint(const AlgebraElement& a)
{
    AlgebraElement::Coeffs out;
    for (const auto& [n, f] : a.coeffs())
        out.emplace(-n, conj(n == 0 ? f : shift(f, n * a.hbar())));
    if (out.empty()) return AlgebraElement(a.hbar(), a.grid());
    return AlgebraElement(a.hbar(), std::move(out));
}

cplx trace(const AlgebraElement& a)
{
    auto it = a.coeffs().find(0);
    return it == a.coeffs().end() ? cplx(0.0) : mean(it->second);
}

AlgebraElement delta1(const AlgebraElement& a)
{
    AlgebraElement::Coeffs out;
    for (const auto& [n, f] : a.coeffs()) out.emplace(n, derivative(f));
    if (out.empty()) return AlgebraElement(a.hbar(), a.grid());
    return AlgebraElement(a.hbar(), std::move(out));
}

AlgebraElement delta2(const AlgebraElement& a)
{
    AlgebraElement::Coeffs out;
    for (const auto& [n, f] : a.coeffs()) out.emplace(n, cplx(0.0, two_pi * n) * f);
    if (out.empty()) return AlgebraElement(a.hbar(), a.grid());
    return AlgebraElement(a.hbar(), std::move(out));
}

double sup_norm(const AlgebraElement& a)
{
    double m = 0.0;
    for (const auto& [n, f] : a.coeffs()) m = std::max(m, sup_norm(f));
    return m;
}

double projection_defect(const AlgebraElement& e)
{
    return std::max(sup_norm(e * e - e), sup_norm(adjoint(e) - e));
}

cplx tau2(const AlgebraElement& a0, const AlgebraElement& a1, const AlgebraElement& a2)
{
    require_same_hbar(a0, a1);
    require_same_hbar(a0, a2);
    const auto forward = a0 * delta1(a1) * delta2(a2);
    const auto backward = a0 * delta2(a1) * delta1(a2);
    return trace(forward) - trace(backward);
}

cplx curvature_c1(const AlgebraElement& e)
{
    const double defect = projection_defect(e);
    if (defect > projection_tol)
        throw std::domain_error("curvature_c1: not a projection (defect " +
                                std::to_string(defect) + ")");
    return tau2(e, e, e) / cplx(0.0, two_pi);
}

double smooth_ramp(double u) noexcept
{
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / u);
    const double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

double rieffel_profile(double hbar, double x)
{
    const double frac = hbar - std::floor(hbar);
    const double eps = std::min(frac, 1.0 - frac) / 3.0;
    const double y = x - std::floor(x);
    if (y <= eps) return smooth_ramp(y / eps);
    if (y <= frac) return 1.0;
    if (y <= frac + eps) return smooth_ramp(1.0 - (y - frac) / eps);
    return 0.0;
}

AlgebraElement rieffel_projection(double hbar, std::size_t grid)
{
    const double frac = hbar - std::floor(hbar);
    if (std::min(frac, 1.0 - frac) <= 1e-3)
        throw std::domain_error("no Rieffel representative for hbar = " + std::to_string(hbar) +
                                " (too close to an integer)");
    const double eps = std::min(frac, 1.0 - frac) / 3.0;

    const auto f = PeriodicFunction::from_function(
        [hbar](double x) { return cplx(rieffel_profile(hbar, x)); }, grid);
    // f - f^2 on the rising ramp, where f(x) + f(x + hbar) = 1, and zero
    // elsewhere. Written as s(u) s(1 - u) so nothing cancels near f = 1.
    const auto spread = PeriodicFunction::from_function(
        [eps](double x) {
            const double u = (x - std::floor(x)) / eps;
            return cplx(u < 1.0 ? smooth_ramp(u) * smooth_ramp(1.0 - u) : 0.0);
        },
        grid);
    const auto lift = AlgebraElement::monomial(hbar, 1, sqrt_nonneg(spread));
    return AlgebraElement::monomial(hbar, 0, f) + lift + adjoint(lift);
}

std::pair<AlgebraElement, AlgebraElement> commutators_with_D(const AlgebraElement& a)
{
    AlgebraElement::Coeffs with_a, with_adj;
    for (const auto& [n, f] : a.coeffs()) {
        const auto position = cplx(-n * a.hbar()) * f;
        const auto slope = derivative(f);
        with_a.emplace(n, position + slope);
        with_adj.emplace(n, position - slope);
    }
    if (with_a.empty()) return {AlgebraElement(a.hbar(), a.grid()), AlgebraElement(a.hbar(), a.grid())};
    return {AlgebraElement(a.hbar(), std::move(with_a)), AlgebraElement(a.hbar(), std::move(with_adj))};
}

}  // namespace hcycle
