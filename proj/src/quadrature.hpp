#pragma once

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace hcycle::detail {

/// Composite 20-point Gauss-Legendre on [a, b] with panels no wider than width.
template <typename F>
auto composite_gauss(F&& f, double a, double b, double width)
{
    using boost::math::quadrature::gauss;
    using Result = decltype(f(a));
    Result total{};
    if (a == b) return total;
    const double span = b - a;
    const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(std::abs(span) / width)));
    const double h = span / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        total += gauss<double, 20>::integrate(f, lo, lo + h);
    }
    return total;
}

/// Value at 0 of the polynomial through (h_i, g_i) (Neville's scheme).
template <typename T, std::size_t K>
T extrapolate_to_zero(const double (&h)[K], const T (&g)[K])
{
    T p[K];
    for (std::size_t i = 0; i < K; ++i) p[i] = g[i];
    for (std::size_t level = 1; level < K; ++level)
        for (std::size_t i = 0; i + level < K; ++i)
            p[i] = (h[i + level] * p[i] - h[i] * p[i + 1]) / (h[i + level] - h[i]);
    return p[0];
}

}  // namespace hcycle::detail
