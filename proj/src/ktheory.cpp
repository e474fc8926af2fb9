#include "hcycle/ktheory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hcycle {

KClass twist(KClass x, long b) { return {x.m - b * x.n, x.n}; }

double fractional_part(double hbar)
{
    const double frac = hbar - std::floor(hbar);
    if (frac == 0.0) throw std::domain_error("integer hbar = " + std::to_string(hbar) + " has no projection class");
    return frac;
}

double k_pairing(KClass x, double hbar, long b)
{
    fractional_part(hbar);  // rejects integers
    // frac - (hbar + b) = -floor(hbar) - b is an integer; keep the arithmetic exact.
    const long stair = -static_cast<long>(std::floor(hbar)) - b;
    return static_cast<double>(x.m + x.n * stair);
}

double trace_value(KClass x, double hbar)
{
    return static_cast<double>(x.m) + static_cast<double>(x.n) * fractional_part(hbar);
}

std::optional<std::pair<long, long>> gap_label(double value, double hbar, long bound, double tol)
{
    for (long q = 0; q <= bound; ++q) {
        for (long sign : {1L, -1L}) {
            if (q == 0 && sign < 0) continue;
            const long qq = sign * q;
            const double rest = value - static_cast<double>(qq) * hbar;
            const double p = std::round(rest);
            if (std::abs(p) <= static_cast<double>(bound) && std::abs(rest - p) <= tol)
                return std::make_pair(static_cast<long>(p), qq);
        }
    }
    return std::nullopt;
}

bool in_gap_label_group(double value, double hbar, long bound, double tol)
{
    return gap_label(value, hbar, bound, tol).has_value();
}

long classical_pairing(long dim, long c1, long n) { return dim + n * c1; }

}  // namespace hcycle
