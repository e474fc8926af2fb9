#pragma once

#include <optional>
#include <utility>

namespace hcycle {

/// m [1] + n [p_hbar] in the ordered basis of K_0.
struct KClass {
    long m = 0;
    long n = 0;
    friend bool operator==(const KClass&, const KClass&) = default;
};

/// Twist by b: the unipotent action (m, n) -> (m - b n, n), which turns the
/// pairing with D_hbar into the pairing with D_{hbar + b}.
KClass twist(KClass x, long b);

/// Pairing of x with the cycle of parameter hbar + b: m + n (frac(hbar) - (hbar + b)).
/// Throws for integer hbar.
double k_pairing(KClass x, double hbar, long b);

/// m + n frac(hbar)
double trace_value(KClass x, double hbar);

/// Integers (p, q) with |p|, |q| <= bound and |value - p - q hbar| <= tol, if any.
std::optional<std::pair<long, long>> gap_label(double value, double hbar, long bound = 1000000, double tol = 1e-9);
bool in_gap_label_group(double value, double hbar, long bound = 1000000, double tol = 1e-9);

/// dim + n c1 for a line bundle on the classical torus.
long classical_pairing(long dim, long c1, long n);

/// Fractional part in [0, 1); throws when hbar is an integer.
double fractional_part(double hbar);

}  // namespace hcycle
