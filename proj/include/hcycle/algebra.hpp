#pragma once

#include "hcycle/periodic.hpp"

#include <map>
#include <string>
#include <utility>

namespace hcycle {

/// Finitely supported twisted Laurent series sum_n f_n [n] in the smooth
/// rotation algebra with parameter hbar.
///
/// Conventions. [0] carries multiplication by f(x); e^{2 pi i x}[0] is U and
/// 1[1] is V. V acts on L^2(R) by (V xi)(x) = xi(x + hbar), so
///   (f[n]) (g[m]) = (f * g(. + n hbar)) [n + m],
///   (f[n])^*      = conj(f(. - n hbar)) [-n],
/// which gives UV = e^{-2 pi i hbar} VU and [x, f[n]] = -n hbar f[n].
class AlgebraElement {
public:
    using Coeffs = std::map<int, PeriodicFunction>;

    explicit AlgebraElement(double hbar, std::size_t grid = PeriodicFunction::default_size);
    AlgebraElement(double hbar, Coeffs coeffs);

    /// f[n] as a single term.
    static AlgebraElement monomial(double hbar, int n, PeriodicFunction f);
    static AlgebraElement identity(double hbar, std::size_t grid = PeriodicFunction::default_size);

    double hbar() const noexcept { return hbar_; }
    std::size_t grid() const noexcept { return grid_; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of degree n, or zero.
    PeriodicFunction coeff(int n) const;

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(cplx c);

private:
    double hbar_;
    std::size_t grid_;
    Coeffs coeffs_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(cplx c, AlgebraElement a);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement adjoint(const AlgebraElement& a);
/// Mean of the degree-zero coefficient.
cplx trace(const AlgebraElement& a);
/// f_n -> f_n'
AlgebraElement delta1(const AlgebraElement& a);
/// f_n -> 2 pi i n f_n
AlgebraElement delta2(const AlgebraElement& a);

/// Largest sample modulus over all coefficients.
double sup_norm(const AlgebraElement& a);

/// max(||e^2 - e||, ||e^* - e||) in sample sup-norm.
double projection_defect(const AlgebraElement& e);

/// tau(a0 (d1 a1 d2 a2 - d2 a1 d1 a2)).
cplx tau2(const AlgebraElement& a0, const AlgebraElement& a1, const AlgebraElement& a2);

/// (1 / 2 pi i) tau(e [d1 e, d2 e]); requires a projection to 1e-8.
cplx curvature_c1(const AlgebraElement& e);

/// Smooth step on [0,1]: sigma(u) / (sigma(u) + sigma(1-u)), sigma(u) = e^{-1/u}.
double smooth_ramp(double u) noexcept;

/// Profile f of the projection: 0 -> 1 on [0, eps], flat to frac, back to 0
/// on [frac, frac + eps], where frac is the fractional part of hbar and
/// eps = min(frac, 1 - frac) / 3. Satisfies f(x) + f(x + hbar) = 1 on the ramps.
double rieffel_profile(double hbar, double x);

/// p = f[0] + g[1] + g[1]^*, with g = sqrt(f - f^2) kept on the rising ramp.
/// Throws std::domain_error("no Rieffel representative") near integers.
AlgebraElement rieffel_projection(double hbar,
                                  std::size_t grid = PeriodicFunction::default_size);

/// Symbolic [A, a] and [A^*, a] for A = x + d/dx, A^* = x - d/dx.
std::pair<AlgebraElement, AlgebraElement> commutators_with_D(const AlgebraElement& a);

}  // namespace hcycle
