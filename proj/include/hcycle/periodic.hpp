#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hcycle {

using cplx = std::complex<double>;

/// Smooth 1-periodic function stored as M uniform samples at j/M.
///
/// Values are immutable; every operation returns a new function. Spectral
/// operations go through the discrete Fourier coefficients, with the
/// Nyquist mode read as cos(pi M x) so that real data stays real.
class PeriodicFunction {
public:
    static constexpr std::size_t default_size = 2048;

    /// Takes ownership of the samples. Size must be even and positive.
    explicit PeriodicFunction(std::vector<cplx> samples);

    static PeriodicFunction from_function(const std::function<cplx(double)>& f,
                                          std::size_t m = default_size);
    static PeriodicFunction constant(cplx c, std::size_t m = default_size);
    /// Inverse of coefficients(): c_k in FFT order, normalised by 1/M.
    static PeriodicFunction from_coefficients(std::span<const cplx> coeffs);

    std::size_t size() const noexcept { return samples_.size(); }
    std::span<const cplx> samples() const noexcept { return samples_; }
    const cplx& operator[](std::size_t j) const { return samples_[j]; }

    /// c_k with f(x_j) = sum_k c_k e^{2 pi i k x_j}, in FFT order.
    std::vector<cplx> coefficients() const;

    cplx operator()(double x) const;

    PeriodicFunction& operator+=(const PeriodicFunction& other);
    PeriodicFunction& operator-=(const PeriodicFunction& other);
    PeriodicFunction& operator*=(cplx c);

private:
    std::vector<cplx> samples_;
};

PeriodicFunction operator+(PeriodicFunction a, const PeriodicFunction& b);
PeriodicFunction operator-(PeriodicFunction a, const PeriodicFunction& b);
PeriodicFunction operator*(cplx c, PeriodicFunction a);
PeriodicFunction operator*(PeriodicFunction a, cplx c);

/// Signed wavenumber of FFT slot j for length m (the Nyquist slot maps to m/2).
int wavenumber(std::size_t j, std::size_t m) noexcept;

/// Trigonometric interpolant at x; reproduces the samples at grid points.
cplx evaluate(const PeriodicFunction& f, double x);
/// Interpolant on many points at once.
std::vector<cplx> evaluate(const PeriodicFunction& f, std::span<const double> xs);

PeriodicFunction derivative(const PeriodicFunction& f);
/// x -> f(x - alpha), exact on the interpolant.
PeriodicFunction shift(const PeriodicFunction& f, double alpha);
cplx mean(const PeriodicFunction& f);
PeriodicFunction multiply(const PeriodicFunction& f, const PeriodicFunction& g);
PeriodicFunction conj(const PeriodicFunction& f);
/// Pointwise square root of nonnegative real samples; values in
/// [-1e-10, 0) are treated as zero, anything lower is a domain error.
PeriodicFunction sqrt_nonneg(const PeriodicFunction& f);

double sup_norm(const PeriodicFunction& f);
double sup_distance(const PeriodicFunction& f, const PeriodicFunction& g);

}  // namespace hcycle
