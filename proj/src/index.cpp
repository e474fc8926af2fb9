#include "hcycle/index.hpp"

#include "quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcycle {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// d_n = <pi(a) psi_n, psi_n> = sum_m int f_m(x) psi_n(x) psi_n(x + m hbar) dx.
std::vector<cplx> represented_diagonal(const AlgebraElement& a, const HermiteBasis& basis)
{
    const std::size_t modes = basis.modes();
    const auto xs = basis.grid();
    std::vector<cplx> d(modes, 0.0);
    std::vector<double> here(modes), moved(modes);
    for (const auto& [degree, f] : a.coeffs()) {
        const auto values = evaluate(f, xs);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const cplx w = values[j] * basis.weight();
            if (w == 0.0) continue;
            for_each_hermite(modes, xs[j], [&](std::size_t n, double v) { here[n] = v; });
            const double* partner = here.data();
            if (degree != 0) {
                for_each_hermite(modes, xs[j] + degree * a.hbar(), [&](std::size_t n, double v) { moved[n] = v; });
                partner = moved.data();
            }
            for (std::size_t n = 0; n < modes; ++n) d[n] += w * (here[n] * partner[n]);
        }
    }
    return d;
}

cplx theta_from_diagonal(const std::vector<cplx>& d, cplx tail_mean, double t)
{
    const std::size_t modes = d.size();
    cplx sum = d[0] * (std::exp(-t) - std::exp(-2.0 * t));
    const double gap = 1.0 - std::exp(-2.0 * t);
    for (std::size_t n = 1; n < modes; ++n) sum += d[n] * (gap * std::exp(-2.0 * t * static_cast<double>(n)));
    return sum + tail_mean * std::exp(-2.0 * t * static_cast<double>(modes));
}

double rms_wavenumber(const AlgebraElement& e)
{
    double num = 0.0, den = 0.0;
    for (const auto& [degree, f] : e.coeffs()) {
        const auto c = f.coefficients();
        for (std::size_t j = 0; j < c.size(); ++j) {
            const double k = wavenumber(j, c.size());
            const double p = std::norm(c[j]);
            num += k * k * p;
            den += p;
        }
    }
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
}

}  // namespace

cplx psi0_theta(const AlgebraElement& a, const HermiteBasis& basis, double t)
{
    return theta_from_diagonal(represented_diagonal(a, basis), trace(a), t);
}

cplx psi0(const AlgebraElement& a, const HermiteBasis& basis, std::span<const double> t_list)
{
    if (t_list.size() != 3) throw std::invalid_argument("psi0 expects three extrapolation times");
    const auto d = represented_diagonal(a, basis);
    const cplx mu = trace(a);
    const double h[3] = {t_list[0], t_list[1], t_list[2]};
    const cplx g[3] = {theta_from_diagonal(d, mu, h[0]), theta_from_diagonal(d, mu, h[1]),
                       theta_from_diagonal(d, mu, h[2])};
    return detail::extrapolate_to_zero(h, g);
}

cplx psi2(const AlgebraElement& a0, const AlgebraElement& a1, const AlgebraElement& a2)
{
    return a0.hbar() / cplx(0.0, two_pi) * tau2(a0, a1, a2);
}

double auto_dilation(const AlgebraElement& e)
{
    bool translates = false;
    for (const auto& [degree, f] : e.coeffs())
        if (degree != 0 && sup_norm(f) > 0.0) translates = true;
    const double k = rms_wavenumber(e);
    if (!translates || e.hbar() == 0.0 || k == 0.0) return 1.0;
    const double kappa = 0.5 * std::sqrt(std::abs(e.hbar()) / (two_pi * k));
    return std::clamp(kappa, 0.05, 1.0);
}

FedosovResult fedosov_details(const AlgebraElement& e, const HermiteBasis& basis, const FedosovOptions& options)
{
    if (basis.modes() < 200) throw std::invalid_argument("fedosov_index needs at least 200 modes");
    const double defect = projection_defect(e);
    if (defect > 1e-8)
        throw std::domain_error("fedosov_index: not a projection (defect " + std::to_string(defect) + ")");

    FedosovResult out;
    out.dilation = options.dilation > 0.0 ? options.dilation : auto_dilation(e);
    const auto n = static_cast<Eigen::Index>(basis.modes());
    const OperatorMatrix r = represent(e, basis, out.dilation);
    const OperatorMatrix hermitian = 0.5 * (r + r.adjoint());

    Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(hermitian);
    if (eig.info() != Eigen::Success) throw std::runtime_error("fedosov_index: eigensolver failed");
    const auto& lambda = eig.eigenvalues();
    const auto& vecs = eig.eigenvectors();
    Eigen::VectorXd keep(n);
    const Eigen::Index lower = n / 2;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double l = lambda(k);
        keep(k) = l >= 0.5 ? 1.0 : 0.0;
        if (std::min(std::abs(l), std::abs(1.0 - l)) > options.cluster_tolerance) {
            ++out.unclustered;
            if (vecs.col(k).head(lower).squaredNorm() > 0.5) ++out.unclustered_interior;
        }
    }
    if (out.unclustered_interior > 0)
        throw std::domain_error("fedosov_index: projection spectrum not clustered (" +
                                std::to_string(out.unclustered_interior) +
                                " eigenvalues away from {0, 1} in the lower modes); increase N");

    const OperatorMatrix p = vecs * keep.asDiagonal() * vecs.adjoint();
    const auto f = bounded_transform(basis);
    const OperatorMatrix t = p * f.plus.cast<cplx>() * p;
    const OperatorMatrix s = p * f.minus.cast<cplx>() * p;
    const OperatorMatrix x = p - s * t;
    const OperatorMatrix y = p - t * s;

    out.window = std::clamp<std::size_t>(
        static_cast<std::size_t>(options.window_fraction * static_cast<double>(basis.modes())), 1, basis.modes());
    const auto w = static_cast<Eigen::Index>(out.window);
    // diag(X^2)_k = sum_j X_kj X_jk
    const cplx value = (x.topRows(w).cwiseProduct(x.leftCols(w).transpose())).sum() -
                       (y.topRows(w).cwiseProduct(y.leftCols(w).transpose())).sum();
    out.value = value.real();
    out.imaginary = value.imag();
    if (std::abs(out.imaginary) > options.imaginary_tolerance)
        throw std::runtime_error("fedosov_index: trace has imaginary part " + std::to_string(out.imaginary));
    return out;
}

double fedosov_index(const AlgebraElement& e, const HermiteBasis& basis, const FedosovOptions& options)
{
    return fedosov_details(e, basis, options).value;
}

double closed_form_pairing(const AlgebraElement& e)
{
    return trace(e).real() - e.hbar() * curvature_c1(e).real();
}

PairingReport pairing(const AlgebraElement& e, const HermiteBasis& basis, const FedosovOptions& options)
{
    PairingReport out;
    out.hbar = e.hbar();
    out.modes = basis.modes();
    out.closed_form = closed_form_pairing(e);
    const auto half = 0.5 * AlgebraElement::identity(e.hbar(), e.grid());
    out.local_formula = psi0(e, basis).real() - psi2(e - half, e, e).real();
    const auto fed = fedosov_details(e, basis, options);
    out.fedosov = fed.value;
    out.dilation = fed.dilation;
    out.rounded_integer = std::lround(out.fedosov);
    const double k = static_cast<double>(out.rounded_integer);
    out.residuals = {std::abs(out.fedosov - k), std::abs(out.local_formula - k), std::abs(out.closed_form - k)};
    return out;
}

std::vector<PairingReport> sweep(std::span<const double> hbars, const HermiteBasis& basis,
                                 const FedosovOptions& options)
{
    std::vector<PairingReport> out;
    out.reserve(hbars.size());
    for (double h : hbars) out.push_back(pairing(rieffel_projection(h), basis, options));
    return out;
}

}  // namespace hcycle
