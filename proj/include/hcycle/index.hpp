#pragma once

#include "hcycle/algebra.hpp"
#include "hcycle/oscillator.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace hcycle {

/// Default Richardson nodes for the small-t limit in psi0.
inline constexpr std::array<double, 3> psi0_default_times{0.02, 0.01, 0.005};

/// Degree-zero local term: the t -> 0 limit of
/// theta(t) = sum_n d_n (e^{-t lambda+_n} - e^{-t lambda-_n}), where
/// lambda+ = 1, 2, 4, 6, ... and lambda-_n = 2n + 2, with d_n = <a psi_n, psi_n>
/// and the modes past the basis replaced by trace(a).
cplx psi0(const AlgebraElement& a, const HermiteBasis& basis,
          std::span<const double> t_list = psi0_default_times);

/// theta(t) itself, for inspection.
cplx psi0_theta(const AlgebraElement& a, const HermiteBasis& basis, double t);

/// (hbar / 2 pi i) tau2(a0, a1, a2).
cplx psi2(const AlgebraElement& a0, const AlgebraElement& a1, const AlgebraElement& a2);

struct FedosovOptions {
    /// Position rescaling used for the representation; 0 picks one from e.
    double dilation = 0.0;
    /// Fraction of the modes, counted from the ground state, in the trace.
    double window_fraction = 3.0 / 8.0;
    /// Eigenvalues of the represented projection must lie this close to 0 or 1
    /// unless their eigenvector lives mostly in the upper half of the modes.
    double cluster_tolerance = 1e-2;
    /// Largest admitted imaginary part of the trace.
    double imaginary_tolerance = 1e-6;
};

struct FedosovResult {
    double value = 0.0;
    double imaginary = 0.0;
    double dilation = 1.0;
    std::size_t window = 0;
    std::size_t unclustered = 0;           ///< all eigenvalues away from {0, 1}
    std::size_t unclustered_interior = 0;  ///< those living mainly in the lower modes
};

/// Rescaling that balances the element's rms frequency against its
/// translation length in phase space.
double auto_dilation(const AlgebraElement& e);

/// Tr((P - ST)^2) - Tr((P - TS)^2) for T = P F+ P, S = P F- P, with P the
/// spectral rounding of the represented element. The trace runs over the
/// lowest window_fraction * N modes; the same expression over the full
/// truncation is identically zero.
FedosovResult fedosov_details(const AlgebraElement& e, const HermiteBasis& basis,
                              const FedosovOptions& options = {});
double fedosov_index(const AlgebraElement& e, const HermiteBasis& basis, const FedosovOptions& options = {});

/// tau(e) - hbar c1(e)
double closed_form_pairing(const AlgebraElement& e);

struct PairingReport {
    double hbar = 0.0;
    double closed_form = 0.0;
    double local_formula = 0.0;
    double fedosov = 0.0;
    long rounded_integer = 0;
    std::array<double, 3> residuals{};  ///< |route - rounded_integer|: fedosov, local, closed
    std::size_t modes = 0;
    double dilation = 1.0;
};

PairingReport pairing(const AlgebraElement& e, const HermiteBasis& basis, const FedosovOptions& options = {});

/// Pairing of the projection built for each hbar.
std::vector<PairingReport> sweep(std::span<const double> hbars, const HermiteBasis& basis,
                                 const FedosovOptions& options = {});

}  // namespace hcycle
