#pragma once

#include "hcycle/algebra.hpp"
#include "hcycle/periodic.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hcycle {

using OperatorMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Hermite functions psi_0..psi_{N-1} with a uniform quadrature grid of K
/// points on [-L, L].
class HermiteBasis {
public:
    /// L = sqrt(2N + 3) + 6 and K = 8N + 1 unless given.
    explicit HermiteBasis(std::size_t modes, double half_width = 0.0, std::size_t points = 0);

    std::size_t modes() const noexcept { return modes_; }
    double half_width() const noexcept { return half_width_; }
    std::size_t points() const noexcept { return xs_.size(); }
    double weight() const noexcept { return weight_; }
    std::span<const double> grid() const noexcept { return xs_; }

private:
    std::size_t modes_;
    double half_width_;
    double weight_;
    std::vector<double> xs_;
};

/// Normalised Hermite function psi_n(x), stable for large n and |x|.
double hermite_eval(std::size_t n, double x);

/// Row k holds psi_k at the points xs.
RealMatrix hermite_table(std::size_t modes, std::span<const double> xs);

/// Visits psi_0(x)..psi_{modes-1}(x) in order without storing them.
void for_each_hermite(std::size_t modes, double x, const std::function<void(std::size_t, double)>& visit);

/// Quadrature Gram matrix of the basis.
RealMatrix gram_matrix(const HermiteBasis& basis);

struct LadderMatrices {
    RealMatrix A;        ///< A psi_k = sqrt(2k) psi_{k-1}
    RealMatrix Astar;    ///< transpose of A
    RealMatrix H;        ///< diag(2k + 1)
    RealMatrix D;        ///< [[0, A^*], [A, 0]] on the doubled space
    RealMatrix grading;  ///< diag(I, -I)
};

LadderMatrices ladder_matrices(const HermiteBasis& basis);

struct BoundedTransform {
    RealMatrix plus;   ///< A H^{-1/2}
    RealMatrix minus;  ///< A^* (H + 2)^{-1/2}
};

BoundedTransform bounded_transform(const HermiteBasis& basis);

/// Matrix of multiplication by f in the Hermite basis.
OperatorMatrix mult_operator_matrix(const std::function<cplx(double)>& f, const HermiteBasis& basis);
OperatorMatrix mult_operator_matrix(const PeriodicFunction& f, const HermiteBasis& basis);

/// (T_alpha)_{mn} = integral of psi_m(x) psi_n(x - alpha).
RealMatrix translation_matrix(double alpha, const HermiteBasis& basis);

/// Matrix of the represented element sum_n M_{f_n} V^n, with V xi(x) = xi(x + hbar).
///
/// The scale s > 0 represents the same element through x -> s x:
/// coefficients are read at s x and V translates by hbar / s. Any s gives a
/// unitarily equivalent representation.
OperatorMatrix represent(const AlgebraElement& a, const HermiteBasis& basis, double scale = 1.0);

/// Top-left rows x cols block; the default keeps floor(N/2) modes.
OperatorMatrix interior_block(const OperatorMatrix& m, std::size_t size = 0);

}  // namespace hcycle
