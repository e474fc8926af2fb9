#include "hcycle/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcycle {

namespace {

constexpr double rescale_at = 1e150;
const double rescale_log = std::log(rescale_at);

// Hermite recurrence on a mantissa with a shared exponent, so psi_0 may
// underflow in double precision while higher psi_n stay representable.
template <typename Visit>
void hermite_recurrence(std::size_t modes, double x, Visit&& visit)
{
    if (modes == 0) return;
    double exponent = -0.5 * x * x;
    double factor = std::exp(exponent);
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25);
    visit(std::size_t{0}, cur * factor);
    if (modes == 1) return;
    double next = std::sqrt(2.0) * x * cur;
    prev = cur;
    cur = next;
    visit(std::size_t{1}, cur * factor);
    for (std::size_t n = 2; n < modes; ++n) {
        const double dn = static_cast<double>(n);
        next = std::sqrt(2.0 / dn) * x * cur - std::sqrt((dn - 1.0) / dn) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > rescale_at) {
            cur /= rescale_at;
            prev /= rescale_at;
            exponent += rescale_log;
            factor = std::exp(exponent);
        }
        visit(n, cur * factor);
    }
}

void require_positive(double v, const char* what)
{
    if (!(v > 0.0)) throw std::invalid_argument(what);
}

}  // namespace

HermiteBasis::HermiteBasis(std::size_t modes, double half_width, std::size_t points)
    : modes_(modes), half_width_(half_width)
{
    if (modes == 0) throw std::invalid_argument("HermiteBasis needs at least one mode");
    if (half_width_ <= 0.0) half_width_ = std::sqrt(2.0 * static_cast<double>(modes) + 3.0) + 6.0;
    if (points == 0) points = 8 * modes + 1;
    if (points < 2) throw std::invalid_argument("HermiteBasis needs at least two grid points");
    xs_.resize(points);
    weight_ = 2.0 * half_width_ / static_cast<double>(points - 1);
    for (std::size_t j = 0; j < points; ++j) xs_[j] = -half_width_ + weight_ * static_cast<double>(j);
}

double hermite_eval(std::size_t n, double x)
{
    double value = 0.0;
    hermite_recurrence(n + 1, x, [&](std::size_t k, double v) {
        if (k == n) value = v;
    });
    return value;
}

void for_each_hermite(std::size_t modes, double x, const std::function<void(std::size_t, double)>& visit)
{
    hermite_recurrence(modes, x, visit);
}

RealMatrix hermite_table(std::size_t modes, std::span<const double> xs)
{
    RealMatrix table(modes, xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j)
        hermite_recurrence(modes, xs[j], [&](std::size_t k, double v) {
            table(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = v;
        });
    return table;
}

RealMatrix gram_matrix(const HermiteBasis& basis)
{
    const auto psi = hermite_table(basis.modes(), basis.grid());
    return basis.weight() * (psi * psi.transpose());
}

LadderMatrices ladder_matrices(const HermiteBasis& basis)
{
    const auto n = static_cast<Eigen::Index>(basis.modes());
    LadderMatrices out;
    out.A = RealMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) out.A(k - 1, k) = std::sqrt(2.0 * static_cast<double>(k));
    out.Astar = out.A.transpose();
    out.H = RealMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) out.H(k, k) = 2.0 * static_cast<double>(k) + 1.0;
    out.D = RealMatrix::Zero(2 * n, 2 * n);
    out.D.topRightCorner(n, n) = out.Astar;
    out.D.bottomLeftCorner(n, n) = out.A;
    out.grading = RealMatrix::Identity(2 * n, 2 * n);
    out.grading.bottomRightCorner(n, n) *= -1.0;
    return out;
}

BoundedTransform bounded_transform(const HermiteBasis& basis)
{
    const auto n = static_cast<Eigen::Index>(basis.modes());
    BoundedTransform out{RealMatrix::Zero(n, n), RealMatrix::Zero(n, n)};
    for (Eigen::Index k = 1; k < n; ++k) {
        const double dk = static_cast<double>(k);
        // A_{k-1,k} = sqrt(2k); H^{-1/2} on column k, (H+2)^{-1/2} on row k-1.
        out.plus(k - 1, k) = std::sqrt(2.0 * dk) / std::sqrt(2.0 * dk + 1.0);
        out.minus(k, k - 1) = std::sqrt(2.0 * dk) / std::sqrt(2.0 * (dk - 1.0) + 3.0);
    }
    return out;
}

namespace {

OperatorMatrix weighted_gram(std::span<const cplx> values, const HermiteBasis& basis)
{
    const auto psi = hermite_table(basis.modes(), basis.grid());
    Eigen::VectorXd re(values.size()), im(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
        re(static_cast<Eigen::Index>(j)) = basis.weight() * values[j].real();
        im(static_cast<Eigen::Index>(j)) = basis.weight() * values[j].imag();
    }
    OperatorMatrix out = (psi * re.asDiagonal() * psi.transpose()).cast<cplx>();
    if (im.cwiseAbs().maxCoeff() > 0.0)
        out += cplx(0.0, 1.0) * (psi * im.asDiagonal() * psi.transpose()).cast<cplx>();
    return out;
}

}  // namespace

OperatorMatrix mult_operator_matrix(const std::function<cplx(double)>& f, const HermiteBasis& basis)
{
    std::vector<cplx> values;
    values.reserve(basis.points());
    for (double x : basis.grid()) values.push_back(f(x));
    return weighted_gram(values, basis);
}

OperatorMatrix mult_operator_matrix(const PeriodicFunction& f, const HermiteBasis& basis)
{
    return weighted_gram(evaluate(f, basis.grid()), basis);
}

RealMatrix translation_matrix(double alpha, const HermiteBasis& basis)
{
    const auto psi = hermite_table(basis.modes(), basis.grid());
    std::vector<double> moved(basis.grid().begin(), basis.grid().end());
    for (auto& x : moved) x -= alpha;
    const auto shifted = hermite_table(basis.modes(), moved);
    return basis.weight() * (psi * shifted.transpose());
}

OperatorMatrix represent(const AlgebraElement& a, const HermiteBasis& basis, double scale)
{
    require_positive(scale, "represent: scale must be positive");
    const auto n = static_cast<Eigen::Index>(basis.modes());
    const auto xs = basis.grid();
    const auto psi = hermite_table(basis.modes(), xs);

    std::vector<double> scaled(xs.begin(), xs.end());
    for (auto& x : scaled) x *= scale;

    OperatorMatrix out = OperatorMatrix::Zero(n, n);
    for (const auto& [degree, f] : a.coeffs()) {
        const auto values = evaluate(f, scaled);
        Eigen::VectorXd re(values.size()), im(values.size());
        for (std::size_t j = 0; j < values.size(); ++j) {
            re(static_cast<Eigen::Index>(j)) = basis.weight() * values[j].real();
            im(static_cast<Eigen::Index>(j)) = basis.weight() * values[j].imag();
        }
        RealMatrix right;
        if (degree == 0) {
            right = psi;
        } else {
            std::vector<double> moved(xs.begin(), xs.end());
            for (auto& x : moved) x += degree * a.hbar() / scale;
            right = hermite_table(basis.modes(), moved);
        }
        const RealMatrix left = psi * re.asDiagonal();
        out += (left * right.transpose()).cast<cplx>();
        if (im.cwiseAbs().maxCoeff() > 0.0) {
            const RealMatrix left_im = psi * im.asDiagonal();
            out += cplx(0.0, 1.0) * (left_im * right.transpose()).cast<cplx>();
        }
    }
    return out;
}

OperatorMatrix interior_block(const OperatorMatrix& m, std::size_t size)
{
    const auto n = size == 0 ? m.rows() / 2 : static_cast<Eigen::Index>(size);
    return m.topLeftCorner(n, n);
}

}  // namespace hcycle
