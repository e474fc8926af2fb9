#pragma once

#include "hcycle/periodic.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hcycle {

/// A function on the real line together with what is known about its
/// behaviour at infinity.
class RealLineFunction {
public:
    enum class Kind { periodic, has_limits, generic };

    /// Rejects a declared period that the samples do not respect.
    static RealLineFunction periodic(std::function<cplx(double)> f, double period = 1.0);
    static RealLineFunction with_limits(std::function<cplx(double)> f, cplx at_minus_infinity,
                                        cplx at_plus_infinity);
    static RealLineFunction generic(std::function<cplx(double)> f);

    cplx operator()(double x) const { return f_(x); }
    Kind kind() const noexcept { return kind_; }
    double period() const noexcept { return period_; }
    cplx limit_minus() const noexcept { return limit_minus_; }
    cplx limit_plus() const noexcept { return limit_plus_; }
    /// Length scale below which the function may vary; sets quadrature steps.
    double feature_scale() const noexcept;
    /// Copy with an explicit feature scale.
    RealLineFunction with_feature_scale(double scale) const;

private:
    RealLineFunction(std::function<cplx(double)> f, Kind kind);

    std::function<cplx(double)> f_;
    Kind kind_;
    double period_ = 0.0;
    cplx limit_minus_ = 0.0;
    cplx limit_plus_ = 0.0;
    double scale_ = 0.0;
};

struct MeanResult {
    cplx mu_plus;
    cplx mu_minus;
    cplx mu;
    double error_estimate = 0.0;
};

enum class ZetaMethod { eigen_sum_tail, heat_mellin };

struct ZetaEvaluation {
    cplx s;
    cplx value;
    std::optional<cplx> residue_at_1;
    double error_estimate = 0.0;
    ZetaMethod method = ZetaMethod::eigen_sum_tail;
};

std::string to_string(ZetaMethod m);

/// Heat kernel of H = -d^2/dx^2 + x^2 in the symmetric form
/// exp(-tanh(t)(x+y)^2/4 - coth(t)(x-y)^2/4) / sqrt(2 pi sinh 2t).
double mehler_kernel(double t, double x, double y);
/// Same kernel as exp(-((x^2+y^2) cosh 2t - 2xy) / (2 sinh 2t)) / sqrt(2 pi sinh 2t).
double mehler_kernel_classic(double t, double x, double y);
/// sum_{n < modes} e^{-(2n+1)t} psi_n(x) psi_n(y)
double mehler_eigensum(double t, double x, double y, std::size_t modes = 200);

/// Trace of e^{-tH} by quadrature of the kernel diagonal.
double heat_trace(double t);
/// Integral of f(x) k_t(x - alpha, x), the trace of f T_alpha e^{-tH}.
cplx heat_trace_weighted(const RealLineFunction& f, double alpha, double t);

/// d_n = <f T_alpha psi_n, psi_n>, n < modes, on the default quadrature grid.
std::vector<cplx> diagonal_elements(const RealLineFunction& f, double alpha, std::size_t modes);

/// sum_{n >= first} (2n+1)^{-s} for Re s > 1 or complex s with s != 1.
cplx odd_zeta_tail(cplx s, std::size_t first);

struct ZetaOptions {
    std::size_t modes = 2000;
    ZetaMethod method = ZetaMethod::eigen_sum_tail;
};

/// Tr(f T_alpha H^{-s}).
ZetaEvaluation zeta_trace(const RealLineFunction& f, double alpha, cplx s,
                          const ZetaOptions& options = {});

/// Same sum from precomputed diagonal entries; the tail uses mu when alpha = 0.
ZetaEvaluation zeta_from_diagonal(const std::vector<cplx>& d, cplx mu, bool translated, cplx s);

/// Half the period mean, for periodic f.
cplx residue_at_1(const RealLineFunction& f);

/// Extrapolation of (s-1) Tr(f H^{-s}) over s = 1 + 10^{-j}, j = 1, 2, 3.
cplx residue_extrapolated(const RealLineFunction& f, std::size_t modes = 2000);

MeanResult asymptotic_mean(const RealLineFunction& f, double x_max = 1e4);

/// Limit as alpha -> infinity of (1/2 sqrt pi) int_0^1 int f(x / t^alpha) e^{-x^2} dx dt,
/// extrapolated from alpha_max / 2 and alpha_max.
cplx dixmier_limit(const RealLineFunction& f, double alpha_max = 8.0);
/// Same double integral at a single alpha.
cplx dixmier_integral(const RealLineFunction& f, double alpha);

/// x -> int_0^x f - mu_-(f) x [x <= 0] - mu_+(f) x [x >= 0].
RealLineFunction delta_map(const RealLineFunction& f);

struct EntireCheckRow {
    double s;
    cplx value;
    double pole_part;  ///< |(s - 1) value|
    double error_estimate;
};

struct EntireCheckReport {
    double alpha;
    std::vector<EntireCheckRow> rows;
    double max_abs_value;
    bool pole_vanishes;  ///< pole_part at the s nearest 1 within the tolerance
};

EntireCheckReport entire_check(const RealLineFunction& f, double alpha, const std::vector<double>& s_list,
                               double tolerance = 1e-3, const ZetaOptions& options = {});

}  // namespace hcycle
