#include "hcycle/heatzeta.hpp"

#include "hcycle/oscillator.hpp"
#include "quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcycle {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive_time(double t)
{
    if (!(t > 0.0)) throw std::domain_error("heat kernel needs t > 0, got " + std::to_string(t));
}

cplx inverse_gamma(cplx s)
{
    gsl_sf_result lnr, arg;
    gsl_error_handler_t* old = gsl_set_error_handler_off();
    const int status = gsl_sf_lngamma_complex_e(s.real(), s.imag(), &lnr, &arg);
    gsl_set_error_handler(old);
    if (status != GSL_SUCCESS) return 0.0;  // poles of Gamma
    return std::exp(-cplx(lnr.val, arg.val));
}

cplx power_minus(double base, cplx s) { return std::exp(-s * std::log(base)); }

// One-sided running mean (1/x) int_0^x f at x = x_max / 4, x_max / 2, x_max.
void running_means(const RealLineFunction& f, double x_max, cplx (&out)[3])
{
    const double width = std::min(0.5, f.feature_scale());
    auto g = [&f](double x) { return f(x); };
    const double marks[3] = {x_max / 4.0, x_max / 2.0, x_max};
    cplx acc = 0.0;
    double from = 0.0;
    for (int i = 0; i < 3; ++i) {
        acc += detail::composite_gauss(g, from, marks[i], width);
        from = marks[i];
        out[i] = acc / marks[i];
    }
}

}  // namespace

RealLineFunction::RealLineFunction(std::function<cplx(double)> f, Kind kind)
    : f_(std::move(f)), kind_(kind)
{
    if (!f_) throw std::invalid_argument("RealLineFunction needs a callable");
}

RealLineFunction RealLineFunction::periodic(std::function<cplx(double)> f, double period)
{
    if (!(period > 0.0)) throw std::invalid_argument("period must be positive");
    RealLineFunction out(std::move(f), Kind::periodic);
    out.period_ = period;
    for (int j = 0; j < 64; ++j) {
        const double x = period * (j + 0.37) / 64.0;
        const cplx a = out(x);
        const cplx b = out(x + period);
        if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a)))
            throw std::invalid_argument("function is not periodic with period " + std::to_string(period));
    }
    return out;
}

RealLineFunction RealLineFunction::with_limits(std::function<cplx(double)> f, cplx at_minus_infinity,
                                               cplx at_plus_infinity)
{
    RealLineFunction out(std::move(f), Kind::has_limits);
    out.limit_minus_ = at_minus_infinity;
    out.limit_plus_ = at_plus_infinity;
    return out;
}

RealLineFunction RealLineFunction::generic(std::function<cplx(double)> f)
{
    return RealLineFunction(std::move(f), Kind::generic);
}

RealLineFunction RealLineFunction::with_feature_scale(double scale) const
{
    if (!(scale > 0.0)) throw std::invalid_argument("feature scale must be positive");
    RealLineFunction out = *this;
    out.scale_ = scale;
    return out;
}

double RealLineFunction::feature_scale() const noexcept
{
    if (scale_ > 0.0) return scale_;
    return kind_ == Kind::periodic ? std::min(0.25, period_ / 8.0) : 0.25;
}

std::string to_string(ZetaMethod m)
{
    return m == ZetaMethod::eigen_sum_tail ? "eigen_sum_tail" : "heat_mellin";
}

double mehler_kernel(double t, double x, double y)
{
    require_positive_time(t);
    const double sum = x + y;
    const double diff = x - y;
    return std::exp(-std::tanh(t) * sum * sum / 4.0 - diff * diff / (4.0 * std::tanh(t))) /
           std::sqrt(2.0 * pi * std::sinh(2.0 * t));
}

double mehler_kernel_classic(double t, double x, double y)
{
    require_positive_time(t);
    const double s2 = std::sinh(2.0 * t);
    return std::exp(-((x * x + y * y) * std::cosh(2.0 * t) - 2.0 * x * y) / (2.0 * s2)) /
           std::sqrt(2.0 * pi * s2);
}

double mehler_eigensum(double t, double x, double y, std::size_t modes)
{
    require_positive_time(t);
    std::vector<double> px(modes), py(modes);
    for_each_hermite(modes, x, [&](std::size_t n, double v) { px[n] = v; });
    for_each_hermite(modes, y, [&](std::size_t n, double v) { py[n] = v; });
    double sum = 0.0;
    for (std::size_t n = 0; n < modes; ++n)
        sum += std::exp(-(2.0 * static_cast<double>(n) + 1.0) * t) * px[n] * py[n];
    return sum;
}

double heat_trace(double t)
{
    require_positive_time(t);
    const auto one = RealLineFunction::generic([](double) { return cplx(1.0); });
    return heat_trace_weighted(one, 0.0, t).real();
}

cplx heat_trace_weighted(const RealLineFunction& f, double alpha, double t)
{
    require_positive_time(t);
    const double th = std::tanh(t);
    // k_t(x - alpha, x) = exp(-tanh t (x - alpha/2)^2 - coth t alpha^2 / 4) / sqrt(2 pi sinh 2t)
    const double envelope = std::exp(-alpha * alpha / (4.0 * th)) / std::sqrt(2.0 * pi * std::sinh(2.0 * t));
    if (envelope == 0.0) return 0.0;
    const double sigma = 1.0 / std::sqrt(2.0 * th);
    const double half = std::sqrt(40.0 / th);
    const double h = std::min(sigma / 3.0, f.feature_scale() / 16.0);
    const auto steps = static_cast<long>(std::ceil(half / h));
    const double step = half / static_cast<double>(steps);
    const double centre = alpha / 2.0;
    cplx sum = 0.0;
    for (long j = -steps; j <= steps; ++j) {
        const double u = step * static_cast<double>(j);
        sum += f(centre + u) * std::exp(-th * u * u);
    }
    return sum * step * envelope;
}

std::vector<cplx> diagonal_elements(const RealLineFunction& f, double alpha, std::size_t modes)
{
    const HermiteBasis basis(modes);
    std::vector<cplx> d(modes, 0.0);
    std::vector<double> here(modes), moved(modes);
    for (double x : basis.grid()) {
        const cplx fx = f(x) * basis.weight();
        if (fx == 0.0) continue;
        for_each_hermite(modes, x, [&](std::size_t n, double v) { here[n] = v; });
        if (alpha == 0.0) {
            for (std::size_t n = 0; n < modes; ++n) d[n] += fx * (here[n] * here[n]);
        } else {
            for_each_hermite(modes, x - alpha, [&](std::size_t n, double v) { moved[n] = v; });
            for (std::size_t n = 0; n < modes; ++n) d[n] += fx * (here[n] * moved[n]);
        }
    }
    return d;
}

cplx odd_zeta_tail(cplx s, std::size_t first)
{
    if (s == cplx(1.0)) throw std::domain_error("odd zeta tail has a pole at s = 1");
    // Euler-Maclaurin with a direct head so the expansion point is large.
    const std::size_t start = std::max<std::size_t>(first, 64);
    cplx head = 0.0;
    for (std::size_t n = first; n < start; ++n) head += power_minus(2.0 * static_cast<double>(n) + 1.0, s);

    const double q = 2.0 * static_cast<double>(start) + 1.0;
    cplx tail = std::exp((1.0 - s) * std::log(q)) / (2.0 * (s - 1.0)) + 0.5 * power_minus(q, s);
    static constexpr double bernoulli[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0};
    double factorial = 1.0;
    cplx falling = -s;  // (-s)(-s-1)...(-s-m+1) for m = 2k-1
    double two_pow = 2.0;
    for (int k = 1; k <= 5; ++k) {
        const int m = 2 * k - 1;
        if (k > 1) {
            falling *= (-s - double(m - 2)) * (-s - double(m - 1));
            two_pow *= 4.0;
        }
        factorial *= (k == 1) ? 2.0 : double(2 * k - 1) * double(2 * k);
        const cplx deriv = two_pow * falling * power_minus(q, s + double(m));
        tail -= bernoulli[k - 1] / factorial * deriv;
    }
    return head + tail;
}

ZetaEvaluation zeta_from_diagonal(const std::vector<cplx>& d, cplx mu, bool translated, cplx s)
{
    const std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("empty diagonal");
    ZetaEvaluation out;
    out.s = s;
    out.method = ZetaMethod::eigen_sum_tail;
    cplx sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) sum += d[k] * power_minus(2.0 * static_cast<double>(k) + 1.0, s);

    double drift = 0.0;
    for (std::size_t k = n - n / 4; k < n; ++k) drift = std::max(drift, std::abs(d[k] - (translated ? 0.0 : mu)));
    const double last = std::abs(d[n - 1] * power_minus(2.0 * static_cast<double>(n) - 1.0, s));
    if (translated) {
        out.value = sum;
        out.error_estimate = last + drift * std::abs(power_minus(2.0 * static_cast<double>(n) + 1.0, s));
    } else {
        const cplx tail = odd_zeta_tail(s, n);
        out.value = sum + mu * tail;
        out.error_estimate = drift * std::abs(tail);
    }
    return out;
}

ZetaEvaluation zeta_trace(const RealLineFunction& f, double alpha, cplx s, const ZetaOptions& options)
{
    if (options.method == ZetaMethod::heat_mellin) {
        if (alpha == 0.0)
            throw std::domain_error("heat_mellin zeta needs a nonzero translation");
        const double t_lo = std::max(1e-8, alpha * alpha / 200.0);
        const double t_hi = 60.0;
        auto integrand = [&](double u) {
            const double t = std::exp(u);
            return std::exp(s * u) * heat_trace_weighted(f, alpha, t);
        };
        ZetaEvaluation out;
        out.s = s;
        out.method = ZetaMethod::heat_mellin;
        const cplx integral = detail::composite_gauss(integrand, std::log(t_lo), std::log(t_hi), 0.25);
        out.value = inverse_gamma(s) * integral;
        out.error_estimate = 1e-10 * std::max(1.0, std::abs(out.value));
        return out;
    }

    const bool translated = alpha != 0.0;
    if (!translated && f.kind() == RealLineFunction::Kind::generic && s.real() <= 1.0)
        throw std::domain_error("zeta_trace: generic function needs Re(s) > 1");
    const auto d = diagonal_elements(f, alpha, options.modes);
    const cplx mu = translated ? cplx(0.0) : asymptotic_mean(f).mu;
    return zeta_from_diagonal(d, mu, translated, s);
}

cplx residue_at_1(const RealLineFunction& f)
{
    if (f.kind() != RealLineFunction::Kind::periodic)
        throw std::domain_error("residue_at_1 needs a periodic function");
    return asymptotic_mean(f).mu / 2.0;
}

cplx residue_extrapolated(const RealLineFunction& f, std::size_t modes)
{
    const auto d = diagonal_elements(f, 0.0, modes);
    const cplx mu = asymptotic_mean(f).mu;
    const double h[3] = {1e-1, 1e-2, 1e-3};
    cplx g[3];
    for (int j = 0; j < 3; ++j) g[j] = h[j] * zeta_from_diagonal(d, mu, false, 1.0 + h[j]).value;
    return detail::extrapolate_to_zero(h, g);
}

MeanResult asymptotic_mean(const RealLineFunction& f, double x_max)
{
    MeanResult out;
    if (f.kind() == RealLineFunction::Kind::periodic) {
        const double rho = f.period();
        auto g = [&f](double x) { return f(x); };
        out.mu = detail::composite_gauss(g, 0.0, rho, rho / 64.0) / rho;
        out.mu_plus = out.mu_minus = out.mu;
        return out;
    }
    if (!(x_max > 0.0)) throw std::invalid_argument("asymptotic_mean needs x_max > 0");
    const double h[3] = {4.0 / x_max, 2.0 / x_max, 1.0 / x_max};
    cplx plus[3], minus[3];
    running_means(f, x_max, plus);
    const auto reflected = RealLineFunction::generic([&f](double x) { return f(-x); });
    running_means(reflected, x_max, minus);
    out.mu_plus = detail::extrapolate_to_zero(h, plus);
    out.mu_minus = detail::extrapolate_to_zero(h, minus);
    out.mu = 0.5 * (out.mu_plus + out.mu_minus);
    out.error_estimate = std::abs(out.mu_plus - plus[2]) + std::abs(out.mu_minus - minus[2]);
    return out;
}

cplx dixmier_integral(const RealLineFunction& f, double alpha)
{
    if (!(alpha > 0.0)) throw std::invalid_argument("dixmier_integral needs alpha > 0");
    constexpr double u_floor = 1e-3;
    // G(u) = (u / 2 sqrt pi) int f(y) e^{-u^2 y^2} dy
    auto inner = [&f](double u) {
        const double half = 7.0 / u;
        const double h = std::min(f.feature_scale() / 4.0, 0.25 / u);
        const auto steps = static_cast<long>(std::ceil(half / h));
        const double step = half / static_cast<double>(steps);
        cplx sum = 0.0;
        for (long j = -steps; j <= steps; ++j) {
            const double y = step * static_cast<double>(j);
            sum += f(y) * std::exp(-u * u * y * y);
        }
        return sum * step * u / (2.0 * std::sqrt(pi));
    };
    // With t = e^{-w}, u = t^alpha: I = int_0^inf G(e^{-alpha w}) e^{-w} dw.
    const double w_floor = -std::log(u_floor) / alpha;
    auto outer = [&](double w) { return inner(std::exp(-alpha * w)) * std::exp(-w); };
    const cplx body = detail::composite_gauss(outer, 0.0, w_floor, w_floor / 8.0);
    return body + inner(u_floor) * std::exp(-w_floor);
}

cplx dixmier_limit(const RealLineFunction& f, double alpha_max)
{
    const double h[2] = {2.0 / alpha_max, 1.0 / alpha_max};
    const cplx g[2] = {dixmier_integral(f, alpha_max / 2.0), dixmier_integral(f, alpha_max)};
    return detail::extrapolate_to_zero(h, g);
}

RealLineFunction delta_map(const RealLineFunction& f)
{
    cplx mu_minus, mu_plus;
    switch (f.kind()) {
    case RealLineFunction::Kind::periodic: {
        const cplx mu = asymptotic_mean(f).mu;
        mu_minus = mu_plus = mu;
        break;
    }
    case RealLineFunction::Kind::has_limits:
        mu_minus = f.limit_minus();
        mu_plus = f.limit_plus();
        break;
    case RealLineFunction::Kind::generic: {
        const auto m = asymptotic_mean(f);
        if (!(m.error_estimate <= 1e-6))
            throw std::domain_error("delta_map: asymptotic means did not converge (error " +
                                    std::to_string(m.error_estimate) + ")");
        mu_minus = m.mu_minus;
        mu_plus = m.mu_plus;
        break;
    }
    }
    const double width = std::min(0.25, f.feature_scale());
    auto primitive = [f, mu_minus, mu_plus, width](double x) {
        auto g = [&f](double y) { return f(y); };
        const cplx integral = detail::composite_gauss(g, 0.0, x, width);
        return integral - (x <= 0.0 ? mu_minus : mu_plus) * x;
    };
    if (f.kind() == RealLineFunction::Kind::periodic) {
        const double rho = f.period();
        return RealLineFunction::periodic(
            [primitive, rho](double x) { return primitive(x - rho * std::floor(x / rho)); }, rho);
    }
    return RealLineFunction::generic(primitive);
}

EntireCheckReport entire_check(const RealLineFunction& f, double alpha, const std::vector<double>& s_list,
                               double tolerance, const ZetaOptions& options)
{
    if (alpha == 0.0) throw std::domain_error("entire_check needs alpha != 0");
    if (s_list.empty()) throw std::invalid_argument("entire_check needs at least one s");
    EntireCheckReport report{alpha, {}, 0.0, false};
    const auto d = options.method == ZetaMethod::eigen_sum_tail ? diagonal_elements(f, alpha, options.modes)
                                                                 : std::vector<cplx>{};
    double nearest = 0.0, gap = INFINITY;
    for (double s : s_list) {
        const auto z = options.method == ZetaMethod::eigen_sum_tail ? zeta_from_diagonal(d, 0.0, true, s)
                                                                    : zeta_trace(f, alpha, s, options);
        const double pole = std::abs((s - 1.0) * z.value);
        report.rows.push_back({s, z.value, pole, z.error_estimate});
        report.max_abs_value = std::max(report.max_abs_value, std::abs(z.value));
        if (std::abs(s - 1.0) < gap) {
            gap = std::abs(s - 1.0);
            nearest = pole;
        }
    }
    report.pole_vanishes = nearest <= tolerance;
    return report;
}

}  // namespace hcycle
