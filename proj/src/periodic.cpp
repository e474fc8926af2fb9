#include "hcycle/periodic.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcycle {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Plans are cached per (size, sign). FFTW planning is not reentrant, so the
// cache lock also covers creation; execution via new-array calls is safe.
class PlanCache {
public:
    static PlanCache& instance()
    {
        static PlanCache cache;
        return cache;
    }

    void run(std::vector<cplx>& data, int sign)
    {
        const int n = static_cast<int>(data.size());
        auto* buf = reinterpret_cast<fftw_complex*>(data.data());
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto key = std::make_pair(n, sign);
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<cplx> scratch(data.size());
                auto* s = reinterpret_cast<fftw_complex*>(scratch.data());
                plan = fftw_plan_dft_1d(n, s, s, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        fftw_execute_dft(plan, buf, buf);
    }

    PlanCache(const PlanCache&) = delete;
    PlanCache& operator=(const PlanCache&) = delete;

    ~PlanCache()
    {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    PlanCache() = default;
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

std::vector<cplx> forward(std::span<const cplx> samples)
{
    std::vector<cplx> c(samples.begin(), samples.end());
    PlanCache::instance().run(c, FFTW_FORWARD);
    const double inv = 1.0 / static_cast<double>(c.size());
    for (auto& v : c) v *= inv;
    return c;
}

std::vector<cplx> backward(std::vector<cplx> coeffs)
{
    PlanCache::instance().run(coeffs, FFTW_BACKWARD);
    return coeffs;
}

void require_same_size(const PeriodicFunction& a, const PeriodicFunction& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("periodic functions on different grids: " +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

}  // namespace

PeriodicFunction::PeriodicFunction(std::vector<cplx> samples) : samples_(std::move(samples))
{
    if (samples_.empty() || samples_.size() % 2 != 0)
        throw std::invalid_argument("periodic grid size must be positive and even");
}

PeriodicFunction PeriodicFunction::from_function(const std::function<cplx(double)>& f,
                                                 std::size_t m)
{
    std::vector<cplx> s(m);
    for (std::size_t j = 0; j < m; ++j) s[j] = f(static_cast<double>(j) / static_cast<double>(m));
    return PeriodicFunction(std::move(s));
}

PeriodicFunction PeriodicFunction::constant(cplx c, std::size_t m)
{
    return PeriodicFunction(std::vector<cplx>(m, c));
}

PeriodicFunction PeriodicFunction::from_coefficients(std::span<const cplx> coeffs)
{
    return PeriodicFunction(backward(std::vector<cplx>(coeffs.begin(), coeffs.end())));
}

std::vector<cplx> PeriodicFunction::coefficients() const { return forward(samples_); }

cplx PeriodicFunction::operator()(double x) const { return evaluate(*this, x); }

PeriodicFunction& PeriodicFunction::operator+=(const PeriodicFunction& other)
{
    require_same_size(*this, other);
    for (std::size_t j = 0; j < size(); ++j) samples_[j] += other.samples_[j];
    return *this;
}

PeriodicFunction& PeriodicFunction::operator-=(const PeriodicFunction& other)
{
    require_same_size(*this, other);
    for (std::size_t j = 0; j < size(); ++j) samples_[j] -= other.samples_[j];
    return *this;
}

PeriodicFunction& PeriodicFunction::operator*=(cplx c)
{
    for (auto& v : samples_) v *= c;
    return *this;
}

PeriodicFunction operator+(PeriodicFunction a, const PeriodicFunction& b) { return a += b; }
PeriodicFunction operator-(PeriodicFunction a, const PeriodicFunction& b) { return a -= b; }
PeriodicFunction operator*(cplx c, PeriodicFunction a) { return a *= c; }
PeriodicFunction operator*(PeriodicFunction a, cplx c) { return a *= c; }

int wavenumber(std::size_t j, std::size_t m) noexcept
{
    return j <= m / 2 ? static_cast<int>(j) : static_cast<int>(j) - static_cast<int>(m);
}

cplx evaluate(const PeriodicFunction& f, double x)
{
    const double xs[1] = {x};
    return evaluate(f, std::span<const double>(xs, 1)).front();
}

std::vector<cplx> evaluate(const PeriodicFunction& f, std::span<const double> xs)
{
    const std::size_t m = f.size();
    const auto c = f.coefficients();
    const std::size_t half = m / 2;
    std::vector<cplx> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i] - std::floor(xs[i]);
        // Horner-free summation with a rotating phase, paired +k / -k.
        const cplx w = std::polar(1.0, two_pi * x);
        cplx z = w;
        cplx acc = c[0];
        for (std::size_t k = 1; k < half; ++k) {
            acc += c[k] * z + c[m - k] * std::conj(z);
            z *= w;
            if ((k & 63u) == 0) z = std::polar(1.0, two_pi * x * static_cast<double>(k + 1));
        }
        acc += c[half] * std::cos(std::numbers::pi * static_cast<double>(m) * x);
        out[i] = acc;
    }
    return out;
}

PeriodicFunction derivative(const PeriodicFunction& f)
{
    auto c = f.coefficients();
    const std::size_t m = c.size();
    for (std::size_t j = 0; j < m; ++j) c[j] *= cplx(0.0, two_pi * wavenumber(j, m));
    c[m / 2] = 0.0;
    return PeriodicFunction(backward(std::move(c)));
}

PeriodicFunction shift(const PeriodicFunction& f, double alpha)
{
    auto c = f.coefficients();
    const std::size_t m = c.size();
    for (std::size_t j = 0; j < m; ++j) {
        if (j == m / 2) continue;
        c[j] *= std::polar(1.0, -two_pi * wavenumber(j, m) * alpha);
    }
    c[m / 2] *= std::cos(std::numbers::pi * static_cast<double>(m) * alpha);
    return PeriodicFunction(backward(std::move(c)));
}

cplx mean(const PeriodicFunction& f)
{
    cplx s = 0.0;
    for (const auto& v : f.samples()) s += v;
    return s / static_cast<double>(f.size());
}

PeriodicFunction multiply(const PeriodicFunction& f, const PeriodicFunction& g)
{
    require_same_size(f, g);
    std::vector<cplx> s(f.size());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = f[j] * g[j];
    return PeriodicFunction(std::move(s));
}

PeriodicFunction conj(const PeriodicFunction& f)
{
    std::vector<cplx> s(f.samples().begin(), f.samples().end());
    for (auto& v : s) v = std::conj(v);
    return PeriodicFunction(std::move(s));
}

PeriodicFunction sqrt_nonneg(const PeriodicFunction& f)
{
    constexpr double floor_tol = 1e-10;
    std::vector<cplx> s(f.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        const cplx v = f[j];
        if (std::abs(v.imag()) > floor_tol)
            throw std::domain_error("sqrt_nonneg: sample " + std::to_string(j) + " is not real");
        if (v.real() < -floor_tol)
            throw std::domain_error("sqrt_nonneg: negative sample " + std::to_string(v.real()) +
                                    " at index " + std::to_string(j));
        s[j] = std::sqrt(std::max(v.real(), 0.0));
    }
    return PeriodicFunction(std::move(s));
}

double sup_norm(const PeriodicFunction& f)
{
    double m = 0.0;
    for (const auto& v : f.samples()) m = std::max(m, std::abs(v));
    return m;
}

double sup_distance(const PeriodicFunction& f, const PeriodicFunction& g)
{
    require_same_size(f, g);
    double m = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) m = std::max(m, std::abs(f[j] - g[j]));
    return m;
}

}  // namespace hcycle
