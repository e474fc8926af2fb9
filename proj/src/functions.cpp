#include "hcycle/functions.hpp"

#include "hcycle/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcycle {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double parse_double(std::string_view s, std::string_view whole)
{
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("bad number '" + std::string(s) + "' in '" + std::string(whole) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

FourierTerms parse_fourier_terms(std::string_view text)
{
    FourierTerms terms;
    if (text.empty()) throw std::invalid_argument("empty Fourier coefficient list");
    for (auto item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() < 2 || parts.size() > 3)
            throw std::invalid_argument("Fourier term '" + std::string(item) + "' is not k:re[:im]");
        const double k = parse_double(parts[0], item);
        if (k != std::floor(k)) throw std::invalid_argument("wavenumber must be an integer in '" + std::string(item) + "'");
        const double re = parse_double(parts[1], item);
        const double im = parts.size() == 3 ? parse_double(parts[2], item) : 0.0;
        terms.emplace_back(static_cast<int>(k), cplx(re, im));
    }
    return terms;
}

RealLineFunction make_function(std::string_view name, const FunctionParams& params)
{
    if (name == "one") return RealLineFunction::periodic([](double) { return cplx(1.0); });
    if (name == "cos") return RealLineFunction::periodic([](double x) { return cplx(std::cos(two_pi * x)); });
    if (name == "sin") return RealLineFunction::periodic([](double x) { return cplx(std::sin(two_pi * x)); });
    if (name == "one-plus-cos")
        return RealLineFunction::periodic([](double x) { return cplx(1.0 + std::cos(two_pi * x)); });
    if (name == "riesz-ramp") {
        const double h = params.hbar;
        const double frac = h - std::floor(h);
        if (std::min(frac, 1.0 - frac) <= 1e-3)
            throw std::domain_error("no Rieffel representative for hbar = " + std::to_string(h));
        const double eps = std::min(frac, 1.0 - frac) / 3.0;
        return RealLineFunction::periodic([h](double x) { return cplx(rieffel_profile(h, x)); })
            .with_feature_scale(eps / 2.0);
    }
    if (name == "arctan")
        return RealLineFunction::with_limits([](double x) { return cplx(std::atan(x)); },
                                             -std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    if (name == "custom-fourier") {
        if (params.fourier.empty()) throw std::invalid_argument("custom-fourier needs coefficients");
        const auto terms = params.fourier;
        return RealLineFunction::periodic([terms](double x) {
            cplx v = 0.0;
            for (const auto& [k, c] : terms) v += c * std::polar(1.0, two_pi * k * x);
            return v;
        });
    }
    throw std::invalid_argument("unknown function '" + std::string(name) + "'");
}

std::vector<std::string> function_names()
{
    return {"one", "cos", "sin", "one-plus-cos", "riesz-ramp", "arctan", "custom-fourier"};
}

}  // namespace hcycle
