#include "hcycle/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hcycle {

nlohmann::json to_json(const AlgebraElement& a)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [n, f] : a.coeffs()) {
        std::vector<double> re, im;
        re.reserve(f.size());
        im.reserve(f.size());
        for (const auto& v : f.samples()) {
            re.push_back(v.real());
            im.push_back(v.imag());
        }
        entries.push_back({{"n", n}, {"samples_re", re}, {"samples_im", im}});
    }
    return {{"hbar", a.hbar()}, {"entries", entries}};
}

AlgebraElement algebra_from_json(const nlohmann::json& j)
{
    const double hbar = j.at("hbar").get<double>();
    AlgebraElement::Coeffs coeffs;
    for (const auto& e : j.at("entries")) {
        const auto re = e.at("samples_re").get<std::vector<double>>();
        const auto im = e.at("samples_im").get<std::vector<double>>();
        if (re.size() != im.size()) throw std::invalid_argument("samples_re and samples_im differ in length");
        std::vector<cplx> s(re.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = {re[k], im[k]};
        const int n = e.at("n").get<int>();
        if (!coeffs.emplace(n, PeriodicFunction(std::move(s))).second)
            throw std::invalid_argument("degree " + std::to_string(n) + " appears twice");
    }
    if (coeffs.empty()) return AlgebraElement(hbar);
    return AlgebraElement(hbar, std::move(coeffs));
}

nlohmann::json to_json(const PairingReport& r)
{
    return {{"hbar", r.hbar},
            {"closed_form", r.closed_form},
            {"local_formula", r.local_formula},
            {"fedosov", r.fedosov},
            {"integer", r.rounded_integer},
            {"residuals", {r.residuals[0], r.residuals[1], r.residuals[2]}},
            {"N", r.modes},
            {"dilation", r.dilation}};
}

nlohmann::json to_json(const ZetaEvaluation& z)
{
    nlohmann::json j = {{"s_re", z.s.real()},
                        {"s_im", z.s.imag()},
                        {"value_re", z.value.real()},
                        {"value_im", z.value.imag()},
                        {"error_estimate", z.error_estimate},
                        {"method", to_string(z.method)}};
    if (z.residue_at_1) {
        j["residue_re"] = z.residue_at_1->real();
        j["residue_im"] = z.residue_at_1->imag();
    }
    return j;
}

nlohmann::json to_json(const MeanResult& m)
{
    return {{"mu_plus_re", m.mu_plus.real()}, {"mu_plus_im", m.mu_plus.imag()},
            {"mu_minus_re", m.mu_minus.real()}, {"mu_minus_im", m.mu_minus.imag()},
            {"mu_re", m.mu.real()}, {"mu_im", m.mu.imag()},
            {"error_estimate", m.error_estimate}};
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);  // folds -0 into 0
    return buf;
}

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<double> values)
{
    if (values.size() != columns_.size())
        throw std::invalid_argument("row has " + std::to_string(values.size()) + " values for " +
                                    std::to_string(columns_.size()) + " columns");
    rows_.push_back(std::move(values));
}

std::string Table::to_csv() const
{
    std::ostringstream out;
    for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "," : "") << columns_[c];
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
        out << '\n';
    }
    return out.str();
}

nlohmann::json Table::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = row[c];
        arr.push_back(std::move(obj));
    }
    return arr;
}

Table pairing_table(const std::vector<PairingReport>& reports)
{
    Table t({"hbar", "closed_form", "local_formula", "fedosov", "integer"});
    for (const auto& r : reports)
        t.add_row({r.hbar, r.closed_form, r.local_formula, r.fedosov, static_cast<double>(r.rounded_integer)});
    return t;
}

}  // namespace hcycle
