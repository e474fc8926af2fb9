#pragma once

#include "hcycle/algebra.hpp"
#include "hcycle/heatzeta.hpp"
#include "hcycle/index.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hcycle {

/// {hbar, entries: [{n, samples_re[], samples_im[]}]}
nlohmann::json to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PairingReport& r);
nlohmann::json to_json(const ZetaEvaluation& z);
nlohmann::json to_json(const MeanResult& m);

/// Fixed-width numeric formatting with 15 significant digits.
std::string format_number(double v);

/// Rectangular table that renders as CSV (header row first) or as a JSON
/// array of objects.
class Table {
public:
    explicit Table(std::vector<std::string> columns);

    void add_row(std::vector<double> values);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }

    std::string to_csv() const;
    nlohmann::json to_json() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

Table pairing_table(const std::vector<PairingReport>& reports);

}  // namespace hcycle
