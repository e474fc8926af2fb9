#include "config.hpp"

#include "hcycle/algebra.hpp"
#include "hcycle/functions.hpp"
#include "hcycle/heatzeta.hpp"
#include "hcycle/index.hpp"
#include "hcycle/ktheory.hpp"
#include "hcycle/oscillator.hpp"
#include "hcycle/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace hcycle;
using hcycle::cli::OutputFormat;
using hcycle::cli::RunConfig;

void emit(const RunConfig& config, const std::string& csv, const nlohmann::json& json)
{
    const std::string text = config.format == OutputFormat::csv ? csv : json.dump(2) + "\n";
    if (config.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.output);
    if (!out) throw std::runtime_error("cannot open " + config.output + " for writing");
    out << text;
}

void emit(const RunConfig& config, const Table& table)
{
    emit(config, table.to_csv(), table.to_json());
}

struct FunctionChoice {
    std::string name = "one";
    std::string coeffs;
    double hbar = 0.3;

    RealLineFunction make() const
    {
        FunctionParams params;
        params.hbar = hbar;
        if (!coeffs.empty()) params.fourier = parse_fourier_terms(coeffs);
        return make_function(name, params);
    }
};

void add_function_options(CLI::App& sub, FunctionChoice& choice)
{
    sub.add_option("--f", choice.name, "Function: one, cos, sin, one-plus-cos, riesz-ramp, arctan, custom-fourier")
        ->capture_default_str();
    sub.add_option("--coeffs", choice.coeffs, "custom-fourier terms as k:re[:im],...");
    sub.add_option("--ramp-hbar", choice.hbar, "hbar used to build riesz-ramp")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Heisenberg spectral cycles over the rotation algebra"};
    app.require_subcommand(1);
    RunConfig config;
    cli::add_run_options(app, config);

    std::function<void()> action;

    auto* heat = app.add_subcommand("heat-kernel", "Mehler kernel diagonal and eigen-sum deviation");
    double heat_t = 0.5, heat_range = 4.0;
    std::size_t heat_samples = 41;
    heat->add_option("--t", heat_t, "Time t > 0")->capture_default_str();
    heat->add_option("--range", heat_range, "Half-width of the x grid")->capture_default_str();
    heat->add_option("--samples", heat_samples, "Grid points")->check(CLI::Range(2, 100000))->capture_default_str();
    heat->callback([&] {
        action = [&] {
            Table t({"x", "kernel", "eigensum", "deviation"});
            for (std::size_t j = 0; j < heat_samples; ++j) {
                const double x = -heat_range + 2.0 * heat_range * static_cast<double>(j) /
                                                   static_cast<double>(heat_samples - 1);
                const double k = mehler_kernel(heat_t, x, x);
                const double e = mehler_eigensum(heat_t, x, x);
                t.add_row({x, k, e, std::abs(k - e)});
            }
            emit(config, t);
        };
    });

    auto* zeta = app.add_subcommand("zeta", "Tr(f T_alpha H^{-s}) for each s");
    FunctionChoice zeta_f;
    double zeta_alpha = 0.0;
    std::vector<double> zeta_s{2.0};
    std::size_t zeta_terms = 2000;
    std::string zeta_method = "eigen-sum";
    add_function_options(*zeta, zeta_f);
    zeta->add_option("--alpha", zeta_alpha, "Translation length")->capture_default_str();
    zeta->add_option("--s-list", zeta_s, "Values of s")->delimiter(',')->capture_default_str();
    zeta->add_option("--terms", zeta_terms, "Diagonal elements before the tail")->capture_default_str();
    zeta->add_option("--method", zeta_method, "eigen-sum or heat-mellin")
        ->check(CLI::IsMember({"eigen-sum", "heat-mellin"}))
        ->capture_default_str();
    zeta->callback([&] {
        action = [&] {
            const auto f = zeta_f.make();
            ZetaOptions opts;
            opts.modes = zeta_terms;
            opts.method = zeta_method == "heat-mellin" ? ZetaMethod::heat_mellin : ZetaMethod::eigen_sum_tail;
            Table t({"s", "value_re", "value_im", "error_estimate"});
            nlohmann::json rows = nlohmann::json::array();
            for (double s : zeta_s) {
                const auto z = zeta_trace(f, zeta_alpha, s, opts);
                t.add_row({s, z.value.real(), z.value.imag(), z.error_estimate});
                rows.push_back(to_json(z));
            }
            emit(config, t.to_csv(), rows);
        };
    });

    auto* mean = app.add_subcommand("mean", "One-sided asymptotic means");
    FunctionChoice mean_f;
    double mean_xmax = 1e4;
    add_function_options(*mean, mean_f);
    mean->add_option("--xmax", mean_xmax, "Largest averaging window")->capture_default_str();
    mean->callback([&] {
        action = [&] {
            const auto m = asymptotic_mean(mean_f.make(), mean_xmax);
            Table t({"mu_plus_re", "mu_plus_im", "mu_minus_re", "mu_minus_im", "mu_re", "mu_im", "error_estimate"});
            t.add_row({m.mu_plus.real(), m.mu_plus.imag(), m.mu_minus.real(), m.mu_minus.imag(), m.mu.real(),
                       m.mu.imag(), m.error_estimate});
            emit(config, t.to_csv(), to_json(m));
        };
    });

    auto* dixmier = app.add_subcommand("dixmier", "Double-integral limit for Tr_w(f H^{-1})");
    FunctionChoice dixmier_f;
    double dixmier_alpha = 8.0;
    add_function_options(*dixmier, dixmier_f);
    dixmier->add_option("--alpha-max", dixmier_alpha, "Largest exponent")->capture_default_str();
    dixmier->callback([&] {
        action = [&] {
            const cplx v = dixmier_limit(dixmier_f.make(), dixmier_alpha);
            Table t({"value_re", "value_im"});
            t.add_row({v.real(), v.imag()});
            emit(config, t);
        };
    });

    auto* rieffel = app.add_subcommand("rieffel", "Projection diagnostics");
    rieffel->add_option("--hbar", config.hbar, "Rotation parameter")->capture_default_str();
    rieffel->callback([&] {
        action = [&] {
            const auto p = rieffel_projection(config.hbar, config.grid);
            const cplx c1 = curvature_c1(p);
            Table t({"hbar", "defect", "trace", "c1_re", "c1_im"});
            t.add_row({config.hbar, projection_defect(p), trace(p).real(), c1.real(), c1.imag()});
            emit(config, t);
        };
    });

    auto* pair = app.add_subcommand("pair", "Index pairing by three routes");
    pair->add_option("--hbar", config.hbar, "Rotation parameter")->capture_default_str();
    pair->callback([&] {
        action = [&] {
            const HermiteBasis basis(config.modes, 0.0, config.quad_points());
            const auto r = pairing(rieffel_projection(config.hbar, config.grid), basis);
            emit(config, pairing_table({r}).to_csv(), to_json(r));
        };
    });

    auto* sweep_cmd = app.add_subcommand("sweep", "Pairing over several hbar values");
    std::vector<double> hbars{0.3, 1.3, 2.6};
    sweep_cmd->add_option("--hbars", hbars, "Comma-separated hbar values")->delimiter(',')->capture_default_str();
    sweep_cmd->callback([&] {
        action = [&] {
            const HermiteBasis basis(config.modes, 0.0, config.quad_points());
            std::vector<PairingReport> reports;
            for (double h : hbars) reports.push_back(pairing(rieffel_projection(h, config.grid), basis));
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : reports) rows.push_back(to_json(r));
            emit(config, pairing_table(reports).to_csv(), rows);
        };
    });

    auto* kt = app.add_subcommand("ktheory", "Exact K0 pairing, twist and gap label");
    long k_m = 0, k_n = 1, k_b = 0;
    kt->add_option("--m", k_m, "Multiplicity of [1]")->capture_default_str();
    kt->add_option("--n", k_n, "Multiplicity of [p]")->capture_default_str();
    kt->add_option("--hbar", config.hbar, "Rotation parameter")->capture_default_str();
    kt->add_option("--b", k_b, "Twist")->capture_default_str();
    kt->callback([&] {
        action = [&] {
            const KClass x{k_m, k_n};
            const KClass twisted = twist(x, k_b);
            const double tr = trace_value(x, config.hbar);
            const auto label = gap_label(tr, config.hbar);
            Table t({"m", "n", "b", "hbar", "trace", "pairing", "twisted_m", "twisted_n", "twisted_pairing",
                     "gap_p", "gap_q", "member"});
            t.add_row({static_cast<double>(k_m), static_cast<double>(k_n), static_cast<double>(k_b), config.hbar, tr,
                       k_pairing(x, config.hbar, k_b), static_cast<double>(twisted.m),
                       static_cast<double>(twisted.n), k_pairing(twisted, config.hbar, 0),
                       label ? static_cast<double>(label->first) : 0.0,
                       label ? static_cast<double>(label->second) : 0.0, label ? 1.0 : 0.0});
            emit(config, t);
        };
    });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
        cli::validate(config);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
