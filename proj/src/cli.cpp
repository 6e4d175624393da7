#include "mogap/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <string>

#include "mogap/config.hpp"
#include "mogap/errors.hpp"
#include "mogap/hfunc.hpp"
#include "mogap/optimizer.hpp"
#include "mogap/quadcheck.hpp"
#include "mogap/sieve.hpp"

namespace mogap::cli {

namespace {

RunConfig resolve(const std::string& config_path, const std::string& preset_name) {
    if (!config_path.empty() && !preset_name.empty()) throw ValidationError("give either --config or --preset");
    if (!preset_name.empty()) return preset_config(preset_name);
    if (config_path.empty()) throw ValidationError("a --config file or --preset is required");
    return load_config(config_path);
}

const CoeffScheme& require_scheme(const RunConfig& cfg) {
    if (!cfg.has_scheme) throw ValidationError("config defines no scheme (r, f1, ...)");
    return cfg.scheme;
}

double require_c(const RunConfig& cfg, double flag) {
    if (!std::isnan(flag)) return flag;
    if (!cfg.c) throw ValidationError("no c given (config key c or --c)");
    return *cfg.c;
}

void print_breakdown(std::ostream& out, const HBreakdown& b, double r) {
    const auto comps = b.components();
    out << "c=" << format_number(b.c) << "\n";
    out << "r=" << format_number(r) << "\n";
    for (std::size_t i = 0; i < comps.size(); ++i) out << HBreakdown::kNames[i] << "=" << format_number(comps[i]) << "\n";
    out << "h=" << format_number(b.h) << "\n";
    out << "margin=" << format_number(b.h - 1.0) << "\n";
    out << "{\"c\":" << format_number(b.c) << ",\"r\":" << format_number(r);
    for (std::size_t i = 0; i < comps.size(); ++i) out << ",\"" << HBreakdown::kNames[i] << "\":" << format_number(comps[i]);
    out << ",\"h\":" << format_number(b.h) << ",\"margin\":" << format_number(b.h - 1.0) << "}\n";
}

struct CheckLine {
    std::ostream& out;
    bool all = true;
    void operator()(const std::string& name, bool ok, const std::string& detail) {
        all = all && ok;
        out << (ok ? "PASS " : "FAIL ") << name << "  " << detail << "\n";
    }
};

}  // namespace

bool run_checks(std::ostream& out) {
    CheckLine line{out};
    std::mt19937_64 rng(20240101);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    // Beta convolution vs quadrature
    {
        const quad::Integrator I(64, 6);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const double a = 0.5 + 2.5 * (0.5 * (unit(rng) + 1.0));
            std::vector<double> coefs(7);
            for (double& x : coefs) x = unit(rng);
            const FracPoly p = FracPoly::from_coefficients(coefs);
            const FracPoly conv = beta_convolve(a, p);
            for (double u : {0.1, 0.5, 1.0}) {
                const double q = I(0.0, u, [&](double v) { return std::pow(u - v, a - 1.0) * p(v); });
                const double e = conv(u);
                worst = std::max(worst, std::abs(e - q) / std::max(std::abs(q), 1e-300));
            }
        }
        line("beta_convolve_vs_quadrature", worst < 1e-10, "max rel err " + format_number(worst));
    }

    // Nested-logarithm dimension reduction
    {
        double worst = 0.0;
        std::uniform_int_distribution<int> mdist(1, 3), adist(1, 3), ddist(0, 4);
        std::uniform_real_distribution<double> Ldist(0.5, 4.0);
        for (int trial = 0; trial < 5; ++trial) {
            const int m = mdist(rng);
            std::vector<int> a(static_cast<std::size_t>(m));
            for (int& x : a) x = adist(rng);
            std::vector<double> coefs(static_cast<std::size_t>(ddist(rng)) + 1);
            for (double& x : coefs) x = unit(rng);
            coefs[0] += 2.0;
            const auto res = quad::dimreduct_check(m, a, FracPoly::from_coefficients(coefs), std::exp(Ldist(rng)));
            worst = std::max(worst, std::abs(res.lhs - res.rhs) / std::abs(res.rhs));
        }
        line("dimreduct_identity", worst < 1e-9, "max rel err " + format_number(worst));
    }

    // Mertens
    {
        const double d4 = sieve::mertens_deficit(10'000);
        const double d6 = sieve::mertens_deficit(1'000'000);
        line("mertens_deficit", d4 > -3 && d4 < 0 && d6 > -3 && d6 < 0 && std::abs(d6 - d4) < 0.5,
             "deficit(1e4)=" + format_number(d4) + " deficit(1e6)=" + format_number(d6));
    }

    // Closed form vs quadrature on the first published row
    {
        const TableRow& row = table1_rows().front();
        const HBreakdown exact = h_value(row.scheme, row.c);
        const HBreakdown numeric = quad::h_value_numeric(row.scheme, row.c, 48);
        double worst = 0.0;
        const auto e = exact.components();
        const auto q = numeric.components();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0.0) worst = std::max(worst, std::abs(e[i] - q[i]) / std::abs(e[i]));
        }
        line("exact_vs_quadrature_row1", worst < 1e-7, "max rel err " + format_number(worst));
    }
    return line.all;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Montgomery-Odlyzko h(c) evaluation and optimization for small gaps between zeta zeros"};
    app.require_subcommand(1);

    std::string config_path, preset_name;
    double c_flag = std::nan("");

    auto* eval = app.add_subcommand("eval", "Print the h(c) breakdown for a scheme");
    eval->add_option("--config", config_path, "config file");
    eval->add_option("--preset", preset_name, "built-in scheme (table1-row1..3)");
    eval->add_option("--c", c_flag, "evaluation point, overrides config");

    bool json = false;
    auto* verify = app.add_subcommand("verify-table", "Regression check of the published polynomials");
    verify->add_flag("--json", json, "emit JSON");

    std::string trace_path = "optimize_trace.csv";
    std::string out_path;
    auto* optimize = app.add_subcommand("optimize", "Search scheme parameters to lower the threshold c*");
    optimize->add_option("--config", config_path, "config file");
    optimize->add_option("--preset", preset_name, "built-in start scheme");
    optimize->add_option("--trace", trace_path, "trace CSV path (iteration,objective)");
    optimize->add_option("--out", out_path, "write the best scheme as a config file");

    double T_flag = std::nan("");
    auto* oracle = app.add_subcommand("oracle", "Compare the finite arithmetic sum with the limit h");
    oracle->add_option("--config", config_path, "config file");
    oracle->add_option("--preset", preset_name, "built-in scheme");
    oracle->add_option("--c", c_flag, "evaluation point, overrides config");
    oracle->add_option("--T", T_flag, "height T (K = T/(log T)^2)");

    auto* check = app.add_subcommand("check", "Run the property checks");

    double clo = 0.50, chi = 0.53, step = 0.005;
    auto* scan = app.add_subcommand("scan", "CSV of (c, h(c)) over a grid");
    scan->add_option("--config", config_path, "config file");
    scan->add_option("--preset", preset_name, "built-in scheme");
    scan->add_option("--clo", clo, "grid start")->required();
    scan->add_option("--chi", chi, "grid end")->required();
    scan->add_option("--step", step, "grid step")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*eval) {
            const RunConfig cfg = resolve(config_path, preset_name);
            const CoeffScheme& scheme = require_scheme(cfg);
            print_breakdown(out, h_value(scheme, require_c(cfg, c_flag)), scheme.r);
            return 0;
        }
        if (*verify) {
            const auto rows = opt::verify_table();
            bool ok = true;
            if (json) out << "[";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto& row = rows[i];
                ok = ok && row.path != "failed";
                if (json) {
                    out << (i ? "," : "") << "{\"name\":\"" << row.name << "\",\"c\":" << format_number(row.c)
                        << ",\"r\":" << format_number(row.r) << ",\"h\":" << format_number(row.h_published)
                        << ",\"margin\":" << format_number(row.margin_published) << ",\"path\":\"" << row.path
                        << "\",\"h_final\":" << format_number(row.h_final)
                        << ",\"margin_final\":" << format_number(row.margin_final)
                        << ",\"seconds\":" << format_number(row.seconds) << "}";
                } else {
                    out << row.name << " c=" << format_number(row.c) << " r=" << format_number(row.r)
                        << " h=" << format_number(row.h_published) << " margin=" << format_number(row.margin_published)
                        << " path=" << row.path << " margin_final=" << format_number(row.margin_final)
                        << (row.path == "failed" ? "  FAIL" : "  PASS") << "\n";
                }
            }
            if (json) out << "]\n";
            return ok ? 0 : 1;
        }
        if (*optimize) {
            const RunConfig cfg = resolve(config_path, preset_name);
            const CoeffScheme& start = require_scheme(cfg);
            opt::OptimizeConfig oc = cfg.optimize;
            if (!cfg.has_degrees) oc.degrees = opt::degrees_of(start);
            const auto t0 = std::chrono::steady_clock::now();
            const opt::OptimizeReport rep = opt::optimize_scheme(oc, start);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

            out << "c_star=" << format_number(rep.c_star) << "\n";
            out << "margin=" << format_number(rep.margin) << "\n";
            out << "iterations=" << (rep.trace.empty() ? 0 : rep.trace.back().iteration) << "\n";
            out << "seconds=" << format_number(secs) << "\n";
            out << "# best scheme\n";
            write_config(out, rep.best_scheme, rep.c_star);

            std::ofstream trace(trace_path);
            if (!trace) throw ValidationError("cannot write trace '" + trace_path + "'");
            trace << "iteration,objective\n";
            for (const auto& t : rep.trace) trace << t.iteration << "," << format_number(t.objective) << "\n";
            if (!out_path.empty()) {
                std::ofstream best(out_path);
                if (!best) throw ValidationError("cannot write '" + out_path + "'");
                write_config(best, rep.best_scheme, rep.c_star);
            }
            return 0;
        }
        if (*oracle) {
            const RunConfig cfg = resolve(config_path, preset_name);
            const CoeffScheme& scheme = require_scheme(cfg);
            const double c = require_c(cfg, c_flag);
            const double T = std::isnan(T_flag) ? cfg.T.value_or(std::nan("")) : T_flag;
            if (std::isnan(T)) throw ValidationError("no T given (config key T or --T)");
            const sieve::FiniteH fin = sieve::finite_h(scheme, c, T);
            const double h_limit = h_value(scheme, c).h;
            out << "T=" << format_number(T) << "\n";
            out << "K=" << fin.K << "\n";
            out << "h_finite=" << format_number(fin.h) << "\n";
            out << "h_limit=" << format_number(h_limit) << "\n";
            out << "num=" << format_number(fin.num) << "\n";
            out << "den=" << format_number(fin.den) << "\n";
            out << "prime_power_share=" << format_number(std::abs(fin.num_prime_powers) / std::abs(fin.num)) << "\n";
            out << "relative_deviation=" << format_number(std::abs(fin.h - h_limit) / std::abs(h_limit - c)) << "\n";
            return 0;
        }
        if (*check) {
            return run_checks(out) ? 0 : 1;
        }
        if (*scan) {
            const RunConfig cfg = resolve(config_path, preset_name);
            const CoeffScheme& scheme = require_scheme(cfg);
            if (!(step > 0.0) || !(clo <= chi)) throw ValidationError("scan: need step > 0 and clo <= chi");
            const auto n = static_cast<long>(std::ceil((chi - clo) / step - 1e-9));
            out << "c,h\n";
            for (long i = 0; i <= n; ++i) {
                const double c = std::min(clo + static_cast<double>(i) * step, chi);
                out << format_number(c) << "," << format_number(h_value(scheme, c).h) << "\n";
            }
            return 0;
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DegenerateSchemeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace mogap::cli
