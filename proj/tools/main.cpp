#include <cmath>
#include <numbers>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracwhittle/baselines.hpp"
#include "fracwhittle/elw.hpp"
#include "fracwhittle/fracfilter.hpp"
#include "fracwhittle/mc.hpp"
#include "fracwhittle/simulate.hpp"
#include "fracwhittle/spectrum.hpp"

namespace fw = fracwhittle;

namespace {

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            throw fw::InvalidParameter(std::string("could not parse ") + what + ": '" + item + "'");
        }
        if (pos != item.size() || !std::isfinite(v))
            throw fw::InvalidParameter(std::string("could not parse ") + what + ": '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw fw::InvalidParameter(std::string("empty list for ") + what);
    return out;
}

std::vector<double> read_series(const std::string& path, const std::string& format,
                                const std::string& column) {
    std::ifstream in(path);
    if (!in) throw fw::InvalidInput("cannot open input file: " + path);
    std::vector<double> values;

    auto parse_value = [&](const std::string& tok) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw fw::InvalidInput("non-numeric value in " + path + ": '" + tok + "'");
        }
        if (pos != tok.size() || !std::isfinite(v))
            throw fw::InvalidInput("non-finite or malformed value in " + path + ": '" + tok + "'");
        return v;
    };

    std::string line;
    if (format == "plain") {
        while (std::getline(in, line)) {
            // trim whitespace-only lines
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            const auto last = line.find_last_not_of(" \t\r");
            values.push_back(parse_value(line.substr(first, last - first + 1)));
        }
    } else if (format == "csv") {
        if (!std::getline(in, line)) throw fw::InvalidInput("empty CSV file: " + path);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> header;
        std::stringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
        std::size_t col = 0;
        if (!column.empty()) {
            const auto it = std::find(header.begin(), header.end(), column);
            if (it == header.end())
                throw fw::InvalidInput("column '" + column + "' not found in " + path);
            col = static_cast<std::size_t>(it - header.begin());
        }
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            std::stringstream ls(line);
            std::vector<std::string> row;
            while (std::getline(ls, cell, ',')) row.push_back(cell);
            if (col >= row.size())
                throw fw::InvalidInput("short row in " + path + ": '" + line + "'");
            values.push_back(parse_value(row[col]));
        }
    } else {
        throw fw::InvalidParameter("unknown format '" + format + "' (expected plain|csv)");
    }
    if (values.size() < 2)
        throw fw::InvalidInput("series must contain at least 2 observations: " + path);
    return values;
}

int default_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("FRACWHITTLE_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;   // parallel_for resolves 0 to hardware concurrency
}

int cmd_estimate(const std::string& input, const std::string& format, const std::string& column,
                 const std::string& estimator, int m, const std::string& bounds,
                 const std::string& mean, double ci_level, bool json_out) {
    const auto x = read_series(input, format, column);

    fw::EstimatorConfig cfg;
    cfg.m = m;
    cfg.mean_mode = fw::mean_mode_from_string(mean);
    cfg.ci_level = ci_level;
    const auto b = parse_double_list(bounds, "--bounds");
    if (b.size() != 2) throw fw::InvalidParameter("--bounds expects LO,HI");
    cfg.delta1 = b[0];
    cfg.delta2 = b[1];

    fw::EstimateResult res;
    if (estimator == "elw") res = fw::elw_estimate(x, cfg);
    else if (estimator == "lw") res = fw::lw_estimate(x, cfg);
    else if (estimator == "hc") res = fw::tapered_estimate(x, cfg, fw::TaperKind::HurvichChen);
    else if (estimator == "velasco")
        res = fw::tapered_estimate(x, cfg, fw::TaperKind::VelascoBartlett);
    else throw fw::InvalidParameter("unknown estimator '" + estimator +
                                    "' (expected elw|lw|hc|velasco)");

    for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';

    const int used_m = cfg.bandwidth_for(x.size());
    if (json_out) {
        nlohmann::json j;
        j["estimator"] = estimator;
        j["n"] = x.size();
        j["m"] = used_m;
        j["d_hat"] = res.d_hat;
        j["g_hat"] = res.g_hat;
        j["se"] = res.se;
        j["ci_level"] = ci_level;
        j["ci_low"] = res.ci_low;
        j["ci_high"] = res.ci_high;
        j["objective_at_min"] = res.objective_at_min;
        j["n_evals"] = res.n_evals;
        j["boundary_hit"] = res.boundary_hit;
        j["warnings"] = res.warnings;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "estimator,n,m,d_hat,g_hat,se,ci_low,ci_high,objective_at_min,n_evals,"
                     "boundary_hit\n";
        std::cout << estimator << ',' << x.size() << ',' << used_m << ','
                  << format17(res.d_hat) << ',' << format17(res.g_hat) << ','
                  << format17(res.se) << ',' << format17(res.ci_low) << ','
                  << format17(res.ci_high) << ',' << format17(res.objective_at_min) << ','
                  << res.n_evals << ',' << (res.boundary_hit ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_simulate(std::size_t n, double d, std::uint64_t seed, const std::string& output) {
    fw::SimSpec spec{n, d, seed, {}};
    const auto series = fw::gen_fractional(spec);
    std::ofstream out(output);
    if (!out) throw fw::InvalidInput("cannot open output file: " + output);
    for (double v : series.values) out << format17(v) << '\n';
    if (!out) throw fw::InvalidInput("write failed: " + output);
    return 0;
}

int cmd_bench(int reps, std::size_t n, int m, const std::string& d_list,
              const std::string& estimators, std::uint64_t seed, const std::string& out_dir,
              bool density, int workers) {
    fw::McConfig cfg;
    cfg.n = n;
    cfg.m = m;
    cfg.reps = reps;
    cfg.seed = seed;
    cfg.workers = default_workers(workers);
    cfg.densities = density;
    cfg.d_values = parse_double_list(d_list, "--d-list");
    std::stringstream ss(estimators);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) cfg.estimators.push_back(fw::estimator_from_string(item));
    if (cfg.estimators.empty()) throw fw::InvalidParameter("--estimators: empty list");

    const auto report = fw::run_mc(cfg);

    std::filesystem::create_directories(out_dir);
    const auto table_path = std::filesystem::path(out_dir) / "mc_table.csv";
    {
        std::ofstream f(table_path);
        if (!f) throw fw::InvalidInput("cannot write " + table_path.string());
        fw::write_table_csv(report, f);
    }
    if (density) {
        const auto density_path = std::filesystem::path(out_dir) / "mc_density.csv";
        std::ofstream f(density_path);
        if (!f) throw fw::InvalidInput("cannot write " + density_path.string());
        fw::write_density_csv(report, f);
    }
    {
        const auto json_path = std::filesystem::path(out_dir) / "mc_report.json";
        std::ofstream f(json_path);
        if (!f) throw fw::InvalidInput("cannot write " + json_path.string());
        f << fw::report_json(report).dump(2) << '\n';
    }

    std::cout << "n=" << report.n << " m=" << report.m << " reps=" << report.reps
              << " seed=" << report.seed << '\n';
    std::printf("%-10s %8s %12s %12s %12s %9s\n", "estimator", "d", "bias", "sd", "mse",
                "failures");
    for (const auto& cell : report.cells)
        std::printf("%-10s %8.4g %12.5g %12.5g %12.5g %9d\n",
                    fw::to_string(cell.estimator).c_str(), cell.d, cell.bias, cell.sd, cell.mse,
                    cell.failures);
    return 0;
}

int cmd_verify(const std::string& n_list, const std::string& d_list, double tol,
               std::uint64_t seed) {
    const auto d_values = parse_double_list(d_list, "--d-list");
    std::vector<std::size_t> n_values;
    for (double v : parse_double_list(n_list, "--n-list")) {
        if (v < 2.0 || v != std::floor(v))
            throw fw::InvalidParameter("--n-list entries must be integers >= 2");
        n_values.push_back(static_cast<std::size_t>(v));
    }

    double worst_lemma = 0.0, worst_round = 0.0, worst_parseval = 0.0;
    std::string worst_case;
    int round_skipped = 0;
    std::uint64_t stream = 0;
    for (std::size_t n : n_values) {
        for (double d : d_values) {
            const fw::SimSpec spec{n, 0.0, seed, {}};
            const auto x = fw::gen_fractional(spec, stream++).values;

            const std::size_t jmax = std::min<std::size_t>(32, n - 1);
            for (std::size_t j = 1; j <= jmax; ++j) {
                const double r = fw::verify_lemma51(x, d, j);
                if (r > worst_lemma) {
                    worst_lemma = r;
                    worst_case = "lemma identity at n=" + std::to_string(n) +
                                 " d=" + format17(d) + " j=" + std::to_string(j);
                }
            }

            // One leg of the roundtrip always amplifies rounding noise by the
            // l1 mass A of the integration coefficients; combinations whose
            // floor eps*A is not safely below tol cannot meet it in double
            // precision and are skipped (reported below).
            const auto pi = fw::frac_coeffs(-std::abs(d), n - 1).coeffs;
            double amp = 0.0;
            for (double c : pi) amp += std::abs(c);
            if (amp * 2.3e-16 > tol / 10.0) {
                ++round_skipped;
            } else {
                const auto z = fw::fracint(x, d);
                const auto y = fw::fracdiff(z, d);
                double maxerr = 0.0, maxx = 0.0;
                for (std::size_t t = 0; t < n; ++t) {
                    maxerr = std::max(maxerr, std::abs(y[t] - x[t]));
                    maxx = std::max(maxx, std::abs(x[t]));
                }
                const double r = maxerr / maxx;
                if (r > worst_round) {
                    worst_round = r;
                    worst_case = "roundtrip at n=" + std::to_string(n) + " d=" + format17(d);
                }
            }
        }

        // Parseval over the full grid: sum_j I(lambda_j) = (2 pi)^{-1} sum_t x_t^2
        const fw::SimSpec spec{n, 0.0, seed, {}};
        const auto x = fw::gen_fractional(spec, stream++).values;
        const auto view = fw::dft_grid(x, n - 1);
        double lhs = 0.0, rhs = 0.0, xsum = 0.0;
        for (double v : view.pgram) lhs += v;
        for (double v : x) {
            rhs += v * v;
            xsum += v;
        }
        rhs /= 2.0 * std::numbers::pi;
        lhs += xsum * xsum / (2.0 * std::numbers::pi * static_cast<double>(n));   // j = 0 ordinate
        const double r = std::abs(lhs - rhs) / rhs;
        if (r > worst_parseval) {
            worst_parseval = r;
            worst_case = "Parseval at n=" + std::to_string(n);
        }
    }

    std::cout << "max lemma-identity residual:  " << format17(worst_lemma) << '\n';
    std::cout << "max roundtrip residual:       " << format17(worst_round) << '\n';
    if (round_skipped > 0)
        std::cout << "  (" << round_skipped
                  << " roundtrip combinations past the double-precision noise floor skipped)\n";
    std::cout << "max Parseval residual:        " << format17(worst_parseval) << '\n';
    const double worst = std::max({worst_lemma, worst_round, worst_parseval});
    if (worst > tol) {
        std::cout << "FAIL: residual " << format17(worst) << " > tol " << format17(tol)
                  << " (" << worst_case << ")\n";
        return 3;
    }
    std::cout << "PASS: all residuals <= " << format17(tol) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracwhittle: local Whittle estimation of fractional integration"};
    app.require_subcommand(1);

    // estimate
    auto* est = app.add_subcommand("estimate", "estimate the memory parameter d of a series");
    std::string input, format = "plain", column, estimator = "elw", bounds = "-6,6",
                mean = "none";
    int m = 0;
    double ci_level = 0.95;
    bool json_out = false;
    est->add_option("--input", input, "series file")->required();
    est->add_option("--format", format, "plain|csv (default plain)");
    est->add_option("--column", column, "CSV column name (default: first column)");
    est->add_option("--estimator", estimator, "elw|lw|hc|velasco (default elw)");
    est->add_option("--m", m, "bandwidth (default floor(n^0.65))");
    est->add_option("--bounds", bounds, "optimization bounds LO,HI (default -6,6)");
    est->add_option("--mean", mean, "none|sample-mean|first-obs|weighted (default none)");
    est->add_option("--ci-level", ci_level, "confidence level (default 0.95)");
    est->add_flag("--json", json_out, "emit JSON instead of CSV");

    // simulate
    auto* sim = app.add_subcommand("simulate", "generate a fractional series");
    std::size_t sim_n = 0;
    double sim_d = 0.0;
    std::uint64_t sim_seed = 1;
    std::string sim_out;
    sim->add_option("--n", sim_n, "sample size")->required();
    sim->add_option("--d", sim_d, "memory parameter")->required();
    sim->add_option("--seed", sim_seed, "RNG seed (default 1)");
    sim->add_option("--output", sim_out, "output path, one value per line")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Monte Carlo bias/sd/MSE tables");
    int bench_reps = 1000, bench_m = 0, bench_workers = 0;
    std::size_t bench_n = 500;
    std::uint64_t bench_seed = 1;
    std::string bench_d = "0.0", bench_estimators = "elw,lw,hc,velasco", bench_out = ".";
    bool bench_density = false;
    bench->add_option("--reps", bench_reps, "replications (default 1000)");
    bench->add_option("--n", bench_n, "sample size (default 500)");
    bench->add_option("--m", bench_m, "bandwidth (default floor(n^0.65))");
    bench->add_option("--d-list", bench_d, "comma list of true d values (default 0.0)");
    bench->add_option("--estimators", bench_estimators,
                      "comma list of elw|lw|hc|velasco (default all)");
    bench->add_option("--seed", bench_seed, "master seed (default 1)");
    bench->add_option("--out-dir", bench_out, "output directory (default .)");
    bench->add_flag("--density", bench_density, "also write kernel density grids");
    bench->add_option("--workers", bench_workers,
                      "parallel workers (default $FRACWHITTLE_WORKERS or hardware)");

    // verify
    auto* verify = app.add_subcommand("verify", "exact-identity and filter-algebra checks");
    std::string verify_n = "16,128,512", verify_d = "-4.5,-2,-0.5,0,0.5,1,1.3,2.3,4.5";
    double verify_tol = 1e-8;
    std::uint64_t verify_seed = 1;
    verify->add_option("--n-list", verify_n, "comma list of sample sizes");
    verify->add_option("--d-list", verify_d, "comma list of d values");
    verify->add_option("--tol", verify_tol, "residual tolerance (default 1e-8)");
    verify->add_option("--seed", verify_seed, "RNG seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (est->parsed())
            return cmd_estimate(input, format, column, estimator, m, bounds, mean, ci_level,
                                json_out);
        if (sim->parsed()) return cmd_simulate(sim_n, sim_d, sim_seed, sim_out);
        if (bench->parsed())
            return cmd_bench(bench_reps, bench_n, bench_m, bench_d, bench_estimators, bench_seed,
                             bench_out, bench_density, bench_workers);
        if (verify->parsed()) return cmd_verify(verify_n, verify_d, verify_tol, verify_seed);
    } catch (const fw::EstimationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const fw::HarnessError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
