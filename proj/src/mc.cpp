#include "fracwhittle/mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "fracwhittle/elw.hpp"
#include "fracwhittle/parallel.hpp"
#include "fracwhittle/prob.hpp"
#include "fracwhittle/simulate.hpp"

namespace fracwhittle {

namespace {

double run_one(EstimatorKind kind, std::span<const double> x, const EstimatorConfig& cfg) {
    switch (kind) {
        case EstimatorKind::Elw: return elw_estimate(x, cfg).d_hat;
        case EstimatorKind::Lw: return lw_estimate(x, cfg).d_hat;
        case EstimatorKind::TaperHc:
            return tapered_estimate(x, cfg, TaperKind::HurvichChen).d_hat;
        case EstimatorKind::TaperVelasco:
            return tapered_estimate(x, cfg, TaperKind::VelascoBartlett).d_hat;
    }
    throw InvalidParameter("run_mc: unknown estimator kind");
}

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string to_string(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::Elw: return "elw";
        case EstimatorKind::Lw: return "lw";
        case EstimatorKind::TaperHc: return "hc";
        case EstimatorKind::TaperVelasco: return "velasco";
    }
    return "elw";
}

EstimatorKind estimator_from_string(const std::string& name) {
    if (name == "elw") return EstimatorKind::Elw;
    if (name == "lw") return EstimatorKind::Lw;
    if (name == "hc") return EstimatorKind::TaperHc;
    if (name == "velasco") return EstimatorKind::TaperVelasco;
    throw InvalidParameter("unknown estimator '" + name + "' (expected elw|lw|hc|velasco)");
}

McReport run_mc(const McConfig& cfg) {
    if (cfg.reps < 1) throw InvalidParameter("run_mc: reps must be >= 1");
    if (cfg.d_values.empty()) throw InvalidParameter("run_mc: d_values must be nonempty");
    if (cfg.estimators.empty()) throw InvalidParameter("run_mc: estimators must be nonempty");
    EstimatorConfig ecfg = cfg.est;
    ecfg.m = cfg.m;
    ecfg.validate(cfg.n);
    for (double d : cfg.d_values)
        if (!(d >= ecfg.delta1 && d <= ecfg.delta2))
            throw InvalidParameter("run_mc: every d value must lie within the optimization bounds");

    const std::size_t nd = cfg.d_values.size();
    const std::size_t ne = cfg.estimators.size();
    const std::size_t reps = static_cast<std::size_t>(cfg.reps);
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> samples(ne * nd * reps, kNaN);

    parallel_for(reps, cfg.workers, [&](std::size_t r) {
        for (std::size_t di = 0; di < nd; ++di) {
            SimSpec spec{cfg.n, cfg.d_values[di], cfg.seed, cfg.innovation_filter};
            const TimeSeries x = gen_fractional(spec, r);
            for (std::size_t ei = 0; ei < ne; ++ei) {
                try {
                    samples[(ei * nd + di) * reps + r] =
                        run_one(cfg.estimators[ei], x.values, ecfg);
                } catch (const EstimationError&) {
                    // recorded as a failure slot; excluded from the moments
                }
            }
        }
    });

    McReport report;
    report.n = cfg.n;
    report.m = ecfg.bandwidth_for(cfg.n);
    report.reps = cfg.reps;
    report.seed = cfg.seed;
    for (std::size_t ei = 0; ei < ne; ++ei) {
        for (std::size_t di = 0; di < nd; ++di) {
            McCell cell;
            cell.estimator = cfg.estimators[ei];
            cell.d = cfg.d_values[di];
            std::vector<double> ok;
            ok.reserve(reps);
            for (std::size_t r = 0; r < reps; ++r) {
                const double v = samples[(ei * nd + di) * reps + r];
                if (std::isfinite(v)) ok.push_back(v);
            }
            cell.failures = static_cast<int>(reps - ok.size());
            if (cell.failures * 100 > cfg.reps)
                throw HarnessError("run_mc: more than 1% of replications failed for estimator " +
                                   to_string(cell.estimator) + " at d = " + format17(cell.d));
            const double count = static_cast<double>(ok.size());
            double mean = 0.0;
            for (double v : ok) mean += v;
            mean /= count;
            double ss = 0.0, mse = 0.0;
            for (double v : ok) {
                ss += (v - mean) * (v - mean);
                mse += (v - cell.d) * (v - cell.d);
            }
            cell.bias = mean - cell.d;
            cell.sd = ok.size() > 1 ? std::sqrt(ss / (count - 1.0)) : 0.0;
            cell.mse = mse / count;
            if (cfg.densities) {
                const double h = silverman_bandwidth(ok);
                const auto [lo_it, hi_it] = std::minmax_element(ok.begin(), ok.end());
                const double lo = *lo_it - 3.0 * h;
                const double hi = *hi_it + 3.0 * h;
                const int pts = std::max(2, cfg.density_points);
                cell.density_x.resize(pts);
                for (int i = 0; i < pts; ++i)
                    cell.density_x[i] = lo + (hi - lo) * static_cast<double>(i) /
                                                 static_cast<double>(pts - 1);
                cell.density_y = kde(ok, h, cell.density_x);
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

std::vector<double> kde(std::span<const double> samples, double bandwidth,
                        std::span<const double> grid) {
    if (samples.size() < 2) throw InvalidParameter("kde: need at least 2 samples");
    if (!(bandwidth > 0.0) || !std::isfinite(bandwidth))
        throw InvalidParameter("kde: bandwidth must be positive");
    const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
    if (*lo == *hi)
        throw DegenerateInput("kde: zero-variance samples (density is a single spike)");

    std::vector<double> out(grid.size(), 0.0);
    const double inv = 1.0 / (static_cast<double>(samples.size()) * bandwidth);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double acc = 0.0;
        for (double s : samples) acc += normal_pdf((grid[g] - s) / bandwidth);
        out[g] = acc * inv;
    }
    return out;
}

double silverman_bandwidth(std::span<const double> samples) {
    if (samples.size() < 2)
        throw InvalidParameter("silverman_bandwidth: need at least 2 samples");
    const double count = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= count;
    double ss = 0.0;
    for (double v : samples) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (count - 1.0));
    return 1.06 * sd * std::pow(count, -0.2);
}

void write_table_csv(const McReport& report, std::ostream& os) {
    os << "estimator,d,bias,sd,mse,failures\n";
    for (const auto& cell : report.cells)
        os << to_string(cell.estimator) << ',' << format17(cell.d) << ','
           << format17(cell.bias) << ',' << format17(cell.sd) << ','
           << format17(cell.mse) << ',' << cell.failures << '\n';
}

void write_density_csv(const McReport& report, std::ostream& os) {
    os << "estimator,d,x,density\n";
    for (const auto& cell : report.cells)
        for (std::size_t i = 0; i < cell.density_x.size(); ++i)
            os << to_string(cell.estimator) << ',' << format17(cell.d) << ','
               << format17(cell.density_x[i]) << ',' << format17(cell.density_y[i]) << '\n';
}

nlohmann::json report_json(const McReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["reps"] = report.reps;
    j["seed"] = report.seed;
    j["cells"] = nlohmann::json::array();
    for (const auto& cell : report.cells) {
        nlohmann::json c;
        c["estimator"] = to_string(cell.estimator);
        c["d"] = cell.d;
        c["bias"] = cell.bias;
        c["sd"] = cell.sd;
        c["mse"] = cell.mse;
        c["failures"] = cell.failures;
        if (!cell.density_x.empty()) {
            c["density"] = {{"x", cell.density_x}, {"y", cell.density_y}};
        }
        j["cells"].push_back(std::move(c));
    }
    return j;
}

} // namespace fracwhittle
