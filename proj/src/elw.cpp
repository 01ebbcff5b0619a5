#include "fracwhittle/elw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "fracwhittle/fft.hpp"
#include "fracwhittle/fracfilter.hpp"
#include "fracwhittle/optimize.hpp"
#include "fracwhittle/prob.hpp"
#include "fracwhittle/spectrum.hpp"

namespace fracwhittle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double avg_log_lambda(std::size_t n, int m) {
    double s = 0.0;
    for (int j = 1; j <= m; ++j)
        s += std::log(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
    return s / static_cast<double>(m);
}

bool all_zero(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
}

// One estimation call's evaluation engine: the series spectrum is
// transformed once, each R(d) costs one coefficient FFT, one inverse FFT
// and one grid DFT of the filtered series.
class ElwObjective {
public:
    ElwObjective(std::span<const double> x, int m, MeanMode mode)
        : n_(x.size()),
          m_(m),
          mode_(mode),
          ws_(x),
          grid_plan_(x.size()),
          y_(x.size()),
          buf_(x.size()),
          spec_(x.size()),
          avg_log_lambda_(avg_log_lambda(x.size(), m)) {
        mean_ = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n_);
        first_ = x.front();
    }

    double g(double d) {
        ws_.apply(d, offset_for(d), y_);
        for (std::size_t t = 0; t < n_; ++t) buf_[t] = y_[t];
        grid_plan_.transform(buf_, spec_, +1, scratch_);
        double s = 0.0;
        for (int j = 1; j <= m_; ++j) s += std::norm(spec_[j]);
        return s / (kTwoPi * static_cast<double>(n_) * static_cast<double>(m_));
    }

    // +inf marks a non-evaluable point for the optimizer
    double r(double d) {
        const double gv = g(d);
        if (!(gv > 0.0) || !std::isfinite(gv))
            return std::numeric_limits<double>::infinity();
        return std::log(gv) - 2.0 * d * avg_log_lambda_;
    }

private:
    double offset_for(double d) const {
        switch (mode_) {
            case MeanMode::None: return 0.0;
            case MeanMode::SampleMean: return mean_;
            case MeanMode::FirstObs: return first_;
            case MeanMode::Weighted: {
                const double w = mean_weight(d);
                return w * mean_ + (1.0 - w) * first_;
            }
        }
        return 0.0;
    }

    std::size_t n_;
    int m_;
    MeanMode mode_;
    FilterWorkspace ws_;
    fft::DftPlan grid_plan_;
    std::vector<double> y_;
    std::vector<fft::Complex> buf_;
    std::vector<fft::Complex> spec_;
    fft::DftPlan::Scratch scratch_;
    double avg_log_lambda_;
    double mean_ = 0.0;
    double first_ = 0.0;
};

} // namespace

double g_hat(std::span<const double> x, double d, int m) {
    const std::size_t n = x.size();
    if (n < 2) throw InvalidInput("g_hat: need at least 2 observations");
    if (m < 1 || static_cast<std::size_t>(m) > n - 1)
        throw InvalidParameter("g_hat: bandwidth must satisfy 1 <= m <= n-1");
    const auto y = fracdiff(x, d);
    if (all_zero(y)) return 0.0;
    const auto view = dft_grid(y, static_cast<std::size_t>(m));
    double s = 0.0;
    for (double v : view.pgram) s += v;
    return s / static_cast<double>(m);
}

double objective_r(std::span<const double> x, double d, int m) {
    const double g = g_hat(x, d, m);
    if (!(g > 0.0))
        throw DegenerateInput("objective_r: mean periodogram of the filtered series is zero");
    return std::log(g) - 2.0 * d * avg_log_lambda(x.size(), m);
}

double mean_weight(double d) {
    if (d <= 0.5) return 1.0;
    if (d >= 0.75) return 0.0;
    const double u = 4.0 * d - 2.0;                      // maps [1/2, 3/4] onto [0, 1]
    const double s = u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
    return 1.0 - s;
}

std::vector<double> apply_mean_mode(std::span<const double> x, MeanMode mode, double d) {
    if (x.empty()) throw InvalidInput("apply_mean_mode: empty series");
    std::vector<double> out(x.begin(), x.end());
    double offset = 0.0;
    switch (mode) {
        case MeanMode::None: return out;
        case MeanMode::SampleMean:
            offset = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
            break;
        case MeanMode::FirstObs:
            offset = x.front();
            break;
        case MeanMode::Weighted: {
            const double mean =
                std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
            const double w = mean_weight(d);
            offset = w * mean + (1.0 - w) * x.front();
            break;
        }
    }
    for (auto& v : out) v -= offset;
    return out;
}

EstimateResult elw_estimate(std::span<const double> x, const EstimatorConfig& cfg) {
    const std::size_t n = x.size();
    if (n < 2) throw InvalidInput("elw_estimate: need at least 2 observations");
    cfg.validate(n);
    if (all_zero(x)) throw DegenerateInput("elw_estimate: series is identically zero");

    const int m = cfg.bandwidth_for(n);
    ElwObjective obj(x, m, cfg.mean_mode);
    const auto min = minimize_grid_golden([&](double d) { return obj.r(d); },
                                          cfg.delta1, cfg.delta2, cfg.grid_step, cfg.tol);
    if (!min.evaluable)
        throw EstimationFailed("elw_estimate: objective not evaluable anywhere on the interval");

    EstimateResult res;
    res.d_hat = min.x;
    res.objective_at_min = min.fx;
    res.n_evals = min.n_evals;
    res.g_hat = obj.g(min.x);
    res.se = 0.5 / std::sqrt(static_cast<double>(m));
    const double z = ci_z_value(cfg.ci_level);
    res.ci_low = res.d_hat - z * res.se;
    res.ci_high = res.d_hat + z * res.se;
    res.boundary_hit = std::abs(res.d_hat - cfg.delta1) <= cfg.tol ||
                       std::abs(res.d_hat - cfg.delta2) <= cfg.tol;
    if (auto w = cfg.range_warning(); !w.empty()) res.warnings.push_back(std::move(w));
    if (cfg.mean_mode == MeanMode::Weighted &&
        (std::abs(res.d_hat) < 0.1 || std::abs(res.d_hat - 1.0) < 0.1))
        res.warnings.push_back(
            "weighted mean correction: confidence intervals are not established for d near 0 or 1");
    return res;
}

} // namespace fracwhittle
