#include "fracwhittle/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

#include "fracwhittle/elw.hpp"
#include "fracwhittle/fracfilter.hpp"
#include "fracwhittle/optimize.hpp"
#include "fracwhittle/prob.hpp"
#include "fracwhittle/spectrum.hpp"

namespace fracwhittle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Complex = std::complex<double>;

// Shared local-Whittle-form problem: periodogram ordinates at frequencies
// `lambda` with a linear mean-correction response, objective evaluated in
// the shifted parameter delta = d - shift.
struct LwForm {
    std::vector<double> lambda;
    std::vector<double> log_lambda;
    std::vector<Complex> base;    // spectrum of the (tapered) data
    std::vector<Complex> unit;    // spectrum response of a unit level shift
    double shift = 0.0;
    MeanMode mode = MeanMode::None;
    double mean = 0.0;
    double first = 0.0;
    double avg_log_lambda = 0.0;

    void finalize() {
        log_lambda.resize(lambda.size());
        for (std::size_t i = 0; i < lambda.size(); ++i) log_lambda[i] = std::log(lambda[i]);
        avg_log_lambda = std::accumulate(log_lambda.begin(), log_lambda.end(), 0.0) /
                         static_cast<double>(log_lambda.size());
        // fixed-offset modes fold into the cached spectrum once
        if (mode == MeanMode::SampleMean || mode == MeanMode::FirstObs) {
            const double c = (mode == MeanMode::SampleMean) ? mean : first;
            fold(c);
            mode = MeanMode::None;
        }
        if (unit.empty() || std::all_of(unit.begin(), unit.end(),
                                        [](Complex v) { return v == Complex{0.0, 0.0}; }))
            unit.clear();
    }

    void fold(double c) {
        if (unit.empty() || c == 0.0) return;
        for (std::size_t i = 0; i < base.size(); ++i) base[i] -= c * unit[i];
    }

    double offset_for(double d) const {
        if (mode != MeanMode::Weighted) return 0.0;
        const double w = mean_weight(d);
        return w * mean + (1.0 - w) * first;
    }

    double g(double d) const {
        const double delta = d - shift;
        const double c = offset_for(d);
        double s = 0.0;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            const Complex w =
                (!unit.empty() && c != 0.0) ? base[i] - c * unit[i] : base[i];
            s += std::exp(2.0 * delta * log_lambda[i]) * std::norm(w);
        }
        return s / static_cast<double>(lambda.size());
    }

    double r(double d) const {
        const double gv = g(d);
        if (!(gv > 0.0) || !std::isfinite(gv))
            return std::numeric_limits<double>::infinity();
        return std::log(gv) - 2.0 * (d - shift) * avg_log_lambda;
    }
};

void require_varying(std::span<const double> x, const char* who) {
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*lo == *hi)
        throw DegenerateInput(std::string(who) + ": constant series carries no frequency signal");
}

EstimateResult run_lw_form(const LwForm& form, const EstimatorConfig& cfg, int m,
                           double variance_factor) {
    const auto min = minimize_grid_golden([&](double d) { return form.r(d); },
                                          cfg.delta1, cfg.delta2, cfg.grid_step, cfg.tol);
    if (!min.evaluable)
        throw EstimationFailed("local Whittle objective not evaluable anywhere on the interval");

    EstimateResult res;
    res.d_hat = min.x;
    res.objective_at_min = min.fx;
    res.n_evals = min.n_evals;
    res.g_hat = form.g(min.x);
    res.se = std::sqrt(variance_factor) * 0.5 / std::sqrt(static_cast<double>(m));
    const double z = ci_z_value(cfg.ci_level);
    res.ci_low = res.d_hat - z * res.se;
    res.ci_high = res.d_hat + z * res.se;
    res.boundary_hit = std::abs(res.d_hat - cfg.delta1) <= cfg.tol ||
                       std::abs(res.d_hat - cfg.delta2) <= cfg.tol;
    if (auto w = cfg.range_warning(); !w.empty()) res.warnings.push_back(std::move(w));
    return res;
}

} // namespace

double taper_variance_factor(TaperKind kind) {
    switch (kind) {
        case TaperKind::None: return 1.0;
        case TaperKind::HurvichChen: return 1.5;
        case TaperKind::VelascoBartlett: return 2.1;
    }
    return 1.0;
}

std::string to_string(TaperKind kind) {
    switch (kind) {
        case TaperKind::None: return "none";
        case TaperKind::HurvichChen: return "hurvich-chen";
        case TaperKind::VelascoBartlett: return "velasco-bartlett";
    }
    return "none";
}

EstimateResult lw_estimate(std::span<const double> x, const EstimatorConfig& cfg) {
    const std::size_t n = x.size();
    if (n < 2) throw InvalidInput("lw_estimate: need at least 2 observations");
    cfg.validate(n);
    require_varying(x, "lw_estimate");
    const int m = cfg.bandwidth_for(n);

    LwForm form;
    form.mode = cfg.mean_mode;
    form.mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    form.first = x.front();
    const auto view = dft_grid(x, static_cast<std::size_t>(m));
    form.lambda = view.freqs;
    form.base = view.dft;
    // a constant shift has zero d.f.t. at every nonzero Fourier frequency, so
    // mean corrections cannot move the untapered objective: no unit response
    form.finalize();
    return run_lw_form(form, cfg, m, 1.0);
}

EstimateResult tapered_estimate(std::span<const double> x, const EstimatorConfig& cfg,
                                TaperKind taper) {
    const std::size_t n = x.size();
    if (n < 4) throw InvalidInput("tapered_estimate: need at least 4 observations");
    if (taper == TaperKind::None)
        throw InvalidParameter("tapered_estimate: taper must not be 'none'");
    cfg.validate(n);
    require_varying(x, "tapered_estimate");
    const int m = cfg.bandwidth_for(n);

    LwForm form;
    form.mode = cfg.mean_mode;
    form.mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    form.first = x.front();

    if (taper == TaperKind::HurvichChen) {
        // taper h_t = (1 - e^{i 2 pi t/n})/2 applied to the first difference:
        // the tapered transform is a pairwise difference of plain ordinates,
        //   w^h(lambda_j) = (w_v(lambda_j) - w_v(lambda_{j+1})) / sqrt(2),
        // since sum_t |h_t|^2 = n/2. Objective runs at the half-shifted
        // frequencies 2 pi (j + 1/2)/n in the parameter delta = d - 1.
        const auto v = fracdiff(x, 1.0);
        const auto view = dft_grid(v, static_cast<std::size_t>(m) + 1);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        form.lambda.resize(m);
        form.base.resize(m);
        form.unit.resize(m);
        const double unit_norm = 1.0 / std::sqrt(kTwoPi * 0.5 * static_cast<double>(n));
        for (int j = 1; j <= m; ++j) {
            form.lambda[j - 1] =
                kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
            form.base[j - 1] = (view.dft[j - 1] - view.dft[j]) * inv_sqrt2;
            // a level shift c moves only v_1: response is the tapered
            // transform of the first-position impulse
            const double lam_j = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
            const Complex h1 = 0.5 * (1.0 - std::polar(1.0, kTwoPi / static_cast<double>(n)));
            form.unit[j - 1] = unit_norm * h1 * std::polar(1.0, lam_j);
        }
        form.shift = 1.0;
        form.finalize();
        auto res = run_lw_form(form, cfg, m, taper_variance_factor(taper));
        return res;
    }

    // Velasco: triangular (Bartlett) data taper on the levels, every second
    // Fourier frequency to decorrelate adjacent tapered ordinates.
    const int mm = m / 2;
    if (mm < 1)
        throw InvalidParameter("tapered_estimate: bandwidth too small for frequency skipping");
    std::vector<double> h(n), hx(n);
    double h2 = 0.0;
    for (std::size_t t = 1; t <= n; ++t) {
        const double ht =
            1.0 - std::abs(2.0 * static_cast<double>(t) - static_cast<double>(n)) /
                      static_cast<double>(n);
        h[t - 1] = ht;
        hx[t - 1] = ht * x[t - 1];
        h2 += ht * ht;
    }
    const double norm = std::sqrt(static_cast<double>(n) / h2);
    const auto view_x = dft_grid(hx, static_cast<std::size_t>(m));
    const auto view_h = dft_grid(h, static_cast<std::size_t>(m));
    form.lambda.resize(mm);
    form.base.resize(mm);
    form.unit.resize(mm);
    for (int i = 1; i <= mm; ++i) {
        const int j = 2 * i;
        form.lambda[i - 1] = view_x.freqs[j - 1];
        form.base[i - 1] = norm * view_x.dft[j - 1];
        form.unit[i - 1] = norm * view_h.dft[j - 1];
    }
    form.finalize();
    return run_lw_form(form, cfg, m, taper_variance_factor(taper));
}

} // namespace fracwhittle
