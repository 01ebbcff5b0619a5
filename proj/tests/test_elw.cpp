#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "fracwhittle/elw.hpp"
#include "fracwhittle/fracfilter.hpp"
#include "fracwhittle/optimize.hpp"
#include "fracwhittle/simulate.hpp"
#include "fracwhittle/spectrum.hpp"

using namespace fracwhittle;

namespace {

std::vector<double> sim(std::size_t n, double d, std::uint64_t stream) {
    return gen_fractional(SimSpec{n, d, 31415, {}}, stream).values;
}

} // namespace

TEST_CASE("g_hat trivial cases") {
    const std::vector<double> zeros(100, 0.0);
    CHECK(g_hat(zeros, 0.7, 20) == 0.0);

    const auto x = sim(100, 0.0, 0);
    const auto view = dft_grid(fracdiff(x, 0.3), 1);
    CHECK(g_hat(x, 0.3, 1) == doctest::Approx(view.pgram[0]).epsilon(1e-12));

    CHECK_THROWS_AS(g_hat(x, 0.3, 0), InvalidParameter);
    CHECK_THROWS_AS(g_hat(x, 0.3, 100), InvalidParameter);
}

TEST_CASE("g_hat of white noise estimates 1/(2 pi)") {
    const int draws = 1000;
    const std::size_t n = 500;
    const int m = 56;
    double sum = 0.0, ss = 0.0;
    for (int r = 0; r < draws; ++r) {
        const double g = g_hat(sim(n, 0.0, 1000 + r), 0.0, m);
        sum += g;
        ss += g * g;
    }
    const double mean = sum / draws;
    const double sd = std::sqrt((ss - draws * mean * mean) / (draws - 1));
    const double se = sd / std::sqrt(static_cast<double>(draws));
    const double target = 1.0 / (2.0 * std::acos(-1.0));
    CHECK(std::abs(mean - target) <= 3.0 * se);
}

TEST_CASE("objective_r zero point and scale shift") {
    auto x = sim(300, 0.0, 7);
    const double g0 = g_hat(x, 0.0, 40);
    for (auto& v : x) v /= std::sqrt(g0);   // rescale so G^(0) = 1
    CHECK(objective_r(x, 0.0, 40) == doctest::Approx(0.0).epsilon(1e-10));

    // R_{c x}(d) - R_x(d) = log c^2 for every d
    const double c = 3.7;
    std::vector<double> cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cx[i] = c * x[i];
    for (double d : {-1.0, 0.0, 0.8, 2.2})
        CHECK(objective_r(cx, d, 40) - objective_r(x, d, 40) ==
              doctest::Approx(std::log(c * c)).epsilon(1e-9));
}

TEST_CASE("objective grid minimum lands near the true d") {
    const auto x = sim(500, 0.7, 8);
    double best_d = -1.0, best_r = std::numeric_limits<double>::infinity();
    for (double d = -1.0; d <= 2.0 + 1e-12; d += 0.01) {
        const double r = objective_r(x, d, 56);
        if (r < best_r) {
            best_r = r;
            best_d = d;
        }
    }
    CHECK(std::abs(best_d - 0.7) <= 0.15);
}

TEST_CASE("mean_weight interpolant") {
    CHECK(mean_weight(0.3) == 1.0);
    CHECK(mean_weight(0.5) == 1.0);
    CHECK(mean_weight(0.75) == 0.0);
    CHECK(mean_weight(1.0) == 0.0);
    CHECK(mean_weight(0.625) == doctest::Approx(0.5).epsilon(1e-12));
    // monotone decrease across the blend
    double prev = 1.0;
    for (double d = 0.5; d <= 0.75; d += 0.01) {
        const double w = mean_weight(d);
        CHECK(w <= prev + 1e-15);
        prev = w;
    }
}

TEST_CASE("apply_mean_mode variants") {
    const auto x = sim(50, 0.2, 9);
    CHECK(apply_mean_mode(x, MeanMode::None, 0.0) == x);

    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());

    const auto w03 = apply_mean_mode(x, MeanMode::Weighted, 0.3);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(w03[i] == doctest::Approx(x[i] - mean).epsilon(1e-14));

    const auto w10 = apply_mean_mode(x, MeanMode::Weighted, 1.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(w10[i] == doctest::Approx(x[i] - x[0]).epsilon(1e-14));
}

TEST_CASE("elw_estimate recovers d on single draws") {
    EstimatorConfig cfg;   // defaults: bounds [-6, 6], m = floor(n^0.65) = 56

    const auto x0 = sim(500, 0.0, 10);
    const auto r0 = elw_estimate(x0, cfg);
    CHECK(r0.d_hat >= -0.25);
    CHECK(r0.d_hat <= 0.25);
    CHECK(r0.se == doctest::Approx(0.5 / std::sqrt(56.0)).epsilon(1e-15));
    CHECK(r0.ci_low < r0.d_hat);
    CHECK(r0.ci_high > r0.d_hat);
    CHECK(r0.ci_high - r0.d_hat == doctest::Approx(1.959964 * r0.se).epsilon(1e-12));
    CHECK(!r0.boundary_hit);
    CHECK(r0.g_hat > 0.0);
    CHECK(!r0.warnings.empty());   // default range is wider than the stable width

    const auto x23 = sim(500, 2.3, 11);
    const auto r23 = elw_estimate(x23, cfg);
    CHECK(r23.d_hat >= 2.05);
    CHECK(r23.d_hat <= 2.55);
}

TEST_CASE("forced boundary sets the flag") {
    const auto x = sim(300, 0.0, 12);
    EstimatorConfig cfg;
    cfg.delta1 = 0.4 - 5e-4;
    cfg.delta2 = 0.4 + 5e-4;
    cfg.grid_step = 4e-4;
    cfg.tol = 1e-5;
    const auto r = elw_estimate(x, cfg);
    CHECK(r.boundary_hit);
    CHECK(r.d_hat >= cfg.delta1);
    CHECK(r.d_hat <= cfg.delta2);
}

TEST_CASE("degenerate and invalid inputs") {
    const std::vector<double> zeros(200, 0.0);
    EstimatorConfig cfg;
    CHECK_THROWS_AS(elw_estimate(zeros, cfg), DegenerateInput);

    const auto x = sim(100, 0.0, 13);
    EstimatorConfig bad = cfg;
    bad.m = 50;   // m >= n/2
    CHECK_THROWS_AS(elw_estimate(x, bad), InvalidParameter);

    bad = cfg;
    bad.delta1 = 1.0;
    bad.delta2 = 1.0;
    CHECK_THROWS_AS(elw_estimate(x, bad), InvalidParameter);

    bad = cfg;
    bad.grid_step = 1e-7;   // below tol
    CHECK_THROWS_AS(elw_estimate(x, bad), InvalidParameter);
}

TEST_CASE("scale invariance of the minimizer") {
    const auto x = sim(400, 0.6, 14);
    EstimatorConfig cfg;
    cfg.delta1 = -1.0;
    cfg.delta2 = 2.0;
    const auto base = elw_estimate(x, cfg);
    for (double c : {0.01, 5.0, 1234.5}) {
        std::vector<double> cx(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) cx[i] = c * x[i];
        const auto scaled = elw_estimate(cx, cfg);
        CHECK(std::abs(scaled.d_hat - base.d_hat) <= 2.0 * cfg.tol);
    }
}

TEST_CASE("shift property: integrating by delta shifts the estimate by delta") {
    const auto x = sim(500, 0.3, 15);
    EstimatorConfig cfg;
    cfg.delta1 = -1.0;
    cfg.delta2 = 1.5;
    const auto base = elw_estimate(x, cfg);

    const double delta = 0.5;
    const auto shifted_series = fracint(x, delta);
    EstimatorConfig shifted_cfg = cfg;
    shifted_cfg.delta1 += delta;
    shifted_cfg.delta2 += delta;
    const auto shifted = elw_estimate(shifted_series, shifted_cfg);
    CHECK(!base.boundary_hit);
    CHECK(!shifted.boundary_hit);
    CHECK(std::abs(shifted.d_hat - (base.d_hat + delta)) <= 2.0 * cfg.tol);
}

TEST_CASE("golden section agrees with an exhaustive fine grid") {
    EstimatorConfig cfg;
    cfg.delta1 = 0.0;
    cfg.delta2 = 1.4;
    cfg.tol = 1e-3;
    const std::size_t n = 64;
    const int m = cfg.bandwidth_for(n);
    int checked = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto x = sim(n, 0.7, 2000 + s);
        const auto est = elw_estimate(x, cfg);
        if (est.boundary_hit) continue;   // fine-grid comparison is interior-only
        double best_d = cfg.delta1, best_r = std::numeric_limits<double>::infinity();
        for (double d = cfg.delta1; d <= cfg.delta2 + 1e-12; d += cfg.tol / 10.0) {
            const double r = objective_r(x, d, m);
            if (r < best_r) {
                best_r = r;
                best_d = d;
            }
        }
        CHECK(std::abs(est.d_hat - best_d) <= cfg.tol);
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("weighted mode warns near the excluded regions") {
    const auto x = sim(400, 0.0, 16);
    EstimatorConfig cfg;
    cfg.mean_mode = MeanMode::Weighted;
    const auto r = elw_estimate(x, cfg);
    bool found = false;
    for (const auto& w : r.warnings)
        if (w.find("weighted mean correction") != std::string::npos) found = true;
    CHECK(found);
}
