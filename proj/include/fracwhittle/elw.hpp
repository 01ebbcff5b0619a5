#pragma once

#include <span>
#include <vector>

#include "fracwhittle/types.hpp"

namespace fracwhittle {

/// G^(d) = (1/m) sum_{j=1}^m I_{Delta^d x}(lambda_j): mean periodogram of
/// the d-th fractional difference over the first m Fourier frequencies.
/// Returns 0 for a degenerate (identically zero) filtered series.
double g_hat(std::span<const double> x, double d, int m);

/// Concentrated objective R(d) = log G^(d) - 2d (1/m) sum_j log lambda_j.
/// Throws DegenerateInput when G^(d) = 0.
double objective_r(std::span<const double> x, double d, int m);

/// Weight w(d) of the sample mean in the level correction: 1 for d <= 1/2,
/// 0 for d >= 3/4, quintic smoothstep between (twice continuously
/// differentiable).
double mean_weight(double d);

/// Level-corrected copy of x for the given mode. Under Weighted the
/// subtracted value w(d)*mean + (1-w(d))*x_1 depends on the trial d.
std::vector<double> apply_mean_mode(std::span<const double> x, MeanMode mode, double d);

/// Exact local Whittle estimate: minimizes R over [delta1, delta2] by
/// coarse grid scan plus golden-section refinement. se = 1/(2 sqrt(m)).
EstimateResult elw_estimate(std::span<const double> x, const EstimatorConfig& cfg);

} // namespace fracwhittle
