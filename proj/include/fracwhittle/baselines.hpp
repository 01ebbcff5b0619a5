#pragma once

#include <span>
#include <string>

#include "fracwhittle/types.hpp"

namespace fracwhittle {

/// Taper applied before the conventional local Whittle objective.
/// HurvichChen: complex taper (1 - e^{i 2 pi t/n})/2 on the first-differenced
/// series, objective at half-shifted frequencies, parameter shifted by one.
/// VelascoBartlett: triangular data taper on the levels (order 2), objective
/// over every second Fourier frequency.
enum class TaperKind { None, HurvichChen, VelascoBartlett };

/// Limiting variance inflation factor Phi: the tapered estimators satisfy
/// sqrt(m)(d^ - d) -> N(0, Phi/4) with Phi = 1 (none), 1.5 (HC), 2.1 (V).
double taper_variance_factor(TaperKind kind);

std::string to_string(TaperKind kind);

/// Conventional local Whittle estimate: minimizes
///   log((1/m) sum_j lambda_j^{2d} I_x(lambda_j)) - 2d (1/m) sum_j log lambda_j
/// by the same grid + golden-section scheme as the exact estimator.
/// Consistent only up to d = 1; beyond that it converges to unity.
EstimateResult lw_estimate(std::span<const double> x, const EstimatorConfig& cfg);

/// Local Whittle estimate on a tapered periodogram; se = sqrt(Phi)/(2 sqrt(m)).
EstimateResult tapered_estimate(std::span<const double> x, const EstimatorConfig& cfg,
                                TaperKind taper);

} // namespace fracwhittle
