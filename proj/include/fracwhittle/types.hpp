#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fracwhittle/errors.hpp"

namespace fracwhittle {

/// A real-valued series x_1..x_n. `true_d` is set by the simulator so that
/// synthetic data carries its generating memory parameter around.
struct TimeSeries {
    std::vector<double> values;
    std::optional<double> true_d;

    std::size_t size() const noexcept { return values.size(); }
};

/// How the unknown initial level is removed before estimation.
/// `Weighted` interpolates between the sample mean (kept for d <= 1/2) and
/// the first observation (kept for d >= 3/4); the subtraction then depends
/// on the trial d and is re-applied inside every objective evaluation.
enum class MeanMode { None, SampleMean, FirstObs, Weighted };

std::string to_string(MeanMode mode);
MeanMode mean_mode_from_string(const std::string& name);

/// Width of [delta1, delta2] beyond which the optimization interval is no
/// longer covered by the consistency theory; a warning is attached, not an
/// error (the default [-6, 6] range is known to work well in practice).
inline constexpr double kStableRangeWidth = 4.5;

/// Settings shared by the exact, conventional and tapered estimators.
struct EstimatorConfig {
    int m = 0;                 ///< bandwidth; 0 selects floor(n^0.65)
    double delta1 = -6.0;      ///< lower optimization bound
    double delta2 = 6.0;       ///< upper optimization bound
    MeanMode mean_mode = MeanMode::None;
    double grid_step = 0.05;   ///< coarse-scan step
    double tol = 1e-6;         ///< golden-section tolerance on d
    double ci_level = 0.95;

    /// Bandwidth actually used for a series of length n.
    int bandwidth_for(std::size_t n) const {
        if (m > 0) return m;
        return static_cast<int>(std::floor(std::pow(static_cast<double>(n), 0.65)));
    }

    /// Throws InvalidParameter unless 1 <= m < n/2, delta1 < delta2 and
    /// grid_step > tol > 0. The range-width condition is a warning, not an
    /// invariant; see range_warning().
    void validate(std::size_t n) const;

    /// Non-empty when delta2 - delta1 exceeds the stable range width.
    std::string range_warning() const;
};

struct EstimateResult {
    double d_hat = 0.0;
    double g_hat = 0.0;           ///< concentrated-out scale at the minimum
    double se = 0.0;              ///< asymptotic standard error
    double ci_low = 0.0;
    double ci_high = 0.0;
    double objective_at_min = 0.0;
    int n_evals = 0;              ///< objective evaluations spent
    bool boundary_hit = false;    ///< minimizer within tol of a bound
    std::vector<std::string> warnings;
};

} // namespace fracwhittle
