#include "fracwhittle/types.hpp"

#include <cmath>

namespace fracwhittle {

std::string to_string(MeanMode mode) {
    switch (mode) {
        case MeanMode::None: return "none";
        case MeanMode::SampleMean: return "sample-mean";
        case MeanMode::FirstObs: return "first-obs";
        case MeanMode::Weighted: return "weighted";
    }
    return "none";
}

MeanMode mean_mode_from_string(const std::string& name) {
    if (name == "none") return MeanMode::None;
    if (name == "sample-mean") return MeanMode::SampleMean;
    if (name == "first-obs") return MeanMode::FirstObs;
    if (name == "weighted") return MeanMode::Weighted;
    throw InvalidParameter("unknown mean mode '" + name +
                           "' (expected none|sample-mean|first-obs|weighted)");
}

void EstimatorConfig::validate(std::size_t n) const {
    if (!std::isfinite(delta1) || !std::isfinite(delta2) || delta1 >= delta2)
        throw InvalidParameter("estimator config: bounds must satisfy delta1 < delta2");
    if (!(tol > 0.0) || !(grid_step > tol))
        throw InvalidParameter("estimator config: need grid_step > tol > 0");
    if (!(ci_level > 0.0 && ci_level < 1.0))
        throw InvalidParameter("estimator config: ci_level must be in (0, 1)");
    const int mm = bandwidth_for(n);
    if (mm < 1 || 2 * static_cast<std::size_t>(mm) >= n)
        throw InvalidParameter("estimator config: bandwidth must satisfy 1 <= m < n/2 (m = " +
                               std::to_string(mm) + ", n = " + std::to_string(n) + ")");
}

std::string EstimatorConfig::range_warning() const {
    if (delta2 - delta1 > kStableRangeWidth)
        return "optimization range wider than " + std::to_string(kStableRangeWidth) +
               "; the limit theory covers narrower intervals (results are typically "
               "unaffected in practice)";
    return {};
}

} // namespace fracwhittle
