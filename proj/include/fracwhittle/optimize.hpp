#pragma once

#include <functional>

namespace fracwhittle {

struct ScalarMinResult {
    double x = 0.0;
    double fx = 0.0;
    int n_evals = 0;
    bool evaluable = false;   ///< false when f was +inf on the whole grid
};

/// Bounded one-dimensional minimization: coarse scan at `step` over
/// [lo, hi] (endpoints included), then golden-section refinement on the
/// bracketing triple around the best grid point. Non-evaluable points are
/// signalled by f returning +infinity. Robust to multiple local minima at
/// the resolution of the grid; the returned point is the best one actually
/// evaluated, so fx never exceeds the grid minimum.
ScalarMinResult minimize_grid_golden(const std::function<double(double)>& f,
                                     double lo, double hi, double step, double tol);

} // namespace fracwhittle
