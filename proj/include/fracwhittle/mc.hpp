#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fracwhittle/baselines.hpp"
#include "fracwhittle/types.hpp"

#include <json.hpp>

namespace fracwhittle {

enum class EstimatorKind { Elw, Lw, TaperHc, TaperVelasco };

std::string to_string(EstimatorKind kind);
EstimatorKind estimator_from_string(const std::string& name);

struct McConfig {
    std::size_t n = 500;
    int m = 0;                            ///< 0 selects floor(n^0.65)
    int reps = 1000;
    std::vector<double> d_values;
    std::vector<EstimatorKind> estimators;
    std::uint64_t seed = 1;
    int workers = 0;                      ///< <= 0: hardware concurrency
    EstimatorConfig est;                  ///< bounds / mean mode / optimizer settings
    bool densities = false;
    int density_points = 201;
    std::vector<double> innovation_filter;   ///< empty: i.i.d. N(0,1)
};

/// Moments of one (estimator, d) cell; density grids attached on request.
struct McCell {
    EstimatorKind estimator = EstimatorKind::Elw;
    double d = 0.0;
    double bias = 0.0;   ///< mean(d^) - d
    double sd = 0.0;     ///< sample standard deviation of d^ (n-1 divisor)
    double mse = 0.0;    ///< mean((d^ - d)^2)
    int failures = 0;
    std::vector<double> density_x;
    std::vector<double> density_y;
};

struct McReport {
    std::size_t n = 0;
    int m = 0;
    int reps = 0;
    std::uint64_t seed = 0;
    std::vector<McCell> cells;
};

/// Replication-parallel Monte Carlo: one innovation draw per replication
/// (stream (seed, r)), fractionally integrated to each requested d, every
/// configured estimator run on the same draw. Per-replication results land
/// in slot r and are aggregated serially, so reports are identical for any
/// worker count. Failed replications are excluded and counted; a cell with
/// more than 1% failures raises HarnessError.
McReport run_mc(const McConfig& cfg);

/// Gaussian kernel density estimate at the given grid points.
std::vector<double> kde(std::span<const double> samples, double bandwidth,
                        std::span<const double> grid);

/// 1.06 * sd * N^{-1/5}.
double silverman_bandwidth(std::span<const double> samples);

void write_table_csv(const McReport& report, std::ostream& os);
void write_density_csv(const McReport& report, std::ostream& os);
nlohmann::json report_json(const McReport& report);

} // namespace fracwhittle
