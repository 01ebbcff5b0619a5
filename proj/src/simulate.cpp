#include "fracwhittle/simulate.hpp"

#include <cmath>

#include "fracwhittle/fracfilter.hpp"
#include "fracwhittle/prob.hpp"

namespace fracwhittle {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + kGamma) + (stream + 1) * kGamma)) {}

std::uint64_t CounterRng::next_u64() {
    return mix64(key_ + (++counter_) * kGamma);
}

double CounterRng::next_uniform() {
    // 53-bit mantissa, offset half a step: never 0 or 1
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
    return normal_quantile(next_uniform());
}

std::vector<double> draw_innovations(const SimSpec& spec, std::uint64_t rep) {
    if (spec.n < 1) throw InvalidParameter("gen_fractional: n must be positive");
    for (double c : spec.innovation_filter)
        if (!std::isfinite(c))
            throw InvalidParameter("gen_fractional: non-finite innovation filter coefficient");

    CounterRng rng(spec.seed, rep);
    if (spec.innovation_filter.empty()) {
        std::vector<double> u(spec.n);
        for (auto& v : u) v = rng.next_gaussian();
        return u;
    }

    // pre-sample innovations so u_t is stationary from t = 1 on
    const std::size_t q = spec.innovation_filter.size() - 1;
    std::vector<double> eps(spec.n + q);
    for (auto& v : eps) v = rng.next_gaussian();
    std::vector<double> u(spec.n);
    for (std::size_t t = 0; t < spec.n; ++t) {
        double acc = 0.0;
        for (std::size_t k = 0; k <= q; ++k) acc += spec.innovation_filter[k] * eps[t + q - k];
        u[t] = acc;
    }
    return u;
}

TimeSeries gen_fractional(const SimSpec& spec, std::uint64_t rep) {
    if (!std::isfinite(spec.d)) throw InvalidParameter("gen_fractional: d must be finite");
    const auto u = draw_innovations(spec, rep);
    TimeSeries out;
    out.values = fracint(u, spec.d);
    out.true_d = spec.d;
    return out;
}

} // namespace fracwhittle
