#pragma once

#include <cstdint>
#include <vector>

#include "fracwhittle/types.hpp"

namespace fracwhittle {

/// Counter-based pseudo-random generator with explicit stream splitting.
/// The key is a hash of (seed, stream) and each output is a finalizer of
/// key + counter, so draw i of stream s is a pure function of (seed, s, i):
/// parallel consumers with distinct streams are order-independent and
/// bit-reproducible. Gaussian variates come from the inverse-CDF transform
/// of the uniform stream (AS 241), locking the exact bit pattern.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    double next_uniform();    ///< strictly inside (0, 1)
    double next_gaussian();   ///< standard normal

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Recipe for one synthetic fractional series. Identical specs (and
/// replication streams) reproduce output bit-for-bit on one platform.
struct SimSpec {
    std::size_t n = 0;
    double d = 0.0;
    std::uint64_t seed = 0;
    /// Empty: u_t i.i.d. standard normal. Otherwise u_t = sum_j c_j eps_{t-j}
    /// with i.i.d. standard normal eps (a stationary linear-filter start:
    /// enough pre-sample innovations are drawn that u_1 already has the full
    /// moving-average window).
    std::vector<double> innovation_filter;
};

/// Innovations u_1..u_n for replication `rep` of the spec's seed.
std::vector<double> draw_innovations(const SimSpec& spec, std::uint64_t rep);

/// x = fracint(u, d) with u drawn from the (seed, rep) stream.
TimeSeries gen_fractional(const SimSpec& spec, std::uint64_t rep = 0);

} // namespace fracwhittle
