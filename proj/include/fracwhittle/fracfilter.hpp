#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracwhittle/fft.hpp"

namespace fracwhittle {

/// Truncated binomial expansion of (1 - L)^d: coeffs[k] = (-d)_k / k!.
/// Generated by the multiplicative recursion pi_k = pi_{k-1} (k - 1 - d)/k,
/// which is overflow-free for every truncation order and terminates exactly
/// (pi_k = 0 for k > d) when d is a nonnegative integer.
struct FracCoeffs {
    double d = 0.0;
    std::vector<double> coeffs;   // pi_0 .. pi_K

    std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

FracCoeffs frac_coeffs(double d, std::size_t truncation);

/// y_t = sum_{k=0}^{t-1} pi_k(d) x_{t-k}, t = 1..n: the d-th fractional
/// difference under the zero-pre-sample (t >= 1) convention. Short or small
/// inputs use the direct sum; longer ones use zero-padded FFT convolution.
std::vector<double> fracdiff(std::span<const double> x, double d);

/// Fractional integration: fracdiff with the sign of d flipped. The two are
/// exact mutual inverses on truncated causal sequences.
std::vector<double> fracint(std::span<const double> x, double d);

/// Direct-path threshold for fracdiff/fracint; below this the O(n^2) sum is
/// cheaper than FFT setup.
inline constexpr std::size_t kFftConvThreshold = 128;

/// Repeated fractional filtering of one fixed series at many d values.
/// Caches the padded spectra of the series and of the all-ones vector, so
/// each apply() costs one coefficient transform and one inverse transform;
/// the `offset` argument filters x - offset (constant mean corrections)
/// without re-transforming the data.
///
/// Not safe for concurrent use; each estimation call owns its own instance.
class FilterWorkspace {
public:
    explicit FilterWorkspace(std::span<const double> x);

    std::size_t size() const noexcept { return n_; }

    /// out_t = sum_{k=0}^{t-1} pi_k(d) (x - offset)_{t-k}; out.size() == size().
    void apply(double d, double offset, std::span<double> out);

private:
    std::size_t n_;
    fft::DftPlan plan_;
    std::vector<fft::Complex> x_spec_;
    std::vector<fft::Complex> ones_spec_;
    std::vector<fft::Complex> coef_;
    std::vector<fft::Complex> work_;
};

} // namespace fracwhittle
