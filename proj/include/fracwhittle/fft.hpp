#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace fracwhittle::fft {

using Complex = std::complex<double>;

std::size_t next_pow2(std::size_t n);

/// Unnormalized discrete Fourier transform of a fixed length.
///
/// transform() computes F[j] = sum_{t=0}^{n-1} in[t] * exp(sign * 2*pi*i*j*t/n)
/// for j = 0..n-1, with sign in {+1, -1}. Power-of-two lengths run an
/// iterative radix-2 pass over a precomputed twiddle table; other lengths go
/// through Bluestein's chirp-z reduction to a power-of-two convolution.
///
/// A plan is immutable after construction and may be shared across threads;
/// transform() writes only to caller-owned buffers.
class DftPlan {
public:
    explicit DftPlan(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    struct Scratch {
        std::vector<Complex> a;
        std::vector<Complex> b;
    };

    void transform(std::span<const Complex> in, std::span<Complex> out, int sign) const;
    void transform(std::span<const Complex> in, std::span<Complex> out, int sign,
                   Scratch& scratch) const;

    /// In-place power-of-two transform; requires size() to be a power of two
    /// and a.size() == size().
    void radix2(std::span<Complex> a, int sign) const;

private:
    std::size_t n_;
    bool pow2_;
    std::vector<Complex> twiddle_;   // e^{+2*pi*i*k/n}, k < n/2 (pow2 plans)

    // Bluestein pieces (non-pow2 plans only)
    std::unique_ptr<DftPlan> inner_;     // power-of-two convolution plan
    std::vector<Complex> chirp_;         // e^{+i*pi*t^2/n}, t < n
    std::vector<Complex> kernel_pos_;    // spectrum of wrapped chirp, sign = +1
    std::vector<Complex> kernel_neg_;    // spectrum of wrapped chirp, sign = -1
};

} // namespace fracwhittle::fft
