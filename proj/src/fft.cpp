#include "fracwhittle/fft.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <utility>

#include "fracwhittle/errors.hpp"

namespace fracwhittle::fft {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// e^{sign * i * pi * k^2 / n} with the angle reduced exactly in integers
// (k^2 mod 2n); keeps the chirp accurate for large indices.
Complex chirp_term(std::size_t k, std::size_t n, int sign) {
    const std::size_t r = (k * k) % (2 * n);
    const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return std::polar(1.0, sign > 0 ? angle : -angle);
}

} // namespace

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

DftPlan::DftPlan(std::size_t n) : n_(n), pow2_(is_pow2(n)) {
    if (n == 0) throw InvalidParameter("DftPlan: size must be positive");
    if (pow2_) {
        twiddle_.resize(n_ / 2);
        for (std::size_t k = 0; k < n_ / 2; ++k)
            twiddle_[k] = std::polar(1.0, 2.0 * std::numbers::pi *
                                              static_cast<double>(k) / static_cast<double>(n_));
        return;
    }

    const std::size_t conv = next_pow2(2 * n_ - 1);
    inner_ = std::make_unique<DftPlan>(conv);
    chirp_.resize(n_);
    for (std::size_t t = 0; t < n_; ++t) chirp_[t] = chirp_term(t, n_, +1);

    // Kernel k_s = conj(chirp_s) placed circularly at offsets -(n-1)..(n-1).
    for (int sign : {+1, -1}) {
        std::vector<Complex> kernel(conv, Complex{0.0, 0.0});
        for (std::size_t s = 0; s < n_; ++s) {
            const Complex v = chirp_term(s, n_, -sign);
            kernel[s] = v;
            if (s > 0) kernel[conv - s] = v;
        }
        inner_->radix2(kernel, -1);
        (sign > 0 ? kernel_pos_ : kernel_neg_) = std::move(kernel);
    }
}

void DftPlan::radix2(std::span<Complex> a, int sign) const {
    assert(pow2_ && a.size() == n_);
    const std::size_t n = n_;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                Complex w = twiddle_[k * step];
                if (sign < 0) w = std::conj(w);
                const Complex u = a[i + k];
                const Complex v = a[i + k + half] * w;
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

void DftPlan::transform(std::span<const Complex> in, std::span<Complex> out, int sign) const {
    Scratch scratch;
    transform(in, out, sign, scratch);
}

void DftPlan::transform(std::span<const Complex> in, std::span<Complex> out, int sign,
                        Scratch& scratch) const {
    if (in.size() != n_ || out.size() != n_)
        throw InvalidParameter("DftPlan::transform: buffer size mismatch");

    if (pow2_) {
        std::copy(in.begin(), in.end(), out.begin());
        radix2(out, sign);
        return;
    }

    // Bluestein: F[j] = c_j * sum_t (in[t] c_t) conj(c_{j-t}), c_t the chirp.
    const std::size_t conv = inner_->size();
    auto& b = scratch.a;
    b.assign(conv, Complex{0.0, 0.0});
    for (std::size_t t = 0; t < n_; ++t) {
        const Complex c = (sign > 0) ? chirp_[t] : std::conj(chirp_[t]);
        b[t] = in[t] * c;
    }
    inner_->radix2(b, -1);
    const auto& kernel = (sign > 0) ? kernel_pos_ : kernel_neg_;
    for (std::size_t i = 0; i < conv; ++i) b[i] *= kernel[i];
    inner_->radix2(b, +1);
    const double scale = 1.0 / static_cast<double>(conv);
    for (std::size_t j = 0; j < n_; ++j) {
        const Complex c = (sign > 0) ? chirp_[j] : std::conj(chirp_[j]);
        out[j] = b[j] * c * scale;
    }
}

} // namespace fracwhittle::fft
