#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fracwhittle {

/// Discrete Fourier transform and periodogram of a series on the Fourier
/// grid lambda_j = 2*pi*j/n, j = 1..J, under the convention
///   w_a(lambda) = (2*pi*n)^{-1/2} sum_{t=1}^n a_t e^{i t lambda}
/// (sum starts at t = 1, positive exponent). Immutable once built.
struct SpectralView {
    std::size_t n = 0;
    std::vector<double> freqs;                 // lambda_j, j = 1..J
    std::vector<std::complex<double>> dft;     // w_a(lambda_j)
    std::vector<double> pgram;                 // I_a(lambda_j) = |w_a|^2
};

/// Full-grid fast transform, then the slice j = 1..J. Requires 1 <= J <= n-1.
SpectralView dft_grid(std::span<const double> a, std::size_t J);

/// D_n(e^{i lambda}; d) = sum_{k=0}^n ((-d)_k / k!) e^{i k lambda},
/// the degree-n truncation of (1 - e^{i lambda})^d.
std::complex<double> dn_poly(double lambda, double d, std::size_t n);

/// Boundary term of the exact d.f.t. decomposition:
///   X~_{lambda n}(d) = sum_{p=0}^{n-1} d~_{lambda p} e^{-i p lambda} x_{n-p},
///   d~_{lambda p}   = sum_{k=p+1}^{n} ((-d)_k / k!) e^{i k lambda}.
/// The d~ sequence is built by one backward suffix-sum pass, O(n) total.
std::complex<double> tail_correction(std::span<const double> x, double lambda, double d);

/// Normalized residual of the exact identity
///   w_u(lambda_j) = D_n(e^{i lambda_j}; d) w_x(lambda_j)
///                   - (2*pi*n)^{-1/2} e^{i n lambda_j} X~_{lambda_j n}(d)
/// with u = fracdiff(x, d). The identity is algebraic, so the residual is
/// floating-point rounding only; it is exactly zero at d = 0.
double verify_lemma51(std::span<const double> x, double d, std::size_t j);

} // namespace fracwhittle
