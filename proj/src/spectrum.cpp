#include "fracwhittle/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "fracwhittle/errors.hpp"
#include "fracwhittle/fft.hpp"
#include "fracwhittle/fracfilter.hpp"

namespace fracwhittle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

SpectralView dft_grid(std::span<const double> a, std::size_t J) {
    const std::size_t n = a.size();
    if (n == 0) throw InvalidInput("dft_grid: empty series");
    if (J < 1 || J > n - 1)
        throw InvalidParameter("dft_grid: frequency count must satisfy 1 <= J <= n-1");

    fft::DftPlan plan(n);
    std::vector<fft::Complex> in(n), full(n);
    for (std::size_t t = 0; t < n; ++t) in[t] = a[t];
    plan.transform(in, full, +1);

    // sum over t = 1..n carries an extra e^{i lambda_j} relative to the
    // 0-based transform
    SpectralView view;
    view.n = n;
    view.freqs.resize(J);
    view.dft.resize(J);
    view.pgram.resize(J);
    const double scale = 1.0 / std::sqrt(kTwoPi * static_cast<double>(n));
    for (std::size_t j = 1; j <= J; ++j) {
        const double lambda = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        const auto w = scale * std::polar(1.0, lambda) * full[j];
        view.freqs[j - 1] = lambda;
        view.dft[j - 1] = w;
        view.pgram[j - 1] = std::norm(w);
    }
    return view;
}

std::complex<double> dn_poly(double lambda, double d, std::size_t n) {
    if (n < 1) throw InvalidParameter("dn_poly: n must be positive");
    const auto pi = frac_coeffs(d, n).coeffs;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k <= n; ++k) {
        if (pi[k] != 0.0)
            acc += pi[k] * std::polar(1.0, lambda * static_cast<double>(k));
    }
    return acc;
}

std::complex<double> tail_correction(std::span<const double> x, double lambda, double d) {
    const std::size_t n = x.size();
    if (n == 0) throw InvalidInput("tail_correction: empty series");
    const auto pi = frac_coeffs(d, n).coeffs;

    // d~_{lambda,p} = d~_{lambda,p+1} + pi_{p+1} e^{i(p+1)lambda}, from p = n-1 down
    std::vector<std::complex<double>> dtail(n);
    std::complex<double> suffix{0.0, 0.0};
    for (std::size_t p = n; p-- > 0;) {
        suffix += pi[p + 1] * std::polar(1.0, lambda * static_cast<double>(p + 1));
        dtail[p] = suffix;
    }

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t p = 0; p < n; ++p)
        acc += dtail[p] * std::polar(1.0, -lambda * static_cast<double>(p)) * x[n - 1 - p];
    return acc;
}

double verify_lemma51(std::span<const double> x, double d, std::size_t j) {
    const std::size_t n = x.size();
    if (n < 2) throw InvalidInput("verify_lemma51: need at least 2 observations");
    if (j < 1 || j > n - 1)
        throw InvalidParameter("verify_lemma51: frequency index must satisfy 1 <= j <= n-1");

    const double lambda = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    const auto u = fracdiff(x, d);
    const auto wu = dft_grid(u, j).dft[j - 1];
    const auto wx = dft_grid(x, j).dft[j - 1];
    const auto dn = dn_poly(lambda, d, n);
    const auto tail = tail_correction(x, lambda, d);
    const auto phase = std::polar(1.0, lambda * static_cast<double>(n));
    const double scale = 1.0 / std::sqrt(kTwoPi * static_cast<double>(n));

    const auto residual = wu - dn * wx + scale * phase * tail;
    return std::abs(residual) / (std::abs(wu) + 1.0);
}

} // namespace fracwhittle
