#include "fracwhittle/fracfilter.hpp"

#include <algorithm>
#include <cmath>

#include "fracwhittle/errors.hpp"

namespace fracwhittle {

namespace {

bool terminating(double d, std::size_t n) {
    return d >= 0.0 && d == std::floor(d) && d <= static_cast<double>(n - 1);
}

std::vector<double> conv_direct(std::span<const double> x, std::span<const double> pi) {
    const std::size_t n = x.size();
    std::vector<double> y(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t kmax = std::min(t, pi.size() - 1);
        double acc = 0.0;
        for (std::size_t k = 0; k <= kmax; ++k) acc += pi[k] * x[t - k];
        y[t] = acc;
    }
    return y;
}

std::vector<double> conv_fft(std::span<const double> x, std::span<const double> pi) {
    const std::size_t n = x.size();
    const std::size_t len = fft::next_pow2(2 * n);
    fft::DftPlan plan(len);
    std::vector<fft::Complex> a(len, fft::Complex{0.0, 0.0});
    std::vector<fft::Complex> b(len, fft::Complex{0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) a[i] = x[i];
    for (std::size_t i = 0; i < pi.size(); ++i) b[i] = pi[i];
    plan.radix2(a, -1);
    plan.radix2(b, -1);
    for (std::size_t i = 0; i < len; ++i) a[i] *= b[i];
    plan.radix2(a, +1);
    std::vector<double> y(n);
    const double scale = 1.0 / static_cast<double>(len);
    for (std::size_t t = 0; t < n; ++t) y[t] = a[t].real() * scale;
    return y;
}

} // namespace

FracCoeffs frac_coeffs(double d, std::size_t truncation) {
    if (!std::isfinite(d)) throw InvalidParameter("frac_coeffs: d must be finite");
    std::vector<double> pi(truncation + 1);
    pi[0] = 1.0;
    for (std::size_t k = 1; k <= truncation; ++k)
        pi[k] = pi[k - 1] * ((static_cast<double>(k) - 1.0 - d) / static_cast<double>(k));
    return FracCoeffs{d, std::move(pi)};
}

std::vector<double> fracdiff(std::span<const double> x, double d) {
    if (x.empty()) throw InvalidInput("fracdiff: empty series");
    if (!std::isfinite(d)) throw InvalidParameter("fracdiff: d must be finite");
    const std::size_t n = x.size();
    if (terminating(d, n)) {
        // short exact filter: identity, first difference, binomial differences
        const auto pi = frac_coeffs(d, static_cast<std::size_t>(d)).coeffs;
        return conv_direct(x, pi);
    }
    const auto pi = frac_coeffs(d, n - 1).coeffs;
    if (n < kFftConvThreshold) return conv_direct(x, pi);
    return conv_fft(x, pi);
}

std::vector<double> fracint(std::span<const double> x, double d) {
    if (x.empty()) throw InvalidInput("fracint: empty series");
    if (!std::isfinite(d)) throw InvalidParameter("fracint: d must be finite");
    return fracdiff(x, -d);
}

FilterWorkspace::FilterWorkspace(std::span<const double> x)
    : n_(x.size()),
      plan_(fft::next_pow2(2 * std::max<std::size_t>(x.size(), 1))),
      x_spec_(plan_.size(), fft::Complex{0.0, 0.0}),
      ones_spec_(plan_.size(), fft::Complex{0.0, 0.0}),
      coef_(plan_.size()),
      work_(plan_.size()) {
    if (x.empty()) throw InvalidInput("FilterWorkspace: empty series");
    for (std::size_t i = 0; i < n_; ++i) {
        x_spec_[i] = x[i];
        ones_spec_[i] = 1.0;
    }
    plan_.radix2(x_spec_, -1);
    plan_.radix2(ones_spec_, -1);
}

void FilterWorkspace::apply(double d, double offset, std::span<double> out) {
    if (out.size() != n_) throw InvalidParameter("FilterWorkspace::apply: bad output size");
    const auto pi = frac_coeffs(d, n_ - 1).coeffs;
    const std::size_t len = plan_.size();
    std::fill(coef_.begin(), coef_.end(), fft::Complex{0.0, 0.0});
    for (std::size_t i = 0; i < pi.size(); ++i) coef_[i] = pi[i];
    plan_.radix2(coef_, -1);
    if (offset == 0.0) {
        for (std::size_t i = 0; i < len; ++i) work_[i] = coef_[i] * x_spec_[i];
    } else {
        for (std::size_t i = 0; i < len; ++i)
            work_[i] = coef_[i] * (x_spec_[i] - offset * ones_spec_[i]);
    }
    plan_.radix2(work_, +1);
    const double scale = 1.0 / static_cast<double>(len);
    for (std::size_t t = 0; t < n_; ++t) out[t] = work_[t].real() * scale;
}

} // namespace fracwhittle
