#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "fracwhittle/fracfilter.hpp"
#include "fracwhittle/simulate.hpp"
#include "fracwhittle/spectrum.hpp"

using namespace fracwhittle;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> gaussian_series(std::size_t n, std::uint64_t stream) {
    CounterRng rng(555, stream);
    std::vector<double> x(n);
    for (auto& v : x) v = rng.next_gaussian();
    return x;
}

// direct O(n^2) transform under the paper convention (t = 1..n, e^{+itl})
std::complex<double> dft_direct(const std::vector<double>& a, double lambda) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t t = 1; t <= a.size(); ++t)
        acc += a[t - 1] * std::polar(1.0, lambda * static_cast<double>(t));
    return acc / std::sqrt(kTwoPi * static_cast<double>(a.size()));
}

// direct double-loop tail correction
std::complex<double> tail_direct(const std::vector<double>& x, double lambda, double d) {
    const std::size_t n = x.size();
    const auto pi = frac_coeffs(d, n).coeffs;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t p = 0; p < n; ++p) {
        std::complex<double> dt{0.0, 0.0};
        for (std::size_t k = p + 1; k <= n; ++k)
            dt += pi[k] * std::polar(1.0, lambda * static_cast<double>(k));
        acc += dt * std::polar(1.0, -lambda * static_cast<double>(p)) * x[n - 1 - p];
    }
    return acc;
}

} // namespace

TEST_CASE("dft_grid of a constant vanishes on the Fourier grid") {
    const std::vector<double> c(50, 3.7);
    const auto view = dft_grid(c, 49);
    for (const auto& w : view.dft) CHECK(std::abs(w) <= 1e-12);
}

TEST_CASE("dft_grid of a leading impulse") {
    std::vector<double> x(32, 0.0);
    x[0] = 1.0;
    const auto view = dft_grid(x, 31);
    const double scale = 1.0 / std::sqrt(kTwoPi * 32.0);
    for (std::size_t j = 1; j <= 31; ++j) {
        const auto expected = scale * std::polar(1.0, kTwoPi * static_cast<double>(j) / 32.0);
        CHECK(std::abs(view.dft[j - 1] - expected) <= 1e-14);
    }
}

TEST_CASE("dft_grid matches direct summation") {
    for (std::size_t n : {64u, 100u}) {   // power of two and Bluestein paths
        const auto x = gaussian_series(n, n);
        const auto view = dft_grid(x, n - 1);
        for (std::size_t j = 1; j < n; ++j) {
            const auto ref = dft_direct(x, kTwoPi * static_cast<double>(j) /
                                               static_cast<double>(n));
            CHECK(std::abs(view.dft[j - 1] - ref) <= 1e-12 * (std::abs(ref) + 1.0));
        }
    }
}

TEST_CASE("dft_grid validates the frequency count") {
    const auto x = gaussian_series(16, 1);
    CHECK_THROWS_AS(dft_grid(x, 0), InvalidParameter);
    CHECK_THROWS_AS(dft_grid(x, 16), InvalidParameter);
}

TEST_CASE("full-grid Parseval identity") {
    for (std::size_t n : {16u, 100u, 128u, 500u}) {
        const auto x = gaussian_series(n, 10 + n);
        const auto view = dft_grid(x, n - 1);
        double lhs = 0.0, sum = 0.0, ss = 0.0;
        for (double v : view.pgram) lhs += v;
        for (double v : x) {
            sum += v;
            ss += v * v;
        }
        lhs += sum * sum / (kTwoPi * static_cast<double>(n));   // j = 0 ordinate
        const double rhs = ss / kTwoPi;
        CHECK(std::abs(lhs - rhs) <= 1e-10 * rhs);
    }
}

TEST_CASE("periodogram symmetry for real series") {
    const std::size_t n = 96;
    const auto x = gaussian_series(n, 3);
    const auto view = dft_grid(x, n - 1);
    for (std::size_t j = 1; j < n; ++j) {
        const double a = view.pgram[j - 1];
        const double b = view.pgram[n - j - 1];
        CHECK(std::abs(a - b) <= 1e-12 * (a + b + 1e-300));
    }
}

TEST_CASE("dn_poly trivial values") {
    for (double lambda : {0.1, 1.0, 2.5}) {
        CHECK(dn_poly(lambda, 0.0, 64) == std::complex<double>{1.0, 0.0});
        const auto expected = 1.0 - std::polar(1.0, lambda);
        CHECK(std::abs(dn_poly(lambda, 1.0, 64) - expected) <= 1e-15);
    }
}

TEST_CASE("dn_poly approximates lambda^d e^{-(pi/2) d i} at low frequency") {
    const std::size_t n = 256;
    const double d = 0.4;
    const double lambda = kTwoPi * 3.0 / static_cast<double>(n);
    const auto dn = dn_poly(lambda, d, n);
    const auto limit = std::pow(lambda, d) * std::polar(1.0, -0.5 * std::numbers::pi * d);
    CHECK(std::abs(dn / limit - 1.0) < 0.15);
}

TEST_CASE("tail_correction trivial cases") {
    const auto x = gaussian_series(40, 4);
    CHECK(tail_correction(x, 0.7, 0.0) == std::complex<double>{0.0, 0.0});

    const std::vector<double> zeros(40, 0.0);
    CHECK(std::abs(tail_correction(zeros, 1.3, 2.2)) == 0.0);
}

TEST_CASE("tail_correction suffix recursion equals double-loop oracle") {
    const std::size_t n = 200;
    const auto x = gaussian_series(n, 5);
    const double lambda = kTwoPi * 5.0 / static_cast<double>(n);
    for (double d : {1.3, -0.7, 3.1}) {
        const auto fast = tail_correction(x, lambda, d);
        const auto ref = tail_direct(x, lambda, d);
        CHECK(std::abs(fast - ref) <= 1e-10 * (std::abs(ref) + 1.0));
    }
}

TEST_CASE("lemma identity residual is exactly zero at d = 0") {
    const auto x = gaussian_series(64, 6);
    for (std::size_t j : {1u, 7u, 31u}) CHECK(verify_lemma51(x, 0.0, j) == 0.0);
}

TEST_CASE("lemma identity residual is rounding-level") {
    const auto x = gaussian_series(256, 7);
    CHECK(verify_lemma51(x, 2.3, 7) <= 1e-9);

    const auto u = gaussian_series(256, 8);
    const auto xf = fracint(u, 0.7);
    for (std::size_t j = 1; j <= 16; ++j) CHECK(verify_lemma51(xf, 0.7, j) <= 1e-9);
}

TEST_CASE("lemma identity residual over the d and n grid") {
    for (std::size_t n : {16u, 128u}) {
        const auto x = gaussian_series(n, 20 + n);
        for (double d : {-4.5, -2.0, -0.5, 0.0, 0.5, 1.0, 1.3, 2.3, 4.5}) {
            const std::size_t jmax = std::min<std::size_t>(32, n - 1);
            for (std::size_t j = 1; j <= jmax; ++j)
                CHECK(verify_lemma51(x, d, j) <= 1e-8);
        }
    }
}

TEST_CASE("verify_lemma51 validates the frequency index") {
    const auto x = gaussian_series(16, 9);
    CHECK_THROWS_AS(verify_lemma51(x, 0.4, 0), InvalidParameter);
    CHECK_THROWS_AS(verify_lemma51(x, 0.4, 16), InvalidParameter);
}
