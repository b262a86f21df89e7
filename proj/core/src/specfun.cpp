#include "qfht/specfun.hpp"

#include <cmath>

#include "qfht/errors.hpp"

namespace qfht {

double ln_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("ln_gamma: requires x > 0");
    return std::lgamma(x);
}

double laguerre(int n, double alpha, double x) {
    if (n < 0) throw DomainError("laguerre: requires n >= 0");
    if (n == 0) return 1.0;
    double lkm1 = 1.0;
    double lk = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double lkp1 = ((2.0 * k + 1.0 + alpha - x) * lk - (k + alpha) * lkm1) / (k + 1.0);
        lkm1 = lk;
        lk = lkp1;
    }
    return lk;
}

namespace detail {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;
constexpr int itilde_max_terms = 10000;

// Kahan-compensated sum of the power series sum w^k / (k! Gamma(a+k+1)).
std::complex<double> series_sum(double alpha, std::complex<double> w) {
    std::complex<double> term = std::exp(-std::lgamma(alpha + 1.0));
    std::complex<double> sum = term;
    std::complex<double> comp = 0.0;
    for (int k = 0; k < itilde_max_terms; ++k) {
        term *= w / ((k + 1.0) * (alpha + k + 1.0));
        const std::complex<double> yk = term - comp;
        const std::complex<double> t = sum + yk;
        comp = (t - sum) - yk;
        sum = t;
        // |term_{k+1}/term_k| decreases monotonically, so a single check
        // after the terms turn small is safe.
        if (std::abs(term) == 0.0) return sum;
        if (std::abs(term) < 1e-17 * std::abs(sum) &&
            std::abs(w) < (k + 1.0) * (alpha + k + 1.0))
            return sum;
    }
    throw ConvergenceError("itilde: series did not converge within 10^4 terms");
}

} // namespace

std::complex<double> itilde_series(double alpha, std::complex<double> w) {
    return series_sum(alpha, w);
}

// I_a(z) for large |z|, Re z >= 0, as the two-exponential Hankel expansion
//   I_a(z) = (2 pi z)^{-1/2} [ e^z S-(z) + e^{s(a+1/2) pi i} e^{-z} S+(z) ],
// S-+(z) = sum_k (-+1)^k a_k(a) z^{-k}, a_k = prod (4a^2-(2j-1)^2)/(k! 8^k),
// sign s = +1 for Im z >= 0 and -1 otherwise.  Returned as log I_a(z).
std::complex<double> log_itilde_asymptotic(double alpha, std::complex<double> w) {
    const std::complex<double> z = std::sqrt(w) * 2.0; // principal: Re z >= 0
    const double mu = 4.0 * alpha * alpha;

    std::complex<double> s_alt = 1.0;  // sum (-1)^k a_k / z^k
    std::complex<double> s_pos = 1.0;  // sum        a_k / z^k
    std::complex<double> term = 1.0;
    double prev_mag = 1.0;
    for (int k = 1; k <= 60; ++k) {
        const double numer = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= numer / (8.0 * k) / z;
        const double mag = std::abs(term);
        if (mag > prev_mag) break; // divergent tail reached; stop at the optimum
        s_alt += (k % 2 == 0) ? term : -term;
        s_pos += term;
        if (mag < 1e-18) break;    // includes exact termination at half-integer alpha
        prev_mag = mag;
    }

    // sign keyed to the sector of z itself: on the branch-cut edges the
    // sign of Im w and the half-plane of sqrt(w) can disagree through
    // signed zeros, and only the latter matters for the pairing
    const double sigma = (z.imag() >= 0.0) ? 1.0 : -1.0;
    const std::complex<double> phase{0.0, sigma * (alpha + 0.5) * 3.14159265358979323846};
    // factor out e^{Re z}; what remains is O(1)
    const std::complex<double> rot{0.0, z.imag()};
    const std::complex<double> combo =
        std::exp(rot) * s_alt + std::exp(phase - z - z.real()) * s_pos;
    const std::complex<double> log_i =
        z.real() - 0.5 * std::log(two_pi * z) + std::log(combo);
    return log_i - alpha * std::log(z / 2.0);
}

std::complex<double> itilde(double alpha, std::complex<double> w) {
    if (std::abs(w) <= itilde_series_bound) return series_sum(alpha, w);
    return std::exp(log_itilde_asymptotic(alpha, w));
}

std::complex<double> log_itilde(double alpha, std::complex<double> w) {
    if (std::abs(w) <= itilde_series_bound) return std::log(series_sum(alpha, w));
    return log_itilde_asymptotic(alpha, w);
}

} // namespace detail

Quaternion bessel_i_norm(double alpha, const Quaternion& w) {
    if (!(alpha > 0.0)) throw DomainError("bessel_i_norm: requires alpha > 0");
    const SliceForm s = slice_decompose(w);
    return embed(detail::itilde(alpha, slice_complex(w)), s.unit);
}

double modified_bessel_i(double alpha, double x) {
    if (!(alpha >= 0.0)) throw DomainError("modified_bessel_i: requires alpha >= 0");
    if (!(x >= 0.0)) throw DomainError("modified_bessel_i: requires x >= 0");
    if (x == 0.0) return (alpha == 0.0) ? 1.0 : 0.0;
    const std::complex<double> lg = detail::log_itilde(alpha, {0.25 * x * x, 0.0});
    return std::exp(alpha * std::log(0.5 * x) + lg.real());
}

double bessel_j(double alpha, double x) {
    if (!(alpha >= 0.0)) throw DomainError("bessel_j: requires alpha >= 0");
    if (!(x >= 0.0)) throw DomainError("bessel_j: requires x >= 0");
    if (x > 1e4)
        throw ConvergenceError("bessel_j: argument beyond supported range (x <= 1e4)");
    if (x == 0.0) return (alpha == 0.0) ? 1.0 : 0.0;
    const std::complex<double> v = detail::itilde(alpha, {-0.25 * x * x, 0.0});
    return std::pow(0.5 * x, alpha) * v.real();
}

} // namespace qfht
