#pragma once

#include <complex>

#include "qfht/quaternion.hpp"

namespace qfht {

/// log Gamma(x) for x > 0.  Throws DomainError on x <= 0.
double ln_gamma(double x);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x), alpha > -1, via the
/// three-term recurrence (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
double laguerre(int n, double alpha, double x);

/// Normalized modified Bessel series
///   itilde_a(w) = sum_{k>=0} w^k / (k! Gamma(a+k+1)),
/// an entire function of w with (xi/2)^{-a} I_a(xi) = itilde_a(xi^2/4).
/// Evaluated on the slice of w; the result lies in the same slice.
/// All half-powers of the classical Bessel forms cancel through this
/// normalization, so no branch of sqrt(w) is ever taken on the value.
Quaternion bessel_i_norm(double alpha, const Quaternion& w);

/// Modified Bessel function I_alpha(x) = (x/2)^alpha itilde_alpha(x^2/4),
/// x >= 0, alpha >= 0.
double modified_bessel_i(double alpha, double x);

/// Bessel function J_alpha(x) = (x/2)^alpha itilde_alpha(-x^2/4), x >= 0,
/// alpha >= 0.  Accuracy: ~1e-13 of the oscillation envelope throughout
/// (power series for small argument, Hankel-type asymptotics beyond);
/// arguments past 1e4 are rejected with ConvergenceError.
double bessel_j(double alpha, double x);

namespace detail {

/// Complex itilde_a(w).  Power series for |w| <= itilde_series_bound,
/// large-argument asymptotics of I_a(2 sqrt(w)) beyond.  The switch radius
/// keeps the alternating-series cancellation below ~1e-10 of the envelope
/// while the asymptotic tail is already at ~1e-13; calibrated for
/// moderate orders (suite uses alpha <= 3.5).
inline constexpr double itilde_series_bound = 56.25; // (15/2)^2, i.e. |2 sqrt(w)| <= 15

std::complex<double> itilde(double alpha, std::complex<double> w);

/// log itilde_a(w), safe against overflow of the exponential factors
/// (used by the kernel in log space).
std::complex<double> log_itilde(double alpha, std::complex<double> w);

std::complex<double> itilde_series(double alpha, std::complex<double> w);
std::complex<double> log_itilde_asymptotic(double alpha, std::complex<double> w);

} // namespace detail

} // namespace qfht
