#pragma once

#include <complex>

#include "qfht/quaternion.hpp"

namespace qfht {

/// Truncation control for kernel series plus the weight exponent alpha.
struct KernelConfig {
    double alpha = 1.0;
    int max_terms = 2000;
    double tail_tol = 1e-15;

    KernelConfig() = default;
    explicit KernelConfig(double alpha_, int max_terms_ = 2000, double tail_tol_ = 1e-15);
};

/// Hille-Hardy series form of the kernel,
///   R_theta(x,y) = sum_n n!/Gamma(n+1+alpha) theta^n L_n(x) L_n(y),
/// truncated when |term| < tail_tol |partial sum| for 5 consecutive terms.
/// Requires |theta| < 1; ConvergenceError past max_terms.
Quaternion r_series(const Quaternion& theta, double x, double y, const KernelConfig& cfg);

/// Closed form of the same kernel, branch-free:
///   R_theta(x,y) = (1-theta)^{-alpha-1} exp(-theta(x+y)/(1-theta))
///                  itilde_alpha(theta x y / (1-theta)^2).
/// All factors lie in the slice of theta and commute.  Valid for theta != 1,
/// including |theta| = 1; theta = 1 is rejected (identity/Dirac regime).
Quaternion r_closed(const Quaternion& theta, double x, double y, const KernelConfig& cfg);

/// Weighted kernel K_theta(x,y) = x^alpha e^{-x} R_theta(x,y) of the
/// integral transform.  Evaluated in log space so the weight and the
/// exponential growth of R cancel without overflow.
Quaternion k_kernel(const Quaternion& theta, double x, double y, const KernelConfig& cfg);

namespace detail {

/// Slice-coordinates cores; the quaternionic wrappers embed these values
/// back with the slice unit of theta.
std::complex<double> r_closed_slice(std::complex<double> t, double x, double y, double alpha);
std::complex<double> log_r_closed_slice(std::complex<double> t, double x, double y, double alpha);
std::complex<double> r_series_slice(std::complex<double> t, double x, double y,
                                    const KernelConfig& cfg);

} // namespace detail

} // namespace qfht
