#include "qfht/kernel.hpp"

#include <cmath>

#include "qfht/errors.hpp"
#include "qfht/specfun.hpp"

namespace qfht {

KernelConfig::KernelConfig(double alpha_, int max_terms_, double tail_tol_)
    : alpha(alpha_), max_terms(max_terms_), tail_tol(tail_tol_) {
    if (!(alpha > 0.0)) throw DomainError("KernelConfig: requires alpha > 0");
    if (max_terms < 1 || max_terms > 2000)
        throw DomainError("KernelConfig: requires 1 <= max_terms <= 2000");
    if (!(tail_tol > 0.0)) throw DomainError("KernelConfig: requires tail_tol > 0");
}

namespace {

void check_xy(double x, double y, const char* who) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError(std::string(who) + ": requires x, y > 0");
}

bool is_one(const Quaternion& theta) { return is_real(theta) && theta.w == 1.0; }

} // namespace

namespace detail {

std::complex<double> r_series_slice(std::complex<double> t, double x, double y,
                                    const KernelConfig& cfg) {
    const double alpha = cfg.alpha;
    // running pieces: ratio_n = n!/Gamma(n+1+alpha), t^n, L_n(x), L_n(y)
    double ratio = std::exp(-ln_gamma(alpha + 1.0));
    std::complex<double> tpow = 1.0;
    double lx_m1 = 0.0, lx = 1.0;
    double ly_m1 = 0.0, ly = 1.0;

    std::complex<double> sum = 0.0;
    int small_run = 0;
    for (int n = 0; n < cfg.max_terms; ++n) {
        const std::complex<double> term = ratio * tpow * (lx * ly);
        sum += term;
        if (std::abs(term) < cfg.tail_tol * std::abs(sum)) {
            if (++small_run >= 5) return sum;
        } else {
            small_run = 0;
        }
        // advance to n+1
        ratio *= (n + 1.0) / (n + 1.0 + alpha);
        tpow *= t;
        const double lx_p1 = ((2.0 * n + 1.0 + alpha - x) * lx - (n + alpha) * lx_m1) / (n + 1.0);
        lx_m1 = lx;
        lx = lx_p1;
        const double ly_p1 = ((2.0 * n + 1.0 + alpha - y) * ly - (n + alpha) * ly_m1) / (n + 1.0);
        ly_m1 = ly;
        ly = ly_p1;
    }
    throw ConvergenceError("r_series: no convergence within max_terms");
}

std::complex<double> log_r_closed_slice(std::complex<double> t, double x, double y, double alpha) {
    const std::complex<double> om = 1.0 - t; // Re(om) > 0 on the closed unit disc minus {1}
    return -(alpha + 1.0) * std::log(om) - t * (x + y) / om +
           log_itilde(alpha, t * (x * y) / (om * om));
}

std::complex<double> r_closed_slice(std::complex<double> t, double x, double y, double alpha) {
    return std::exp(log_r_closed_slice(t, x, y, alpha));
}

} // namespace detail

Quaternion r_series(const Quaternion& theta, double x, double y, const KernelConfig& cfg) {
    check_xy(x, y, "r_series");
    if (!(norm(theta) < 1.0)) throw DomainError("r_series: requires |theta| < 1");
    const SliceForm s = slice_decompose(theta);
    return embed(detail::r_series_slice(slice_complex(theta), x, y, cfg), s.unit);
}

Quaternion r_closed(const Quaternion& theta, double x, double y, const KernelConfig& cfg) {
    check_xy(x, y, "r_closed");
    if (is_one(theta))
        throw DomainError("r_closed: theta = 1 is the identity/Dirac regime");
    const SliceForm s = slice_decompose(theta);
    return embed(detail::r_closed_slice(slice_complex(theta), x, y, cfg.alpha), s.unit);
}

Quaternion k_kernel(const Quaternion& theta, double x, double y, const KernelConfig& cfg) {
    check_xy(x, y, "k_kernel");
    if (is_one(theta))
        throw DomainError("k_kernel: theta = 1 is the identity/Dirac regime");
    const SliceForm s = slice_decompose(theta);
    const std::complex<double> lw =
        detail::log_r_closed_slice(slice_complex(theta), x, y, cfg.alpha) +
        std::complex<double>(cfg.alpha * std::log(x) - x, 0.0);
    return embed(std::exp(lw), s.unit);
}

} // namespace qfht
