#pragma once

#include <span>

#include "qfht/hilbert.hpp"
#include "qfht/kernel.hpp"
#include "qfht/quaternion.hpp"

namespace qfht {

/// The fractional transform L_theta on L^{2,alpha}(R+), parameterized by a
/// quaternion theta and tied to one Gauss-Laguerre rule.  theta with
/// |theta| > 1 is representable (it arises from frht_inverse) but only the
/// spectral path accepts it; the kernel-quadrature path rejects it.
class FrhtOperator {
public:
    FrhtOperator(Quaternion theta, RulePtr rule, KernelConfig cfg);
    FrhtOperator(Quaternion theta, RulePtr rule);

    const Quaternion& theta() const { return theta_; }
    const RulePtr& rule() const { return rule_; }
    const KernelConfig& config() const { return cfg_; }
    double alpha() const { return cfg_.alpha; }

private:
    Quaternion theta_;
    RulePtr rule_;
    KernelConfig cfg_;
};

/// Spectral action: coefficient n becomes theta^n c_n (theta^n on the left).
/// theta = 1 is the exact identity.
CoeffVector frht_spectral(const CoeffVector& c, const Quaternion& theta);

/// Kernel-quadrature action: out(y_j) = sum_i w_i R_theta(x_i, y_j) f(x_i).
/// This is the integral of K_theta(x,y) f(x) dx with the x^alpha e^{-x}
/// carried by K cancelled against the rule weights analytically.
/// Requires |theta| <= 1; theta = 1 bypasses the kernel as the identity.
RadialSignal frht_quadrature(const RadialSignal& f, const FrhtOperator& op);

/// Same integral evaluated at one arbitrary output point y > 0.
Quaternion frht_apply_at(const RadialSignal& f, const FrhtOperator& op, double y);

/// Operator with parameter theta^{-1}.  For |theta| = 1 this is conj(theta)
/// and stays admissible on both paths; for |theta| < 1 the inverse parameter
/// has modulus > 1 and is usable on the spectral path only.
FrhtOperator frht_inverse(const FrhtOperator& op);

/// Operator with parameter theta1 theta2; acts like op1 after op2 when the
/// two parameters share a slice.  Throws ConfigMismatchError on different
/// alpha or rule.
FrhtOperator compose(const FrhtOperator& op1, const FrhtOperator& op2);

/// |<L f, L g> - <f,g>| on the spectral path; requires |theta| = 1.
double verify_plancherel(const FrhtOperator& op, const CoeffVector& f, const CoeffVector& g);

/// Reference Fourier-Bessel (Hankel) integral
///   (H_alpha psi)(y) = int_0^umax u J_alpha(y u) psi(u) du
/// with psi sampled on the uniform grid u_i = i step and Simpson weights
/// (sample count must be odd).  Truncation error is negligible for the
/// intended psi ~ e^{-u^2/2} profiles once step*count reaches ~40: the
/// integrand tail beyond is below 1e-300.  J values deep in the tail carry
/// only envelope-level accuracy, which the Gaussian damping suppresses.
double hankel_reference(std::span<const double> psi, double step, double alpha, double y);

} // namespace qfht
