#pragma once

#include <memory>
#include <vector>

#include "qfht/hilbert.hpp"
#include "qfht/quaternion.hpp"

namespace qfht {

/// Slice regular power series f(q) = sum_n q^n c_n on the unit ball,
/// stored by its quaternion coefficients (the primary representation;
/// pointwise evaluation is a utility).
struct SliceRegularSeries {
    std::vector<Quaternion> coeffs;

    int size() const { return static_cast<int>(coeffs.size()); }
};

/// Product rule for the Bergman measure (1-|z|^2)^{alpha-1} dx dy on a slice
/// disc: radial Gauss-Jacobi nodes r_k in (0,1) with weights v_k such that
///   sum_k v_k g(r_k^2) = int_0^1 g(r^2) (1-r^2)^{alpha-1} r dr
/// exactly for polynomial g of degree <= 2 radial_count - 1, plus
/// angular_count uniform angles of weight 2 pi / angular_count.
struct DiscQuadratureRule {
    double alpha = 0.0;
    std::vector<double> radial_nodes;   // r_k
    std::vector<double> radial_weights; // v_k
    int angular_count = 0;

    int radial_count() const { return static_cast<int>(radial_nodes.size()); }
};

using DiscRulePtr = std::shared_ptr<const DiscQuadratureRule>;

DiscRulePtr build_disc_rule(double alpha, int radial = 64, int angular = 256);

/// Point of the open unit ball of the quaternions.
struct BallPoint {
    Quaternion q;

    explicit BallPoint(const Quaternion& p);
};

/// Kernel of the second Bargmann transform,
///   A(x; q) = (pi Gamma(alpha))^{-1/2} (1-q)^{-alpha-1} exp(x q / (q-1)),
/// evaluated in the slice of q with the principal power of (1-q); 1-q keeps
/// a positive real part on the ball, so the branch is smooth.
Quaternion bargmann_kernel(double x, const BallPoint& q, double alpha);

/// f(q) = c_0 + q (c_1 + q (c_2 + ...)) -- powers of q multiply on the left.
Quaternion eval_series(const SliceRegularSeries& f, const BallPoint& q);

/// Forward transform in coefficient form: the q^n coefficient of A f is
///   sqrt(Gamma(n+alpha+1) / (pi Gamma(alpha) n!)) <phi_n, f>_alpha,
/// because A maps phi_n to the normalized monomial f_n.
SliceRegularSeries bargmann_forward(const RadialSignal& f, int n_max);

/// Inverse transform: the disc-rule evaluation of the Bergman integral of
/// the conjugated Bargmann kernel against F over the slice disc of `unit`.
/// The kernel enters through its Laguerre expansion truncated at F's band,
/// which the rule integrates exactly; harmonics beyond the band would alias
/// under any finite angular rule and are exactly zero against F anyway.
/// Throws ExactnessError if F's band exceeds the rule's exactness bound.
RadialSignal bargmann_inverse(const SliceRegularSeries& F, RulePtr rule,
                              const DiscQuadratureRule& disc, const ImaginaryUnit& unit);

/// Cauchy product of coefficient sequences, order a_k b_{n-k} preserved.
SliceRegularSeries star_product(const SliceRegularSeries& f, const SliceRegularSeries& g);

/// Gamma_theta action: coefficient n becomes theta^n c_n (theta^n on the
/// left).  Requires |theta| <= 1, else the Bergman space is left.
SliceRegularSeries gamma_action(const SliceRegularSeries& F, const Quaternion& theta);

/// <F,G>_I = int_{B_I} conj(F(z)) G(z) (1-|z|^2)^{alpha-1} dx dy by the
/// disc rule; conjugate on the left.  Throws ExactnessError when the
/// coefficient counts exceed the rule's exactness bound.
Quaternion bergman_inner(const SliceRegularSeries& F, const SliceRegularSeries& G,
                         const DiscQuadratureRule& disc, const ImaginaryUnit& unit);

/// Coefficient-level norm sqrt(sum_n n!/Gamma(alpha+n+1) |c_n|^2).
double bergman_norm(const SliceRegularSeries& F, double alpha);

/// The composed transform A^{-1} Gamma_theta A, evaluated over the slice
/// disc of theta's own unit.  Requires |theta| <= 1.
RadialSignal frht_via_bargmann(const RadialSignal& f, const Quaternion& theta,
                               const DiscQuadratureRule& disc, int n_max);

/// Kernel of the composed transform as a Bergman pairing,
///   R(x,y) = int conj(A(y; z)) A(x; z theta) dlambda(z)
/// over the slice disc of I_theta (theta must lie in the slice of `unit`).
/// An independent numerical route to the closed kernel form.
Quaternion kernel_via_bergman(const Quaternion& theta, double alpha, double x, double y,
                              const DiscQuadratureRule& disc, const ImaginaryUnit& unit);

} // namespace qfht
