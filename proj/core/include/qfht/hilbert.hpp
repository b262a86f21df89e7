#pragma once

#include <memory>
#include <vector>

#include "qfht/quaternion.hpp"

namespace qfht {

/// Gauss-Laguerre rule for the weighted half-line measure x^alpha e^{-x} dx:
///   sum_i w_i p(x_i) = int_0^inf p(x) x^alpha e^{-x} dx
/// exactly for polynomials of degree <= 2 count - 1.  Nodes ascending.
struct GaussLaguerreRule {
    double alpha = 0.0;
    std::vector<double> nodes;
    std::vector<double> weights;

    int count() const { return static_cast<int>(nodes.size()); }
};

using RulePtr = std::shared_ptr<const GaussLaguerreRule>;

/// Golub-Welsch construction from the Laguerre Jacobi matrix.
/// alpha > 0, 1 <= m <= 512.  Throws NumericalError if the symmetric
/// tridiagonal eigensolve fails.
RulePtr build_rule(double alpha, int m);

/// Orthonormal basis element phi_n^alpha(x) = sqrt(n!/Gamma(alpha+n+1)) L_n^{(alpha)}(x).
double phi(int n, double alpha, double x);

/// phi_0..phi_n at one point (shared recurrence sweep).
std::vector<double> phi_row(int n_max, double alpha, double x);

/// Coefficients c_n of a signal in the phi_n basis; the spectral side.
struct CoeffVector {
    std::vector<Quaternion> c;

    int size() const { return static_cast<int>(c.size()); }
    /// l2 norm sqrt(sum |c_n|^2); equals the L^{2,alpha} norm by Parseval.
    double norm() const;
};

/// Quaternion-valued samples at the nodes of one rule.  Signals are tied
/// to their rule; operations across different rules are rejected.
struct RadialSignal {
    RulePtr rule;
    std::vector<Quaternion> values;
};

RadialSignal make_signal(RulePtr rule, std::vector<Quaternion> values);
RadialSignal zero_signal(RulePtr rule);

bool compatible_rules(const GaussLaguerreRule& a, const GaussLaguerreRule& b);

/// <f,g>_alpha = sum_i w_i conj(f_i) g_i  (conjugate on the left argument,
/// quaternion order preserved).  Throws RuleMismatchError.
Quaternion inner_product(const RadialSignal& f, const RadialSignal& g);

/// sqrt(Re <f,f>).
double norm_alpha(const RadialSignal& f);

/// c_n = <phi_n, f>_alpha for n = 0..n_max.  Requires n_max < rule count.
CoeffVector analyze(const RadialSignal& f, int n_max);

/// values_i = sum_n phi_n(x_i) c_n.
RadialSignal synthesize(const CoeffVector& c, RulePtr rule);

} // namespace qfht
