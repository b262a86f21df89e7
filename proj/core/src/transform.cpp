#include "qfht/transform.hpp"

#include <cmath>

#include "qfht/errors.hpp"
#include "qfht/specfun.hpp"

namespace qfht {

namespace {

bool is_one(const Quaternion& theta) { return is_real(theta) && theta.w == 1.0; }

} // namespace

FrhtOperator::FrhtOperator(Quaternion theta, RulePtr rule, KernelConfig cfg)
    : theta_(theta), rule_(std::move(rule)), cfg_(cfg) {
    if (!rule_) throw ConfigMismatchError("FrhtOperator: null rule");
    if (cfg_.alpha != rule_->alpha)
        throw ConfigMismatchError("FrhtOperator: config alpha differs from rule alpha");
}

FrhtOperator::FrhtOperator(Quaternion theta, RulePtr rule)
    : FrhtOperator(theta, rule, KernelConfig(rule ? rule->alpha : 1.0)) {}

CoeffVector frht_spectral(const CoeffVector& c, const Quaternion& theta) {
    if (is_one(theta)) return c;
    CoeffVector out;
    out.c.reserve(c.c.size());
    for (int n = 0; n < c.size(); ++n)
        out.c.push_back(slice_power(theta, n) * c.c[static_cast<size_t>(n)]);
    return out;
}

namespace {

// One quadrature term w_i R_theta(x_i, y) f_i, with the weight folded into
// the kernel's log form before exponentiating: near |theta| = 1 the kernel
// grows like e^{(x+y)/2} and can overflow on its own even though the
// weighted term is representable.
Quaternion weighted_kernel_term(std::complex<double> t, double log_w, double x, double y,
                                double alpha, const ImaginaryUnit& unit, const Quaternion& fi) {
    const std::complex<double> lw = detail::log_r_closed_slice(t, x, y, alpha) + log_w;
    return embed(std::exp(lw), unit) * fi;
}

} // namespace

RadialSignal frht_quadrature(const RadialSignal& f, const FrhtOperator& op) {
    if (!f.rule || !compatible_rules(*f.rule, *op.rule()))
        throw RuleMismatchError("frht_quadrature: signal not tied to the operator rule");
    if (is_one(op.theta())) return f;
    if (norm(op.theta()) > 1.0 + 1e-12)
        throw DomainError("frht_quadrature: kernel path requires |theta| <= 1");

    const GaussLaguerreRule& rule = *op.rule();
    const SliceForm s = slice_decompose(op.theta());
    const std::complex<double> t = slice_complex(op.theta());
    const int m = rule.count();

    std::vector<double> log_w(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) log_w[static_cast<size_t>(i)] = std::log(rule.weights[static_cast<size_t>(i)]);

    RadialSignal out = zero_signal(f.rule);
    for (int jj = 0; jj < m; ++jj) {
        const double yj = rule.nodes[static_cast<size_t>(jj)];
        Quaternion acc;
        for (int i = 0; i < m; ++i) {
            if (rule.weights[static_cast<size_t>(i)] == 0.0) continue; // beyond the measure's support
            acc = acc + weighted_kernel_term(t, log_w[static_cast<size_t>(i)],
                                             rule.nodes[static_cast<size_t>(i)], yj, op.alpha(),
                                             s.unit, f.values[static_cast<size_t>(i)]);
        }
        out.values[static_cast<size_t>(jj)] = acc;
    }
    return out;
}

Quaternion frht_apply_at(const RadialSignal& f, const FrhtOperator& op, double y) {
    if (!f.rule || !compatible_rules(*f.rule, *op.rule()))
        throw RuleMismatchError("frht_apply_at: signal not tied to the operator rule");
    if (!(y > 0.0)) throw DomainError("frht_apply_at: requires y > 0");
    if (is_one(op.theta()))
        throw DomainError("frht_apply_at: theta = 1 has no kernel; use the signal itself");
    if (norm(op.theta()) > 1.0 + 1e-12)
        throw DomainError("frht_apply_at: kernel path requires |theta| <= 1");

    const GaussLaguerreRule& rule = *op.rule();
    const SliceForm s = slice_decompose(op.theta());
    const std::complex<double> t = slice_complex(op.theta());
    Quaternion acc;
    for (int i = 0; i < rule.count(); ++i) {
        const double w = rule.weights[static_cast<size_t>(i)];
        if (w == 0.0) continue;
        acc = acc + weighted_kernel_term(t, std::log(w), rule.nodes[static_cast<size_t>(i)], y,
                                         op.alpha(), s.unit, f.values[static_cast<size_t>(i)]);
    }
    return acc;
}

FrhtOperator frht_inverse(const FrhtOperator& op) {
    if (norm_sq(op.theta()) == 0.0)
        throw DomainError("frht_inverse: theta = 0 is not invertible");
    return FrhtOperator(q_inverse(op.theta()), op.rule(), op.config());
}

FrhtOperator compose(const FrhtOperator& op1, const FrhtOperator& op2) {
    if (op1.alpha() != op2.alpha())
        throw ConfigMismatchError("compose: operators have different alpha");
    if (!compatible_rules(*op1.rule(), *op2.rule()))
        throw ConfigMismatchError("compose: operators tied to different rules");
    return FrhtOperator(op1.theta() * op2.theta(), op1.rule(), op1.config());
}

double verify_plancherel(const FrhtOperator& op, const CoeffVector& f, const CoeffVector& g) {
    if (std::abs(norm(op.theta()) - 1.0) > 1e-12)
        throw DomainError("verify_plancherel: requires |theta| = 1");
    const CoeffVector lf = frht_spectral(f, op.theta());
    const CoeffVector lg = frht_spectral(g, op.theta());
    const int n = std::min(f.size(), g.size());
    Quaternion before, after;
    for (int i = 0; i < n; ++i) {
        before = before + conj(f.c[static_cast<size_t>(i)]) * g.c[static_cast<size_t>(i)];
        after = after + conj(lf.c[static_cast<size_t>(i)]) * lg.c[static_cast<size_t>(i)];
    }
    return norm(after - before);
}

double hankel_reference(std::span<const double> psi, double step, double alpha, double y) {
    if (!(step > 0.0)) throw DomainError("hankel_reference: requires step > 0");
    if (!(y >= 0.0)) throw DomainError("hankel_reference: requires y >= 0");
    const size_t n = psi.size();
    if (n < 3 || n % 2 == 0)
        throw DomainError("hankel_reference: Simpson weights need an odd sample count >= 3");
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) * step;
        if (psi[i] == 0.0) continue;
        const double simpson = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc += simpson * u * bessel_j(alpha, y * u) * psi[i];
    }
    return acc * step / 3.0;
}

} // namespace qfht
