#include "qfht/hilbert.hpp"

#include <cmath>

#include "qfht/errors.hpp"
#include "qfht/specfun.hpp"
#include "golub_welsch.hpp"

namespace qfht {

RulePtr build_rule(double alpha, int m) {
    if (!(alpha > 0.0)) throw DomainError("build_rule: requires alpha > 0");
    if (m < 1 || m > 512) throw DomainError("build_rule: requires 1 <= m <= 512");

    // Laguerre recurrence: diag_k = 2k + alpha + 1, offdiag_k = sqrt(k (k+alpha)).
    std::vector<double> diag(static_cast<size_t>(m)), offdiag;
    for (int k = 0; k < m; ++k) diag[static_cast<size_t>(k)] = 2.0 * k + alpha + 1.0;
    for (int k = 1; k < m; ++k) offdiag.push_back(std::sqrt(k * (k + alpha)));
    const double mu0 = std::exp(ln_gamma(alpha + 1.0));

    auto [nodes, weights] = detail::golub_welsch(diag, offdiag, mu0);

    // The eigenvalues locate the nodes to absolute precision only, and the
    // eigenvector route loses all relative accuracy on the exponentially
    // small tail weights.  Polish each node with Newton on phi_m and take
    // the weight from the Christoffel function 1 / sum_k phi_k(x)^2.  The
    // recurrence runs on the damped functions phi_k e^{-x/2}, which stay
    // bounded where plain phi_k would overflow, and the weight is assembled
    // in log form:  w = exp(-x - log sum_k (phi_k e^{-x/2})^2).
    const auto damped_row = [alpha](int n_max, double x) {
        // orthonormal recurrence on phi_k e^{-x/2}: every entry stays bounded
        std::vector<double> row(static_cast<size_t>(n_max) + 1);
        row[0] = std::exp(-0.5 * (std::lgamma(alpha + 1.0) + x));
        if (n_max >= 1) row[1] = (1.0 + alpha - x) / std::sqrt(alpha + 1.0) * row[0];
        for (int n = 1; n < n_max; ++n) {
            const double bn = std::sqrt(n * (n + alpha));
            const double bn1 = std::sqrt((n + 1.0) * (n + 1.0 + alpha));
            row[static_cast<size_t>(n) + 1] =
                ((2.0 * n + 1.0 + alpha - x) * row[static_cast<size_t>(n)] -
                 bn * row[static_cast<size_t>(n) - 1]) / bn1;
        }
        return row;
    };

    for (int i = 0; i < m; ++i) {
        double x = nodes[static_cast<size_t>(i)];
        if (std::exp(-0.5 * x) == 0.0) {
            // the true weight is far below the subnormal range
            weights[static_cast<size_t>(i)] = 0.0;
            continue;
        }
        for (int it = 0; it < 12; ++it) {
            const std::vector<double> row = damped_row(m, x);
            const double pm = row[static_cast<size_t>(m)];
            const double scaled_deriv =
                (m * pm - std::sqrt(m * (m + alpha)) * row[static_cast<size_t>(m - 1)]) / x;
            if (scaled_deriv == 0.0) break;
            const double dx = pm / scaled_deriv; // common e^{-x/2} factor cancels
            x -= dx;
            if (std::abs(dx) < 1e-15 * (1.0 + std::abs(x))) break;
        }
        const std::vector<double> row = damped_row(m - 1, x);
        double christoffel = 0.0;
        for (int k = 0; k < m; ++k)
            christoffel += row[static_cast<size_t>(k)] * row[static_cast<size_t>(k)];
        nodes[static_cast<size_t>(i)] = x;
        weights[static_cast<size_t>(i)] = std::exp(-x - std::log(christoffel));
    }

    auto rule = std::make_shared<GaussLaguerreRule>();
    rule->alpha = alpha;
    rule->nodes = std::move(nodes);
    rule->weights = std::move(weights);
    return rule;
}

double phi(int n, double alpha, double x) {
    const double lognorm = 0.5 * (ln_gamma(n + 1.0) - ln_gamma(alpha + n + 1.0));
    return std::exp(lognorm) * laguerre(n, alpha, x);
}

std::vector<double> phi_row(int n_max, double alpha, double x) {
    if (n_max < 0) throw DomainError("phi_row: requires n_max >= 0");
    std::vector<double> row(static_cast<size_t>(n_max) + 1);
    row[0] = std::exp(-0.5 * ln_gamma(alpha + 1.0));
    if (n_max >= 1) row[1] = (1.0 + alpha - x) / std::sqrt(alpha + 1.0) * row[0];
    for (int n = 1; n < n_max; ++n) {
        const double bn = std::sqrt(n * (n + alpha));
        const double bn1 = std::sqrt((n + 1.0) * (n + 1.0 + alpha));
        row[static_cast<size_t>(n) + 1] =
            ((2.0 * n + 1.0 + alpha - x) * row[static_cast<size_t>(n)] -
             bn * row[static_cast<size_t>(n) - 1]) / bn1;
    }
    return row;
}

double CoeffVector::norm() const {
    double s = 0.0;
    for (const Quaternion& q : c) s += norm_sq(q);
    return std::sqrt(s);
}

RadialSignal make_signal(RulePtr rule, std::vector<Quaternion> values) {
    if (!rule) throw RuleMismatchError("make_signal: null rule");
    if (static_cast<int>(values.size()) != rule->count())
        throw RuleMismatchError("make_signal: values length differs from rule size");
    return RadialSignal{std::move(rule), std::move(values)};
}

RadialSignal zero_signal(RulePtr rule) {
    if (!rule) throw RuleMismatchError("zero_signal: null rule");
    return RadialSignal{rule, std::vector<Quaternion>(static_cast<size_t>(rule->count()))};
}

bool compatible_rules(const GaussLaguerreRule& a, const GaussLaguerreRule& b) {
    if (&a == &b) return true;
    return a.alpha == b.alpha && a.nodes == b.nodes && a.weights == b.weights;
}

Quaternion inner_product(const RadialSignal& f, const RadialSignal& g) {
    if (!f.rule || !g.rule || !compatible_rules(*f.rule, *g.rule))
        throw RuleMismatchError("inner_product: signals tied to different rules");
    Quaternion acc;
    for (int i = 0; i < f.rule->count(); ++i) {
        const double w = f.rule->weights[static_cast<size_t>(i)];
        if (w == 0.0) continue; // underflowed far-tail weight: no contribution
        acc = acc + w * (conj(f.values[static_cast<size_t>(i)]) * g.values[static_cast<size_t>(i)]);
    }
    return acc;
}

double norm_alpha(const RadialSignal& f) {
    const double n2 = inner_product(f, f).w;
    if (std::isnan(n2)) return n2; // do not mask non-finite signals
    return std::sqrt(std::max(0.0, n2));
}

CoeffVector analyze(const RadialSignal& f, int n_max) {
    if (!f.rule) throw RuleMismatchError("analyze: signal has no rule");
    if (n_max < 0 || n_max >= f.rule->count())
        throw RuleMismatchError("analyze: requires n_max < rule count");
    CoeffVector out;
    out.c.assign(static_cast<size_t>(n_max) + 1, Quaternion{});
    for (int i = 0; i < f.rule->count(); ++i) {
        const double w = f.rule->weights[static_cast<size_t>(i)];
        if (w == 0.0) continue;
        const std::vector<double> row = phi_row(n_max, f.rule->alpha, f.rule->nodes[static_cast<size_t>(i)]);
        const Quaternion wf = w * f.values[static_cast<size_t>(i)];
        for (int n = 0; n <= n_max; ++n)
            out.c[static_cast<size_t>(n)] = out.c[static_cast<size_t>(n)] + row[static_cast<size_t>(n)] * wf;
    }
    return out;
}

RadialSignal synthesize(const CoeffVector& c, RulePtr rule) {
    if (!rule) throw RuleMismatchError("synthesize: null rule");
    RadialSignal out = zero_signal(rule);
    if (c.c.empty()) return out;
    const int n_max = c.size() - 1;
    for (int i = 0; i < rule->count(); ++i) {
        const std::vector<double> row = phi_row(n_max, rule->alpha, rule->nodes[static_cast<size_t>(i)]);
        Quaternion acc;
        for (int n = 0; n <= n_max; ++n)
            acc = acc + row[static_cast<size_t>(n)] * c.c[static_cast<size_t>(n)];
        out.values[static_cast<size_t>(i)] = acc;
    }
    return out;
}

} // namespace qfht
