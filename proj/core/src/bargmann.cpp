#include "qfht/bargmann.hpp"

#include <cmath>
#include <complex>

#include "qfht/errors.hpp"
#include "qfht/specfun.hpp"
#include "golub_welsch.hpp"

namespace qfht {

namespace {

constexpr double pi = 3.14159265358979323846;

// (pi Gamma(alpha))^{-1/2} (1-q)^{-alpha-1} exp(x q/(q-1)) in slice coordinates.
std::complex<double> kernel_slice(double x, std::complex<double> q, double alpha) {
    const std::complex<double> om = 1.0 - q;
    const double pref = std::exp(-0.5 * (std::log(pi) + ln_gamma(alpha)));
    return pref * std::exp(-(alpha + 1.0) * std::log(om) - x * q / om);
}

// Coordinates of theta in the slice spanned by {1, unit}; the imaginary
// coordinate is signed against the supplied unit.
std::complex<double> coords_in_slice(const Quaternion& theta, const ImaginaryUnit& unit,
                                     const char* who) {
    const double b = theta.x * unit.u.x + theta.y * unit.u.y + theta.z * unit.u.z;
    const Quaternion residual = theta - Quaternion{theta.w, 0, 0, 0} - b * unit.u;
    if (norm(residual) > 1e-12 * std::max(1.0, norm(theta)))
        throw DomainError(std::string(who) + ": theta does not lie in the slice of the unit");
    return {theta.w, b};
}

void check_exactness(int band, const DiscQuadratureRule& disc, const char* who) {
    const int bound = std::min(2 * disc.radial_count(), disc.angular_count);
    if (band > bound)
        throw ExactnessError(std::string(who) + ": coefficient count exceeds the disc rule bound");
}

} // namespace

DiscRulePtr build_disc_rule(double alpha, int radial, int angular) {
    if (!(alpha > 0.0)) throw DomainError("build_disc_rule: requires alpha > 0");
    if (radial < 1 || angular < 1)
        throw DomainError("build_disc_rule: requires positive node counts");

    // Gauss-Jacobi on [-1,1] with weight (1-xi)^{alpha-1}, mapped to u = (1+xi)/2,
    // u = r^2:   int_0^1 g(u) (1-u)^{alpha-1} du / 2  =  sum_k v_k g(u_k).
    const double a = alpha - 1.0, b = 0.0;
    std::vector<double> diag(static_cast<size_t>(radial)), offdiag;
    diag[0] = (b - a) / (a + b + 2.0);
    for (int n = 1; n < radial; ++n) {
        const double s = 2.0 * n + a + b;
        diag[static_cast<size_t>(n)] = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int n = 1; n < radial; ++n) {
        const double s = 2.0 * n + a + b;
        double beta;
        if (n == 1)
            beta = 4.0 * (a + 1.0) * (b + 1.0) /
                   ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
        else
            beta = 4.0 * n * (n + a) * (n + b) * (n + a + b) /
                   (s * s * (s + 1.0) * (s - 1.0));
        offdiag.push_back(std::sqrt(beta));
    }
    const double mu0 =
        std::exp((a + b + 1.0) * std::log(2.0) + ln_gamma(a + 1.0) + ln_gamma(b + 1.0) -
                 ln_gamma(a + b + 2.0));

    auto [xi, w] = detail::golub_welsch(diag, offdiag, mu0);
    auto rule = std::make_shared<DiscQuadratureRule>();
    rule->alpha = alpha;
    rule->angular_count = angular;
    rule->radial_nodes.resize(xi.size());
    rule->radial_weights.resize(xi.size());
    const double scale = std::pow(2.0, -alpha - 1.0); // substitution Jacobians
    for (size_t k = 0; k < xi.size(); ++k) {
        const double u = 0.5 * (1.0 + xi[k]);
        rule->radial_nodes[k] = std::sqrt(u);
        rule->radial_weights[k] = scale * w[k];
    }
    return rule;
}

BallPoint::BallPoint(const Quaternion& p) : q(p) {
    if (!(norm(p) < 1.0)) throw DomainError("BallPoint: requires |q| < 1");
}

Quaternion bargmann_kernel(double x, const BallPoint& q, double alpha) {
    if (!(x > 0.0)) throw DomainError("bargmann_kernel: requires x > 0");
    if (!(alpha > 0.0)) throw DomainError("bargmann_kernel: requires alpha > 0");
    const SliceForm s = slice_decompose(q.q);
    return embed(kernel_slice(x, slice_complex(q.q), alpha), s.unit);
}

Quaternion eval_series(const SliceRegularSeries& f, const BallPoint& q) {
    Quaternion acc;
    for (int n = f.size() - 1; n >= 0; --n)
        acc = q.q * acc + f.coeffs[static_cast<size_t>(n)];
    return acc;
}

SliceRegularSeries bargmann_forward(const RadialSignal& f, int n_max) {
    if (!f.rule) throw RuleMismatchError("bargmann_forward: signal has no rule");
    const double alpha = f.rule->alpha;
    const CoeffVector c = analyze(f, n_max);
    SliceRegularSeries out;
    out.coeffs.reserve(c.c.size());
    for (int n = 0; n <= n_max; ++n) {
        const double scale =
            std::exp(0.5 * (ln_gamma(n + alpha + 1.0) - std::log(pi) - ln_gamma(alpha) -
                            ln_gamma(n + 1.0)));
        out.coeffs.push_back(scale * c.c[static_cast<size_t>(n)]);
    }
    return out;
}

RadialSignal bargmann_inverse(const SliceRegularSeries& F, RulePtr rule,
                              const DiscQuadratureRule& disc, const ImaginaryUnit& unit) {
    if (!rule) throw RuleMismatchError("bargmann_inverse: null rule");
    if (rule->alpha != disc.alpha)
        throw ConfigMismatchError("bargmann_inverse: rule and disc alpha differ");
    RadialSignal out = zero_signal(rule);
    if (F.size() == 0) return out;
    check_exactness(F.size(), disc, "bargmann_inverse");

    const double alpha = disc.alpha;
    const int band = F.size(); // kernel harmonics 0..band-1
    const int t_count = disc.angular_count;

    // G_j = sum_{k,m} v_k (2pi/T) conj(z)^j F(z_{km}):  the disc integral of
    // each kernel harmonic against F, gathered once for all output nodes.
    std::vector<Quaternion> g(static_cast<size_t>(band));
    for (int k = 0; k < disc.radial_count(); ++k) {
        const double r = disc.radial_nodes[static_cast<size_t>(k)];
        const double wk = disc.radial_weights[static_cast<size_t>(k)] * (2.0 * pi / t_count);
        for (int m = 0; m < t_count; ++m) {
            const double t = 2.0 * pi * m / t_count;
            const std::complex<double> z{r * std::cos(t), r * std::sin(t)};
            const Quaternion fz = eval_series(F, BallPoint(embed(z, unit)));
            std::complex<double> zbar_pow{1.0, 0.0};
            for (int jj = 0; jj < band; ++jj) {
                g[static_cast<size_t>(jj)] =
                    g[static_cast<size_t>(jj)] + wk * (embed(zbar_pow, unit) * fz);
                zbar_pow *= std::conj(z);
            }
        }
    }

    const double pref = std::exp(-0.5 * (std::log(pi) + ln_gamma(alpha)));
    for (int i = 0; i < rule->count(); ++i) {
        const double x = rule->nodes[static_cast<size_t>(i)];
        double lm1 = 0.0, l = 1.0; // L_j^{(alpha)}(x) recurrence
        Quaternion acc;
        for (int jj = 0; jj < band; ++jj) {
            acc = acc + l * g[static_cast<size_t>(jj)];
            const double lp1 = ((2.0 * jj + 1.0 + alpha - x) * l - (jj + alpha) * lm1) / (jj + 1.0);
            lm1 = l;
            l = lp1;
        }
        out.values[static_cast<size_t>(i)] = pref * acc;
    }
    return out;
}

SliceRegularSeries star_product(const SliceRegularSeries& f, const SliceRegularSeries& g) {
    SliceRegularSeries out;
    if (f.size() == 0 || g.size() == 0) return out;
    out.coeffs.assign(static_cast<size_t>(f.size() + g.size() - 1), Quaternion{});
    for (int a = 0; a < f.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            out.coeffs[static_cast<size_t>(a + b)] =
                out.coeffs[static_cast<size_t>(a + b)] +
                f.coeffs[static_cast<size_t>(a)] * g.coeffs[static_cast<size_t>(b)];
    return out;
}

SliceRegularSeries gamma_action(const SliceRegularSeries& F, const Quaternion& theta) {
    if (norm(theta) > 1.0 + 1e-12)
        throw DomainError("gamma_action: requires |theta| <= 1 to stay in the Bergman space");
    SliceRegularSeries out;
    out.coeffs.reserve(F.coeffs.size());
    for (int n = 0; n < F.size(); ++n)
        out.coeffs.push_back(slice_power(theta, n) * F.coeffs[static_cast<size_t>(n)]);
    return out;
}

Quaternion bergman_inner(const SliceRegularSeries& F, const SliceRegularSeries& G,
                         const DiscQuadratureRule& disc, const ImaginaryUnit& unit) {
    check_exactness(std::max(F.size(), G.size()), disc, "bergman_inner");
    const int t_count = disc.angular_count;
    Quaternion acc;
    for (int k = 0; k < disc.radial_count(); ++k) {
        const double r = disc.radial_nodes[static_cast<size_t>(k)];
        const double wk = disc.radial_weights[static_cast<size_t>(k)] * (2.0 * pi / t_count);
        for (int m = 0; m < t_count; ++m) {
            const double t = 2.0 * pi * m / t_count;
            const BallPoint z(embed({r * std::cos(t), r * std::sin(t)}, unit));
            acc = acc + wk * (conj(eval_series(F, z)) * eval_series(G, z));
        }
    }
    return acc;
}

double bergman_norm(const SliceRegularSeries& F, double alpha) {
    // <q^n, q^n> = pi n! Gamma(alpha) / Gamma(n+alpha+1) under the Bergman measure
    double s = 0.0;
    for (int n = 0; n < F.size(); ++n)
        s += std::exp(ln_gamma(n + 1.0) - ln_gamma(alpha + n + 1.0)) *
             norm_sq(F.coeffs[static_cast<size_t>(n)]);
    return std::sqrt(pi * std::exp(ln_gamma(alpha)) * s);
}

RadialSignal frht_via_bargmann(const RadialSignal& f, const Quaternion& theta,
                               const DiscQuadratureRule& disc, int n_max) {
    if (!f.rule) throw RuleMismatchError("frht_via_bargmann: signal has no rule");
    if (norm(theta) > 1.0 + 1e-12)
        throw DomainError("frht_via_bargmann: requires |theta| <= 1");
    const ImaginaryUnit unit = slice_decompose(theta).unit;
    const SliceRegularSeries forward = bargmann_forward(f, n_max);
    const SliceRegularSeries rotated = gamma_action(forward, theta);
    return bargmann_inverse(rotated, f.rule, disc, unit);
}

Quaternion kernel_via_bergman(const Quaternion& theta, double alpha, double x, double y,
                              const DiscQuadratureRule& disc, const ImaginaryUnit& unit) {
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("kernel_via_bergman: requires x, y > 0");
    if (alpha != disc.alpha)
        throw ConfigMismatchError("kernel_via_bergman: alpha differs from the disc rule");
    if (norm(theta) > 1.0 + 1e-12)
        throw DomainError("kernel_via_bergman: requires |theta| <= 1");
    if (is_real(theta) && theta.w == 1.0)
        throw DomainError("kernel_via_bergman: theta = 1 is the identity/Dirac regime");
    const std::complex<double> t = coords_in_slice(theta, unit, "kernel_via_bergman");

    // Pair the Laguerre expansions of Gamma_theta A(x; .) and A(y; .) under
    // the disc rule, both truncated at the rule's exactness band (an
    // untruncated kernel would alias its harmonics >= angular_count into
    // the result).  The uniform angular rule integrates the surviving
    // diagonal terms exactly, leaving the numerical radial moments
    //   mu_n = 2 pi sum_k v_k r_k^{2n}
    // against theta^n L_n(x) L_n(y) / (pi Gamma(alpha)).
    const int band = std::min(2 * disc.radial_count() - 1, disc.angular_count - 1);
    std::vector<double> mu(static_cast<size_t>(band) + 1, 0.0);
    for (int k = 0; k < disc.radial_count(); ++k) {
        const double u = disc.radial_nodes[static_cast<size_t>(k)] *
                         disc.radial_nodes[static_cast<size_t>(k)];
        double upow = 2.0 * pi * disc.radial_weights[static_cast<size_t>(k)];
        for (int n = 0; n <= band; ++n) {
            mu[static_cast<size_t>(n)] += upow;
            upow *= u;
        }
    }

    const double pref = 1.0 / (pi * std::exp(ln_gamma(alpha)));
    std::complex<double> acc = 0.0, tpow = 1.0;
    double lxm = 0.0, lx = 1.0, lym = 0.0, ly = 1.0; // L_n(x), L_n(y) recurrences
    for (int n = 0; n <= band; ++n) {
        acc += mu[static_cast<size_t>(n)] * tpow * (lx * ly);
        tpow *= t;
        const double lxp = ((2.0 * n + 1.0 + alpha - x) * lx - (n + alpha) * lxm) / (n + 1.0);
        lxm = lx;
        lx = lxp;
        const double lyp = ((2.0 * n + 1.0 + alpha - y) * ly - (n + alpha) * lym) / (n + 1.0);
        lym = ly;
        ly = lyp;
    }
    return embed(pref * acc, unit);
}

} // namespace qfht
