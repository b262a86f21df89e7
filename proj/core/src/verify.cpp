#include "qfht/verify.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "qfht/bargmann.hpp"
#include "qfht/hilbert.hpp"
#include "qfht/kernel.hpp"
#include "qfht/quaternion.hpp"
#include "qfht/specfun.hpp"
#include "qfht/transform.hpp"

namespace qfht {

namespace {

constexpr double pi = 3.14159265358979323846;

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    Quaternion quaternion(double scale = 1.0) {
        return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
                uniform(-scale, scale)};
    }

    ImaginaryUnit unit() {
        while (true) {
            const double x = uniform(-1, 1), y = uniform(-1, 1), z = uniform(-1, 1);
            const double n = std::sqrt(x * x + y * y + z * z);
            if (n > 0.1 && n <= 1.0) return ImaginaryUnit::from_vector(x / n, y / n, z / n);
        }
    }

    /// Random quaternion of given modulus (uniform angle, uniform slice unit).
    Quaternion with_modulus(double modulus) {
        const ImaginaryUnit u = unit();
        const double a = uniform(0.0, pi);
        return modulus * embed({std::cos(a), std::sin(a)}, u);
    }

    CoeffVector coeffs(int count, double scale = 1.0) {
        CoeffVector c;
        c.c.reserve(static_cast<size_t>(count));
        for (int n = 0; n < count; ++n) c.c.push_back(quaternion(scale));
        return c;
    }
};

PropertyResult gate(std::string name, double dev, double tol) {
    return {std::move(name), dev, tol, dev < tol, false};
}

PropertyResult info(std::string name, double dev) {
    return {std::move(name), dev, std::numeric_limits<double>::quiet_NaN(), true, true};
}

RadialSignal basis_signal(const RulePtr& rule, int n) {
    std::vector<Quaternion> values;
    values.reserve(static_cast<size_t>(rule->count()));
    for (int i = 0; i < rule->count(); ++i)
        values.push_back(phi(n, rule->alpha, rule->nodes[static_cast<size_t>(i)]));
    return make_signal(rule, std::move(values));
}

// --- criterion 1 -----------------------------------------------------------

PropertyResult orthonormality(const VerifyConfig& cfg) {
    double dev = 0.0;
    for (const double alpha : {0.5, 1.0, 2.5}) {
        const RulePtr rule = build_rule(alpha, cfg.rule_size);
        constexpr int top = 30;
        std::vector<std::vector<double>> rows;
        rows.reserve(static_cast<size_t>(rule->count()));
        for (int i = 0; i < rule->count(); ++i)
            rows.push_back(phi_row(top, alpha, rule->nodes[static_cast<size_t>(i)]));
        for (int n = 0; n <= top; ++n)
            for (int m = n; m <= top; ++m) {
                double g = 0.0;
                for (int i = 0; i < rule->count(); ++i)
                    g += rule->weights[static_cast<size_t>(i)] * rows[static_cast<size_t>(i)][static_cast<size_t>(n)] *
                         rows[static_cast<size_t>(i)][static_cast<size_t>(m)];
                dev = std::max(dev, std::abs(g - (n == m ? 1.0 : 0.0)));
            }
    }
    return gate("orthonormality", dev, 1e-10);
}

// --- criterion 2 -----------------------------------------------------------

PropertyResult eigenrelation_quadrature(const VerifyConfig& cfg) {
    const std::vector<Quaternion> thetas = {
        {0.5, 0, 0, 0},
        {0.9 * std::cos(pi / 3.0), 0, 0.9 * std::sin(pi / 3.0), 0},
        {0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0},
    };
    double dev = 0.0;
    for (const double alpha : {0.5, 1.0, 2.5}) {
        for (const Quaternion& theta : thetas) {
            // at |theta| = 1 the integrand reaches the marginal growth
            // e^{x/2} of Gauss-Laguerre and the defect norm needs the
            // larger rule to resolve; |theta| <= 0.9 converges well before
            // the default size
            const int m = (norm(theta) > 0.95) ? std::max(cfg.rule_size, 256) : cfg.rule_size;
            const RulePtr rule = build_rule(alpha, m);
            const FrhtOperator op(theta, rule);
            for (int n = 0; n <= 15; ++n) {
                const RadialSignal f = basis_signal(rule, n);
                const RadialSignal out = frht_quadrature(f, op);
                const Quaternion tn = slice_power(theta, n);
                RadialSignal expected = zero_signal(rule);
                for (int i = 0; i < rule->count(); ++i)
                    expected.values[static_cast<size_t>(i)] = tn * f.values[static_cast<size_t>(i)];
                RadialSignal diff = zero_signal(rule);
                for (int i = 0; i < rule->count(); ++i)
                    diff.values[static_cast<size_t>(i)] =
                        out.values[static_cast<size_t>(i)] - expected.values[static_cast<size_t>(i)];
                dev = std::max(dev, norm_alpha(diff) / norm_alpha(f));
            }
        }
    }
    return gate("eigenrelation-quadrature", dev, 1e-8);
}

// --- criterion 3 -----------------------------------------------------------

PropertyResult hille_hardy(const VerifyConfig&) {
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s3 = 1.0 / std::sqrt(3.0);
    // modulus reaches 0.9 along non-real and negative-real directions;
    // positive-real theta stays at 0.6: near +1 with x != y the kernel
    // itself collapses like e^{-theta(x+y)/(1-theta)} below the additive
    // noise floor of the alternating series, where no double-precision
    // route can certify a relative identity
    const std::vector<Quaternion> thetas = {
        {0.5, 0, 0, 0},
        {0.6, 0, 0, 0},
        {-0.9, 0, 0, 0},
        {0, 0.6, 0, 0},
        {0.3, 0, 0.4, 0},
        {0.9 * 0.5, 0, 0.9 * std::sqrt(3.0) / 2.0, 0},
        {0, 0.8 * s3, 0.8 * s3, 0.8 * s3},
        {0, 0, 0, -0.5},
        {0.9 * s2, 0.9 * s2, 0, 0},
    };
    double dev = 0.0;
    for (const double alpha : {0.5, 1.0, 2.0, 3.5}) {
        const KernelConfig kc(alpha);
        for (const Quaternion& theta : thetas)
            for (const double x : {0.1, 1.0, 5.0, 10.0})
                for (const double y : {0.1, 1.0, 5.0, 10.0}) {
                    const Quaternion series = r_series(theta, x, y, kc);
                    const Quaternion closed = r_closed(theta, x, y, kc);
                    dev = std::max(dev, norm(series - closed) / norm(closed));
                }
    }
    return gate("hille-hardy-equivalence", dev, 1e-9);
}

// --- criterion 4 -----------------------------------------------------------

double spectral_pairing_deviation(const Quaternion& theta, const CoeffVector& f,
                                  const CoeffVector& g) {
    const CoeffVector lf = frht_spectral(f, theta);
    const CoeffVector lg = frht_spectral(g, theta);
    Quaternion before, after;
    for (size_t n = 0; n < f.c.size(); ++n) {
        before = before + conj(f.c[n]) * g.c[n];
        after = after + conj(lf.c[n]) * lg.c[n];
    }
    return norm(after - before);
}

void plancherel(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
    Rng rng(cfg.seed);
    double dev_norm = 0.0, dev_inner_slice = 0.0, dev_inner_general = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Quaternion theta = rng.with_modulus(1.0);
        const ImaginaryUnit iu = slice_decompose(theta).unit;

        const CoeffVector f = rng.coeffs(21);
        const CoeffVector lf = frht_spectral(f, theta);
        dev_norm = std::max(dev_norm, std::abs(lf.norm() - f.norm()));

        // coefficients confined to the slice of theta
        CoeffVector fs, gs;
        for (int n = 0; n <= 20; ++n) {
            fs.c.push_back(embed({rng.uniform(-1, 1), rng.uniform(-1, 1)}, iu));
            gs.c.push_back(embed({rng.uniform(-1, 1), rng.uniform(-1, 1)}, iu));
        }
        dev_inner_slice = std::max(dev_inner_slice, spectral_pairing_deviation(theta, fs, gs));

        const CoeffVector g = rng.coeffs(21);
        dev_inner_general = std::max(dev_inner_general, spectral_pairing_deviation(theta, f, g));
    }
    out.push_back(gate("plancherel-norm", dev_norm, 1e-12));
    out.push_back(gate("plancherel-inner-product-sameslice", dev_inner_slice, 1e-12));
    out.push_back(info("plancherel-inner-product-general", dev_inner_general));
}

// --- criterion 5 -----------------------------------------------------------

PropertyResult inversion(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 1);
    double dev = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double modulus = (trial % 2 == 0) ? 1.0 : 0.5;
        const Quaternion theta = rng.with_modulus(modulus);
        const CoeffVector c = rng.coeffs(21);
        const CoeffVector round = frht_spectral(frht_spectral(c, theta), q_inverse(theta));
        for (int n = 0; n <= 20; ++n)
            dev = std::max(dev, norm(round.c[static_cast<size_t>(n)] - c.c[static_cast<size_t>(n)]));
    }
    return gate("inversion", dev, 1e-10);
}

// --- criterion 6 -----------------------------------------------------------

void semigroup(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
    Rng rng(cfg.seed + 2);
    double dev = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const ImaginaryUnit iu = rng.unit();
        const double a1 = rng.uniform(0, pi), a2 = rng.uniform(0, pi);
        const Quaternion theta = rng.uniform(0.1, 1.0) * embed({std::cos(a1), std::sin(a1)}, iu);
        const Quaternion eta = rng.uniform(0.1, 1.0) * embed({std::cos(a2), std::sin(a2)}, iu);
        for (int n = 0; n <= 20; ++n) {
            const Quaternion lhs = slice_power(theta * eta, n);
            const Quaternion rhs = slice_power(theta, n) * slice_power(eta, n);
            dev = std::max(dev, norm(lhs - rhs));
        }
    }
    out.push_back(gate("semigroup-same-slice", dev, 1e-12));

    // cross-slice counterexample: theta = i/2, eta = j/2 at n = 2 gives
    // (theta eta)^2 = -1/16 while theta^2 eta^2 = +1/16.
    const Quaternion theta{0, 0.5, 0, 0}, eta{0, 0, 0.5, 0};
    const double witness =
        norm(slice_power(theta * eta, 2) - slice_power(theta, 2) * slice_power(eta, 2));
    out.push_back(gate("semigroup-cross-slice-witness", std::abs(witness - 0.125), 1e-15));
}

// --- criterion 7 -----------------------------------------------------------

PropertyResult fourier_bessel_limit(const VerifyConfig& cfg) {
    constexpr size_t samples = 40001; // uniform grid to u_max = 40, odd count
    constexpr double step = 1e-3;

    double dev = 0.0;
    for (const double alpha : {0.5, 1.0}) {
        const RulePtr rule = build_rule(alpha, cfg.rule_size);
        const FrhtOperator op({-1.0, 0, 0, 0}, rule);
        for (int which = 0; which < 2; ++which) {
            const auto test_fn = [&](double x) {
                return which == 0 ? std::exp(-0.5 * x) : phi(1, alpha, x);
            };
            std::vector<Quaternion> values;
            for (int i = 0; i < rule->count(); ++i)
                values.push_back(test_fn(rule->nodes[static_cast<size_t>(i)]));
            const RadialSignal sig = make_signal(rule, std::move(values));

            std::vector<double> psi(samples);
            for (size_t i = 0; i < samples; ++i) {
                const double u = static_cast<double>(i) * step;
                psi[i] = std::pow(u, alpha) * std::exp(-0.5 * u * u) * test_fn(u * u);
            }

            for (const double y : {0.1, 0.5, 1.0, 1.75, 2.5, 3.0}) {
                const Quaternion lhs = frht_apply_at(sig, op, y * y);
                const double rhs = std::exp(0.5 * y * y) * std::pow(y, -alpha) *
                                   hankel_reference(psi, step, alpha, y);
                dev = std::max(dev, norm(lhs - Quaternion{rhs, 0, 0, 0}));
            }
        }
    }
    return gate("fourier-bessel-limit", dev, 2e-6);
}

// --- criteria 8 and 9 ------------------------------------------------------

void bargmann_route(const VerifyConfig& cfg, std::vector<PropertyResult>& out) {
    const double alpha = 1.0;
    const RulePtr rule = build_rule(alpha, cfg.rule_size);
    const DiscRulePtr disc = build_disc_rule(alpha);
    Rng rng(cfg.seed + 3);

    double dev_iso = 0.0, dev_round = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const CoeffVector cf = rng.coeffs(11);
        const CoeffVector cg = rng.coeffs(11);
        const RadialSignal f = synthesize(cf, rule);
        const RadialSignal g = synthesize(cg, rule);

        const SliceRegularSeries af = bargmann_forward(f, 10);
        const SliceRegularSeries ag = bargmann_forward(g, 10);
        const Quaternion lhs = bergman_inner(af, ag, *disc, ImaginaryUnit::i());
        const Quaternion rhs = inner_product(f, g);
        dev_iso = std::max(dev_iso, norm(lhs - rhs));

        const RadialSignal back = bargmann_inverse(af, rule, *disc, ImaginaryUnit::i());
        RadialSignal diff = zero_signal(rule);
        for (int i = 0; i < rule->count(); ++i)
            diff.values[static_cast<size_t>(i)] =
                back.values[static_cast<size_t>(i)] - f.values[static_cast<size_t>(i)];
        dev_round = std::max(dev_round, norm_alpha(diff));
    }
    out.push_back(gate("bargmann-isometry", dev_iso, 1e-7));
    out.push_back(gate("bargmann-roundtrip", dev_round, 1e-6));

    // slice independence (and orthonormality) of the Bergman pairing on
    // normalized monomial pairs, two genuinely different units
    const ImaginaryUnit u1 = ImaginaryUnit::i();
    const ImaginaryUnit u2 = ImaginaryUnit::from_vector(0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    double dev_slice = 0.0, dev_ortho = 0.0;
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 10; ++m) {
            SliceRegularSeries fn, fm;
            fn.coeffs.assign(static_cast<size_t>(n) + 1, Quaternion{});
            fm.coeffs.assign(static_cast<size_t>(m) + 1, Quaternion{});
            const auto monomial_coeff = [&](int k) {
                return std::exp(0.5 * (ln_gamma(k + alpha + 1.0) - std::log(pi) -
                                       ln_gamma(alpha) - ln_gamma(k + 1.0)));
            };
            fn.coeffs[static_cast<size_t>(n)] = monomial_coeff(n);
            fm.coeffs[static_cast<size_t>(m)] = monomial_coeff(m);
            const Quaternion p1 = bergman_inner(fn, fm, *disc, u1);
            const Quaternion p2 = bergman_inner(fn, fm, *disc, u2);
            dev_slice = std::max(dev_slice, norm(p1 - p2));
            dev_ortho = std::max(dev_ortho, norm(p1 - Quaternion{n == m ? 1.0 : 0.0, 0, 0, 0}));
        }
    out.push_back(gate("bergman-slice-independence", dev_slice, 1e-9));
    out.push_back(gate("bergman-orthonormality", dev_ortho, 1e-9));
}

// --- criterion 10 ----------------------------------------------------------

PropertyResult three_path(const VerifyConfig& cfg) {
    const double alpha = 1.0;
    const RulePtr rule = build_rule(alpha, cfg.rule_size);
    const DiscRulePtr disc = build_disc_rule(alpha);
    Rng rng(cfg.seed + 4);

    const double s2 = 1.0 / std::sqrt(2.0);
    const std::vector<Quaternion> thetas = {
        {0, 0, 0.5, 0},                    // 0.5 j
        {0.9 * s2, 0.9 * s2, 0, 0},        // 0.9 (1+i)/sqrt(2)
    };
    double dev = 0.0;
    for (const Quaternion& theta : thetas) {
        const FrhtOperator op(theta, rule);
        for (int trial = 0; trial < 5; ++trial) {
            const CoeffVector c = rng.coeffs(10);
            const RadialSignal f = synthesize(c, rule);
            const RadialSignal spectral = synthesize(frht_spectral(c, theta), rule);
            const RadialSignal quad = frht_quadrature(f, op);
            const RadialSignal barg = frht_via_bargmann(f, theta, *disc, 9);
            const auto dist = [&](const RadialSignal& a, const RadialSignal& b) {
                RadialSignal d = zero_signal(rule);
                for (int i = 0; i < rule->count(); ++i)
                    d.values[static_cast<size_t>(i)] =
                        a.values[static_cast<size_t>(i)] - b.values[static_cast<size_t>(i)];
                return norm_alpha(d);
            };
            dev = std::max({dev, dist(spectral, quad), dist(spectral, barg), dist(quad, barg)});
        }
    }
    return gate("three-path-consistency", dev, 1e-6);
}

// --- criterion 11 ----------------------------------------------------------

PropertyResult contraction(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 5);
    double dev = 0.0;
    for (int trial = 0; trial < 100; ++trial)
        for (const double modulus : {0.3, 0.9, 1.0}) {
            const Quaternion theta = rng.with_modulus(modulus);
            const CoeffVector c = rng.coeffs(21);
            const double grow = frht_spectral(c, theta).norm() - c.norm();
            dev = std::max(dev, grow);
        }
    return gate("contraction", dev, 1e-12);
}

// --- criterion 12 ----------------------------------------------------------

PropertyResult theta_continuity(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 6);
    const Quaternion theta = rng.with_modulus(1.0);
    const CoeffVector c = rng.coeffs(21);

    double d[3];
    const double eps[3] = {1e-2, 1e-4, 1e-6};
    for (int k = 0; k < 3; ++k) {
        const CoeffVector a = frht_spectral(c, (1.0 - eps[k]) * theta);
        const CoeffVector b = frht_spectral(c, theta);
        double s = 0.0;
        for (int n = 0; n <= 20; ++n)
            s += norm_sq(a.c[static_cast<size_t>(n)] - b.c[static_cast<size_t>(n)]);
        d[k] = std::sqrt(s);
    }
    if (!(d[0] > d[1] && d[1] > d[2]))
        return gate("theta-continuity", 1.0, 0.2); // monotonicity broken
    const double r1 = d[1] / d[0] / 1e-2 - 1.0;
    const double r2 = d[2] / d[1] / 1e-2 - 1.0;
    return gate("theta-continuity", std::max(std::abs(r1), std::abs(r2)), 0.2);
}

} // namespace

std::vector<PropertyResult> run_acceptance(const VerifyConfig& cfg) {
    std::vector<PropertyResult> out;
    out.push_back(orthonormality(cfg));
    out.push_back(eigenrelation_quadrature(cfg));
    out.push_back(hille_hardy(cfg));
    plancherel(cfg, out);
    out.push_back(inversion(cfg));
    semigroup(cfg, out);
    out.push_back(fourier_bessel_limit(cfg));
    bargmann_route(cfg, out);
    out.push_back(three_path(cfg));
    out.push_back(contraction(cfg));
    out.push_back(theta_continuity(cfg));
    return out;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    for (const PropertyResult& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace qfht
