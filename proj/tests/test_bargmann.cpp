#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qfht/bargmann.hpp"
#include "qfht/hilbert.hpp"
#include "qfht/kernel.hpp"
#include "qfht/specfun.hpp"
#include "qfht/transform.hpp"

using namespace qfht;

namespace {

constexpr double pi = 3.14159265358979323846;

std::mt19937_64 rng(99);

Quaternion random_q() {
    std::uniform_real_distribution<double> d(-1, 1);
    return {d(rng), d(rng), d(rng), d(rng)};
}

double gamma_fn(double x) { return std::exp(ln_gamma(x)); }

// normalized monomial basis element f_n of the Bergman space
SliceRegularSeries monomial(int n, double alpha) {
    SliceRegularSeries f;
    f.coeffs.assign(static_cast<size_t>(n) + 1, Quaternion{});
    f.coeffs[static_cast<size_t>(n)] =
        std::exp(0.5 * (ln_gamma(n + alpha + 1.0) - std::log(pi) - ln_gamma(alpha) -
                        ln_gamma(n + 1.0)));
    return f;
}

double signal_dist(const RadialSignal& a, const RadialSignal& b) {
    RadialSignal d = zero_signal(a.rule);
    for (size_t i = 0; i < d.values.size(); ++i) d.values[i] = a.values[i] - b.values[i];
    return norm_alpha(d);
}

} // namespace

TEST_CASE("disc rule moments") {
    // sum_k v_k sum_m (2pi/T) r_k^{2n} = pi n! Gamma(alpha) / Gamma(n+alpha+1)
    for (const double alpha : {0.5, 1.0, 2.5}) {
        const DiscRulePtr disc = build_disc_rule(alpha);
        for (int n = 0; n <= 40; n += 4) {
            double s = 0.0;
            for (int k = 0; k < disc->radial_count(); ++k)
                s += disc->radial_weights[k] * std::pow(disc->radial_nodes[k], 2 * n);
            s *= 2.0 * pi;
            const double exact =
                pi * std::exp(ln_gamma(n + 1.0) + ln_gamma(alpha) - ln_gamma(n + alpha + 1.0));
            CHECK(std::abs(s - exact) / exact < 1e-10);
        }
    }
}

TEST_CASE("bargmann kernel") {
    SUBCASE("value at the origin") {
        const double alpha = 1.7;
        const Quaternion v = bargmann_kernel(1.0, BallPoint(Quaternion::zero()), alpha);
        CHECK(v.w == doctest::Approx(1.0 / std::sqrt(pi * gamma_fn(alpha))).epsilon(1e-12));
        CHECK(vec_norm(v) == 0.0);
    }
    SUBCASE("bilinear generating series oracle") {
        // A(x;q) = sum_n phi_n(x) conj(f_n(q)) with real f_n coefficients
        const double alpha = 1.0;
        const double x = 2.3;
        const Quaternion q{0.25, 0, 0.55, -0.35}; // |q| ~ 0.7
        Quaternion series;
        for (int n = 0; n <= 400; ++n) {
            const double cn = std::exp(0.5 * (ln_gamma(n + alpha + 1.0) - std::log(pi) -
                                              ln_gamma(alpha) - ln_gamma(n + 1.0)));
            series = series + phi(n, alpha, x) * cn * conj(slice_power(q, n));
        }
        const Quaternion direct = bargmann_kernel(x, BallPoint(conj(q)), alpha);
        CHECK(norm(series - direct) < 1e-9 * std::max(1.0, norm(direct)));
    }
    SUBCASE("slice confinement") {
        const Quaternion v = bargmann_kernel(1.0, BallPoint(0.4 * Quaternion::j()), 2.0);
        CHECK(v.x == 0.0);
        CHECK(v.z == 0.0);
    }
    SUBCASE("ball membership enforced") {
        CHECK_THROWS_AS(BallPoint(Quaternion::one()), DomainError);
    }
}

TEST_CASE("bargmann_forward") {
    const double alpha = 2.5;
    const RulePtr rule = build_rule(alpha, 64);

    SUBCASE("phi_n maps to the normalized monomial") {
        for (const int n : {0, 1, 4}) {
            std::vector<Quaternion> v;
            for (int i = 0; i < rule->count(); ++i) v.push_back(phi(n, alpha, rule->nodes[i]));
            const SliceRegularSeries F = bargmann_forward(make_signal(rule, std::move(v)), 8);
            const SliceRegularSeries fn = monomial(n, alpha);
            for (int m = 0; m <= 8; ++m) {
                const Quaternion expected =
                    (m == n) ? fn.coeffs[static_cast<size_t>(n)] : Quaternion{};
                CHECK(norm(F.coeffs[static_cast<size_t>(m)] - expected) < 1e-11);
            }
        }
    }
    SUBCASE("pointwise two-path check") {
        // series evaluation of A f at q vs direct quadrature of the integral
        const CoeffVector c = [] {
            CoeffVector cc;
            for (int n = 0; n <= 10; ++n) cc.c.push_back(random_q());
            return cc;
        }();
        const RadialSignal f = synthesize(c, rule);
        const SliceRegularSeries F = bargmann_forward(f, 10);
        const Quaternion q{0.3, 0, 0.2, 0};
        const Quaternion via_series = eval_series(F, BallPoint(q));
        Quaternion via_quadrature;
        for (int i = 0; i < rule->count(); ++i)
            via_quadrature =
                via_quadrature + rule->weights[i] *
                    (bargmann_kernel(rule->nodes[i], BallPoint(q), alpha) * f.values[static_cast<size_t>(i)]);
        CHECK(norm(via_series - via_quadrature) < 1e-8 * std::max(1.0, norm(via_series)));
    }
    SUBCASE("zero signal") {
        const SliceRegularSeries F = bargmann_forward(zero_signal(rule), 6);
        for (const Quaternion& q : F.coeffs) CHECK(norm(q) == 0.0);
    }
}

TEST_CASE("star product") {
    SUBCASE("identity series") {
        SliceRegularSeries one;
        one.coeffs.assign(1, Quaternion::one());
        SliceRegularSeries g;
        for (int n = 0; n < 5; ++n) g.coeffs.push_back(random_q());
        const SliceRegularSeries p = star_product(one, g);
        for (int n = 0; n < 5; ++n) CHECK(p.coeffs[static_cast<size_t>(n)] == g.coeffs[static_cast<size_t>(n)]);
    }
    SUBCASE("single-term product keeps quaternion order") {
        SliceRegularSeries f, g;
        f.coeffs = {Quaternion{}, Quaternion::i()};
        g.coeffs = {Quaternion{}, Quaternion::j()};
        const SliceRegularSeries p = star_product(f, g);
        REQUIRE(p.size() == 3);
        CHECK(norm(p.coeffs[2] - Quaternion::k()) < 1e-15);
    }
    SUBCASE("associativity") {
        for (int trial = 0; trial < 20; ++trial) {
            SliceRegularSeries a, b, c;
            for (int n = 0; n < 5; ++n) {
                a.coeffs.push_back(random_q());
                b.coeffs.push_back(random_q());
                c.coeffs.push_back(random_q());
            }
            const SliceRegularSeries lhs = star_product(star_product(a, b), c);
            const SliceRegularSeries rhs = star_product(a, star_product(b, c));
            REQUIRE(lhs.size() == rhs.size());
            for (int n = 0; n < lhs.size(); ++n)
                CHECK(norm(lhs.coeffs[static_cast<size_t>(n)] - rhs.coeffs[static_cast<size_t>(n)]) < 1e-13);
        }
    }
}

TEST_CASE("gamma action") {
    SUBCASE("theta = 1 fixes the series") {
        SliceRegularSeries F;
        for (int n = 0; n < 6; ++n) F.coeffs.push_back(random_q());
        const SliceRegularSeries G = gamma_action(F, Quaternion::one());
        for (int n = 0; n < 6; ++n) CHECK(G.coeffs[static_cast<size_t>(n)] == F.coeffs[static_cast<size_t>(n)]);
    }
    SUBCASE("monomial picks up theta^n") {
        const double alpha = 1.0;
        const Quaternion theta{0, 0.6, 0, 0.8}; // unit
        const SliceRegularSeries fn = monomial(3, alpha);
        const SliceRegularSeries g = gamma_action(fn, theta);
        CHECK(norm(g.coeffs[3] - slice_power(theta, 3) * fn.coeffs[3]) < 1e-15);
    }
    SUBCASE("composition is theta^n eta^n, same-slice collapses to (eta theta)^n") {
        const Quaternion theta = 0.5 * Quaternion::j();
        const Quaternion eta{0.4, 0, 0.3, 0};
        SliceRegularSeries F;
        for (int n = 0; n < 8; ++n) F.coeffs.push_back(random_q());
        const SliceRegularSeries two_step = gamma_action(gamma_action(F, theta), eta);
        const SliceRegularSeries direct = gamma_action(F, eta * theta);
        for (int n = 0; n < 8; ++n)
            CHECK(norm(two_step.coeffs[static_cast<size_t>(n)] - direct.coeffs[static_cast<size_t>(n)]) < 1e-13);
    }
    SUBCASE("leaves the Bergman space for |theta| > 1") {
        SliceRegularSeries F;
        F.coeffs.assign(2, Quaternion::one());
        CHECK_THROWS_AS(gamma_action(F, Quaternion{2, 0, 0, 0}), DomainError);
    }
}

TEST_CASE("bergman inner product") {
    const double alpha = 1.0;
    const DiscRulePtr disc = build_disc_rule(alpha);

    SUBCASE("monomial orthonormality") {
        for (int n = 0; n <= 10; ++n)
            for (int m = 0; m <= 10; ++m) {
                const Quaternion p =
                    bergman_inner(monomial(n, alpha), monomial(m, alpha), *disc, ImaginaryUnit::i());
                CHECK(norm(p - Quaternion{n == m ? 1.0 : 0.0, 0, 0, 0}) < 1e-9);
            }
    }
    SUBCASE("independence of the slice unit") {
        const ImaginaryUnit u2 = ImaginaryUnit::from_vector(0, 1, 1);
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= 6; ++m) {
                SliceRegularSeries F, G;
                for (int t = 0; t <= n; ++t) F.coeffs.push_back(random_q());
                for (int t = 0; t <= m; ++t) G.coeffs.push_back(random_q());
                const Quaternion a = bergman_inner(F, G, *disc, ImaginaryUnit::i());
                const Quaternion b = bergman_inner(F, G, *disc, u2);
                CHECK(norm(a - b) < 1e-9 * std::max(1.0, norm(a)));
            }
    }
    SUBCASE("self-pairing is real and nonnegative") {
        SliceRegularSeries F;
        for (int n = 0; n < 9; ++n) F.coeffs.push_back(random_q());
        const Quaternion p = bergman_inner(F, F, *disc, ImaginaryUnit::k());
        CHECK(p.w >= 0.0);
        CHECK(vec_norm(p) < 1e-12 * p.w);
        // matches the coefficient-level norm
        CHECK(std::sqrt(p.w) == doctest::Approx(bergman_norm(F, alpha)).epsilon(1e-12));
    }
    SUBCASE("exactness bound enforced") {
        SliceRegularSeries big;
        big.coeffs.assign(200, Quaternion::one());
        const DiscRulePtr small = build_disc_rule(alpha, 8, 16);
        CHECK_THROWS_AS(bergman_inner(big, big, *small, ImaginaryUnit::i()), ExactnessError);
    }
}

TEST_CASE("gamma preserves the Bergman pairing at unit modulus") {
    const double alpha = 1.0;
    const DiscRulePtr disc = build_disc_rule(alpha);
    const Quaternion theta{std::cos(0.8), 0, std::sin(0.8), 0};
    const ImaginaryUnit unit = slice_decompose(theta).unit;
    std::uniform_real_distribution<double> d(-1, 1);

    SliceRegularSeries F, G;
    for (int n = 0; n < 8; ++n) {
        F.coeffs.push_back(embed({d(rng), d(rng)}, unit));
        G.coeffs.push_back(embed({d(rng), d(rng)}, unit));
    }
    const Quaternion before = bergman_inner(F, G, *disc, unit);
    const Quaternion after = bergman_inner(gamma_action(F, theta), gamma_action(G, theta), *disc, unit);
    CHECK(norm(after - before) < 1e-10);

    // unconditional norm preservation
    SliceRegularSeries H;
    for (int n = 0; n < 8; ++n) H.coeffs.push_back(random_q());
    CHECK(std::abs(bergman_norm(gamma_action(H, theta), alpha) - bergman_norm(H, alpha)) < 1e-10);
}

TEST_CASE("bargmann_inverse") {
    const double alpha = 1.0;
    const RulePtr rule = build_rule(alpha, 64);
    const DiscRulePtr disc = build_disc_rule(alpha);

    SUBCASE("f_0 inverts to phi_0") {
        const RadialSignal out = bargmann_inverse(monomial(0, alpha), rule, *disc, ImaginaryUnit::i());
        RadialSignal expected = zero_signal(rule);
        for (int i = 0; i < rule->count(); ++i)
            expected.values[static_cast<size_t>(i)] = phi(0, alpha, rule->nodes[i]);
        CHECK(signal_dist(out, expected) < 1e-8);
    }
    SUBCASE("round trip through phi_2") {
        std::vector<Quaternion> v;
        for (int i = 0; i < rule->count(); ++i) v.push_back(phi(2, alpha, rule->nodes[i]));
        const RadialSignal f = make_signal(rule, std::move(v));
        const RadialSignal back =
            bargmann_inverse(bargmann_forward(f, 6), rule, *disc, ImaginaryUnit::i());
        CHECK(signal_dist(back, f) < 1e-6);
    }
    SUBCASE("zero series") {
        SliceRegularSeries z;
        const RadialSignal out = bargmann_inverse(z, rule, *disc, ImaginaryUnit::j());
        for (const Quaternion& q : out.values) CHECK(norm(q) == 0.0);
    }
    SUBCASE("band beyond the rule bound is rejected") {
        SliceRegularSeries big;
        big.coeffs.assign(200, Quaternion::one());
        const DiscRulePtr small = build_disc_rule(alpha, 8, 16);
        CHECK_THROWS_AS(bargmann_inverse(big, rule, *small, ImaginaryUnit::i()), ExactnessError);
    }
}

TEST_CASE("composed transform A^{-1} Gamma A") {
    const double alpha = 1.0;
    const RulePtr rule = build_rule(alpha, 64);
    const DiscRulePtr disc = build_disc_rule(alpha);

    SUBCASE("theta = 1 reproduces the signal") {
        CoeffVector c;
        for (int n = 0; n <= 8; ++n) c.c.push_back(random_q());
        const RadialSignal f = synthesize(c, rule);
        const RadialSignal out = frht_via_bargmann(f, Quaternion::one(), *disc, 8);
        CHECK(signal_dist(out, f) < 1e-6);
    }
    SUBCASE("eigenfunctions") {
        const Quaternion theta{0, 0.28, -0.96, 0}; // unit
        for (const int n : {0, 2, 5}) {
            std::vector<Quaternion> v;
            for (int i = 0; i < rule->count(); ++i) v.push_back(phi(n, alpha, rule->nodes[i]));
            const RadialSignal f = make_signal(rule, std::move(v));
            const RadialSignal out = frht_via_bargmann(f, theta, *disc, 8);
            RadialSignal expected = zero_signal(rule);
            const Quaternion tn = slice_power(theta, n);
            for (int i = 0; i < rule->count(); ++i)
                expected.values[static_cast<size_t>(i)] = phi(n, alpha, rule->nodes[i]) * tn;
            CHECK(signal_dist(out, expected) < 1e-6);
        }
    }
    SUBCASE("agrees with the spectral path") {
        const Quaternion theta = 0.7 * Quaternion::k();
        CoeffVector c;
        for (int n = 0; n <= 9; ++n) c.c.push_back(random_q());
        const RadialSignal f = synthesize(c, rule);
        const RadialSignal via_bargmann = frht_via_bargmann(f, theta, *disc, 9);
        const RadialSignal via_spectral = synthesize(frht_spectral(c, theta), rule);
        CHECK(signal_dist(via_bargmann, via_spectral) < 1e-6);
    }
}

TEST_CASE("kernel through the Bergman pairing") {
    const double alpha = 1.0;
    const DiscRulePtr disc = build_disc_rule(alpha);
    const KernelConfig cfg(alpha);

    SUBCASE("matches the closed form") {
        const Quaternion theta = 0.6 * Quaternion::j();
        const Quaternion via_disc =
            kernel_via_bergman(theta, alpha, 1.0, 2.0, *disc, ImaginaryUnit::j());
        const Quaternion closed = r_closed(theta, 1.0, 2.0, cfg);
        CHECK(norm(via_disc - closed) < 1e-7 * std::max(1.0, norm(closed)));
    }
    SUBCASE("theta = 0") {
        const Quaternion v = kernel_via_bergman(Quaternion::zero(), alpha, 1.0, 2.0, *disc,
                                                ImaginaryUnit::i());
        CHECK(norm(v - Quaternion{1.0 / gamma_fn(alpha + 1.0), 0, 0, 0}) < 1e-10);
    }
    SUBCASE("symmetric in x and y") {
        const Quaternion theta{0.4, 0.4, 0, 0};
        const Quaternion a = kernel_via_bergman(theta, alpha, 1.2, 3.4, *disc, ImaginaryUnit::i());
        const Quaternion b = kernel_via_bergman(theta, alpha, 3.4, 1.2, *disc, ImaginaryUnit::i());
        CHECK(norm(a - b) < 1e-10 * std::max(1.0, norm(a)));
    }
    SUBCASE("unit must carry the slice of theta") {
        CHECK_THROWS_AS(kernel_via_bergman(0.5 * Quaternion::j(), alpha, 1.0, 1.0, *disc,
                                           ImaginaryUnit::k()),
                        DomainError);
    }
    SUBCASE("three-path kernel consistency at modulus 0.9") {
        // the kernel tail decays only like 0.9^n here, so the pairing needs
        // a disc rule with a wider band than the default
        const DiscRulePtr wide = build_disc_rule(alpha, 160, 512);
        const Quaternion theta{0.9 * 0.5, 0, 0.9 * std::sqrt(3.0) / 2.0, 0};
        const ImaginaryUnit unit = slice_decompose(theta).unit;
        for (const double x : {0.1, 1.0, 10.0})
            for (const double y : {0.5, 5.0}) {
                const Quaternion via_disc = kernel_via_bergman(theta, alpha, x, y, *wide, unit);
                const Quaternion closed = r_closed(theta, x, y, cfg);
                const Quaternion series = r_series(theta, x, y, cfg);
                const double scale = std::max(1.0, norm(closed));
                CHECK(norm(via_disc - closed) < 1e-7 * scale);
                CHECK(norm(via_disc - series) < 1e-7 * scale);
                CHECK(norm(series - closed) < 1e-7 * scale);
            }
    }
}
