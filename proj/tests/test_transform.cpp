#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "qfht/hilbert.hpp"
#include "qfht/transform.hpp"

using namespace qfht;

namespace {

constexpr double pi = 3.14159265358979323846;

std::mt19937_64 rng(4242);

Quaternion random_q() {
    std::uniform_real_distribution<double> d(-1, 1);
    return {d(rng), d(rng), d(rng), d(rng)};
}

CoeffVector random_coeffs(int count) {
    CoeffVector c;
    for (int n = 0; n < count; ++n) c.c.push_back(random_q());
    return c;
}

RadialSignal basis_signal(const RulePtr& rule, int n) {
    std::vector<Quaternion> v;
    for (int i = 0; i < rule->count(); ++i) v.push_back(phi(n, rule->alpha, rule->nodes[i]));
    return make_signal(rule, std::move(v));
}

double signal_dist(const RadialSignal& a, const RadialSignal& b) {
    RadialSignal d = zero_signal(a.rule);
    for (size_t i = 0; i < d.values.size(); ++i) d.values[i] = a.values[i] - b.values[i];
    return norm_alpha(d);
}

} // namespace

TEST_CASE("spectral path basics") {
    SUBCASE("theta = 1 is the exact identity") {
        const CoeffVector c = random_coeffs(12);
        const CoeffVector out = frht_spectral(c, Quaternion::one());
        for (size_t n = 0; n < c.c.size(); ++n) CHECK(out.c[n] == c.c[n]);
    }
    SUBCASE("theta^n multiplies on the left") {
        CoeffVector c;
        c.c.assign(2, Quaternion{});
        c.c[1] = Quaternion::j();
        const CoeffVector out = frht_spectral(c, Quaternion::i());
        // i j = k; right multiplication would give -k
        CHECK(norm(out.c[1] - Quaternion::k()) < 1e-15);
    }
    SUBCASE("theta = -1 alternates signs") {
        CoeffVector c;
        c.c.assign(3, Quaternion::one());
        const CoeffVector out = frht_spectral(c, Quaternion{-1, 0, 0, 0});
        CHECK(norm(out.c[0] - Quaternion::one()) < 1e-15);
        CHECK(norm(out.c[1] + Quaternion::one()) < 1e-15);
        CHECK(norm(out.c[2] - Quaternion::one()) < 1e-15);
    }
}

TEST_CASE("quadrature path eigenrelation (desk-size)") {
    const double alpha = 1.0;
    const double s2 = 1.0 / std::sqrt(2.0);
    const Quaternion thetas[] = {
        {0.5, 0, 0, 0},
        {0, 0, 0.9, 0},
        {0, s2, s2, 0}, // unit modulus: needs the larger rule (marginal e^{x/2} growth)
    };
    for (const Quaternion& theta : thetas) {
        const RulePtr rule = build_rule(alpha, norm(theta) > 0.95 ? 256 : 96);
        const FrhtOperator op(theta, rule);
        for (const int n : {0, 3, 7, 10}) {
            const RadialSignal f = basis_signal(rule, n);
            const RadialSignal out = frht_quadrature(f, op);
            const Quaternion tn = slice_power(theta, n);
            RadialSignal expected = zero_signal(rule);
            for (int i = 0; i < rule->count(); ++i)
                expected.values[static_cast<size_t>(i)] = tn * f.values[static_cast<size_t>(i)];
            CHECK(signal_dist(out, expected) < 1e-8);
        }
    }
}

TEST_CASE("theta -> 0 gives the rank-one projection on phi_0") {
    const double alpha = 2.5;
    const RulePtr rule = build_rule(alpha, 64);
    const CoeffVector c = random_coeffs(8);
    const RadialSignal f = synthesize(c, rule);
    const FrhtOperator op(Quaternion::zero(), rule);
    const RadialSignal out = frht_quadrature(f, op);
    RadialSignal expected = zero_signal(rule);
    for (int i = 0; i < rule->count(); ++i)
        expected.values[static_cast<size_t>(i)] = phi(0, alpha, rule->nodes[i]) * c.c[0];
    CHECK(signal_dist(out, expected) < 1e-10);
}

TEST_CASE("path equivalence on band-limited signals") {
    const double alpha = 1.0;
    const RulePtr rule = build_rule(alpha, 128);
    const Quaternion theta{0.45, 0.45, 0.45, 0.45}; // modulus 0.9
    const FrhtOperator op(theta, rule);
    for (int trial = 0; trial < 5; ++trial) {
        const CoeffVector c = random_coeffs(21);
        const RadialSignal f = synthesize(c, rule);
        const RadialSignal quad = frht_quadrature(f, op);
        const RadialSignal spec = synthesize(frht_spectral(c, theta), rule);
        CHECK(signal_dist(quad, spec) < 1e-8);
    }
}

TEST_CASE("theta = 1 identity on the quadrature path") {
    const RulePtr rule = build_rule(1.0, 32);
    const CoeffVector c = random_coeffs(5);
    const RadialSignal f = synthesize(c, rule);
    const FrhtOperator op(Quaternion::one(), rule);
    const RadialSignal out = frht_quadrature(f, op);
    for (size_t i = 0; i < f.values.size(); ++i) CHECK(out.values[i] == f.values[i]);
}

TEST_CASE("inverse operator") {
    const RulePtr rule = build_rule(1.0, 32);
    SUBCASE("unit theta: inverse parameter is the conjugate") {
        const Quaternion theta{std::cos(1.1), 0, std::sin(1.1), 0};
        const FrhtOperator inv = frht_inverse(FrhtOperator(theta, rule));
        CHECK(norm(inv.theta() - conj(theta)) < 1e-15);
        const CoeffVector c = random_coeffs(15);
        const CoeffVector round = frht_spectral(frht_spectral(c, theta), inv.theta());
        for (size_t n = 0; n < c.c.size(); ++n) CHECK(norm(round.c[n] - c.c[n]) < 1e-13);
    }
    SUBCASE("theta = 1/2: spectral round trip on 20 coefficients") {
        const Quaternion theta{0.5, 0, 0, 0};
        const CoeffVector c = random_coeffs(21);
        const CoeffVector round = frht_spectral(frht_spectral(c, theta), q_inverse(theta));
        for (size_t n = 0; n < c.c.size(); ++n) CHECK(norm(round.c[n] - c.c[n]) < 1e-10);
        // kernel path refuses the super-unit inverse parameter
        const FrhtOperator inv = frht_inverse(FrhtOperator(theta, rule));
        CHECK(norm(inv.theta()) == doctest::Approx(2.0));
        CHECK_THROWS_AS(frht_quadrature(synthesize(c, rule), inv), DomainError);
    }
    SUBCASE("theta = 0 is not invertible") {
        CHECK_THROWS_AS(frht_inverse(FrhtOperator(Quaternion::zero(), rule)), DomainError);
    }
}

TEST_CASE("composition") {
    const RulePtr rule = build_rule(1.0, 32);
    SUBCASE("unit theta composed with its conjugate is the identity") {
        const Quaternion theta{std::cos(0.4), std::sin(0.4), 0, 0};
        const FrhtOperator id = compose(FrhtOperator(conj(theta), rule), FrhtOperator(theta, rule));
        CHECK(norm(id.theta() - Quaternion::one()) < 1e-15);
    }
    SUBCASE("same slice: sequential application matches the product parameter") {
        const Quaternion theta = 0.5 * Quaternion::j();
        const Quaternion eta = 0.5 * Quaternion::j();
        const CoeffVector c = random_coeffs(12);
        const CoeffVector sequential = frht_spectral(frht_spectral(c, eta), theta);
        const CoeffVector direct = frht_spectral(c, theta * eta);
        for (size_t n = 0; n < c.c.size(); ++n)
            CHECK(norm(sequential.c[n] - direct.c[n]) < 1e-12);
        CHECK(norm(compose(FrhtOperator(theta, rule), FrhtOperator(eta, rule)).theta() -
                   Quaternion{-0.25, 0, 0, 0}) < 1e-15);
    }
    SUBCASE("cross slice: theta^n eta^n differs from (theta eta)^n") {
        const Quaternion theta = 0.5 * Quaternion::i();
        const Quaternion eta = 0.5 * Quaternion::j();
        const Quaternion lhs = slice_power(theta, 2) * slice_power(eta, 2);
        const Quaternion rhs = slice_power(theta * eta, 2);
        CHECK(norm(lhs - rhs) == doctest::Approx(0.125).epsilon(1e-14));
    }
    SUBCASE("mismatched configuration is rejected") {
        const RulePtr other = build_rule(2.0, 32);
        CHECK_THROWS_AS(
            compose(FrhtOperator(Quaternion::zero(), rule), FrhtOperator(Quaternion::zero(), other)),
            ConfigMismatchError);
        CHECK_THROWS_AS(FrhtOperator(Quaternion::zero(), rule, KernelConfig(2.0)),
                        ConfigMismatchError);
    }
}

TEST_CASE("plancherel") {
    const RulePtr rule = build_rule(1.0, 16);
    const Quaternion theta{std::cos(0.9), 0, 0, std::sin(0.9)};
    const FrhtOperator op(theta, rule);

    SUBCASE("basis vector") {
        CoeffVector e0;
        e0.c.assign(1, Quaternion::one());
        CHECK(verify_plancherel(op, e0, e0) < 1e-15);
    }
    SUBCASE("slice-confined coefficients") {
        const ImaginaryUnit unit = slice_decompose(theta).unit;
        std::uniform_real_distribution<double> d(-1, 1);
        CoeffVector f, g;
        for (int n = 0; n <= 15; ++n) {
            f.c.push_back(embed({d(rng), d(rng)}, unit));
            g.c.push_back(embed({d(rng), d(rng)}, unit));
        }
        CHECK(verify_plancherel(op, f, g) < 1e-12);
    }
    SUBCASE("norm identity for general coefficients") {
        const CoeffVector f = random_coeffs(16);
        CHECK(std::abs(frht_spectral(f, theta).norm() - f.norm()) < 1e-12);
    }
    SUBCASE("requires unit modulus") {
        const FrhtOperator half(Quaternion{0.5, 0, 0, 0}, rule);
        CHECK_THROWS_AS(verify_plancherel(half, random_coeffs(4), random_coeffs(4)), DomainError);
    }
}

TEST_CASE("norm non-expansion |theta| <= 1") {
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_real_distribution<double> d(0, 1);
        const double mod = d(rng);
        const double angle = d(rng) * pi;
        const Quaternion v = random_q();
        const double vn = vec_norm(v);
        if (vn < 1e-6) continue;
        const ImaginaryUnit unit = ImaginaryUnit::from_vector(v.x, v.y, v.z);
        const Quaternion theta = mod * embed({std::cos(angle), std::sin(angle)}, unit);
        const CoeffVector c = random_coeffs(21);
        CHECK(frht_spectral(c, theta).norm() <= c.norm() + 1e-12);
    }
}

TEST_CASE("hankel_reference") {
    SUBCASE("zero integrand") {
        std::vector<double> psi(101, 0.0);
        CHECK(hankel_reference(psi, 0.01, 1.0, 2.0) == 0.0);
    }
    SUBCASE("self-reciprocal profile u^alpha e^{-u^2/2}") {
        // H_alpha maps it to y^alpha e^{-y^2/2}
        const double alpha = 1.0;
        const double step = 1e-3;
        const size_t count = 20001; // truncation at u = 20 suffices here
        std::vector<double> psi(count);
        for (size_t i = 0; i < count; ++i) {
            const double u = static_cast<double>(i) * step;
            psi[i] = std::pow(u, alpha) * std::exp(-0.5 * u * u);
        }
        for (const double y : {0.3, 1.0, 2.2}) {
            const double expected = std::pow(y, alpha) * std::exp(-0.5 * y * y);
            CHECK(hankel_reference(psi, step, alpha, y) ==
                  doctest::Approx(expected).epsilon(1e-8));
        }
    }
    SUBCASE("even sample counts are rejected") {
        std::vector<double> psi(100, 0.0);
        CHECK_THROWS_AS(hankel_reference(psi, 0.01, 1.0, 1.0), DomainError);
    }
}

TEST_CASE("theta = -1 reproduces the Fourier-Bessel identity at one point") {
    const double alpha = 1.0;
    const RulePtr rule = build_rule(alpha, 128);
    const FrhtOperator op(Quaternion{-1, 0, 0, 0}, rule);

    std::vector<Quaternion> v;
    for (int i = 0; i < rule->count(); ++i) v.push_back(std::exp(-0.5 * rule->nodes[i]));
    const RadialSignal sig = make_signal(rule, std::move(v));

    const double y = 1.3;
    const double step = 1e-3;
    const size_t count = 40001;
    std::vector<double> psi(count);
    for (size_t i = 0; i < count; ++i) {
        const double u = static_cast<double>(i) * step;
        psi[i] = std::pow(u, alpha) * std::exp(-0.5 * u * u) * std::exp(-0.5 * u * u);
    }
    const Quaternion lhs = frht_apply_at(sig, op, y * y);
    const double rhs =
        std::exp(0.5 * y * y) * std::pow(y, -alpha) * hankel_reference(psi, step, alpha, y);
    CHECK(norm(lhs - Quaternion{rhs, 0, 0, 0}) < 2e-6);
}

TEST_CASE("continuity of theta -> L_theta") {
    const Quaternion theta{std::cos(0.6), std::sin(0.6) / std::sqrt(2.0),
                           std::sin(0.6) / std::sqrt(2.0), 0};
    const CoeffVector c = random_coeffs(21);
    double d[3];
    const double eps[3] = {1e-2, 1e-4, 1e-6};
    for (int k = 0; k < 3; ++k) {
        const CoeffVector a = frht_spectral(c, (1.0 - eps[k]) * theta);
        const CoeffVector b = frht_spectral(c, theta);
        double s = 0.0;
        for (size_t n = 0; n < c.c.size(); ++n) s += norm_sq(a.c[n] - b.c[n]);
        d[k] = std::sqrt(s);
    }
    CHECK(d[0] > d[1]);
    CHECK(d[1] > d[2]);
    CHECK(d[1] / d[0] == doctest::Approx(1e-2).epsilon(0.1));
    CHECK(d[2] / d[1] == doctest::Approx(1e-2).epsilon(0.1));
}
