#include <benchmark/benchmark.h>

#include <random>

#include "qfht/bargmann.hpp"
#include "qfht/hilbert.hpp"
#include "qfht/kernel.hpp"
#include "qfht/specfun.hpp"
#include "qfht/transform.hpp"

namespace {

using namespace qfht;

CoeffVector random_coeffs(int count) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-1, 1);
    CoeffVector c;
    for (int n = 0; n < count; ++n) c.c.push_back(Quaternion{d(rng), d(rng), d(rng), d(rng)});
    return c;
}

void BM_BuildRule(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_rule(1.0, m));
}
BENCHMARK(BM_BuildRule)->Arg(64)->Arg(128)->Arg(256);

void BM_BuildDiscRule(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_disc_rule(1.0));
}
BENCHMARK(BM_BuildDiscRule);

void BM_RClosed(benchmark::State& state) {
    const KernelConfig cfg(1.0);
    const Quaternion theta{0.45, 0.45, 0.45, 0.45};
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(r_closed(theta, x, 7.0, cfg));
        x = x < 400.0 ? x * 1.1 : 0.5; // sweep both series and asymptotic regimes
    }
}
BENCHMARK(BM_RClosed);

void BM_RSeries(benchmark::State& state) {
    const KernelConfig cfg(1.0);
    const Quaternion theta{0, 0, 0.9, 0};
    for (auto _ : state) benchmark::DoNotOptimize(r_series(theta, 5.0, 10.0, cfg));
}
BENCHMARK(BM_RSeries);

void BM_BesselJ(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j(1.0, x));
        x = x < 100.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_BesselJ);

void BM_FrhtSpectral(benchmark::State& state) {
    const CoeffVector c = random_coeffs(41);
    const Quaternion theta{0, 0, 0.8, 0.6};
    for (auto _ : state) benchmark::DoNotOptimize(frht_spectral(c, theta));
}
BENCHMARK(BM_FrhtSpectral);

void BM_FrhtQuadrature(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const RulePtr rule = build_rule(1.0, m);
    const FrhtOperator op(Quaternion{0.45, 0.45, 0.45, 0.45}, rule);
    const RadialSignal f = synthesize(random_coeffs(21), rule);
    for (auto _ : state) benchmark::DoNotOptimize(frht_quadrature(f, op));
}
BENCHMARK(BM_FrhtQuadrature)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_BargmannRoundTrip(benchmark::State& state) {
    const RulePtr rule = build_rule(1.0, 128);
    const DiscRulePtr disc = build_disc_rule(1.0);
    const RadialSignal f = synthesize(random_coeffs(11), rule);
    for (auto _ : state) {
        const SliceRegularSeries forward = bargmann_forward(f, 10);
        benchmark::DoNotOptimize(bargmann_inverse(forward, rule, *disc, ImaginaryUnit::i()));
    }
}
BENCHMARK(BM_BargmannRoundTrip)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
