#include "downup/derivation.hpp"
#include "downup/morphism.hpp"

#include <benchmark/benchmark.h>

using namespace downup;

namespace {

const CaseConfig c1{Case::one};

Scalar messy_scalar(int n)
{
    Scalar acc(1);
    for (int k = 1; k <= n; ++k)
        acc = acc * (c1.r() + Scalar(k) * c1.s()) / (c1.r() - Scalar(k + 1) * c1.s());
    return acc;
}

} // namespace

static void BM_ScalarAdd(benchmark::State& state)
{
    const Scalar a = messy_scalar(static_cast<int>(state.range(0)));
    const Scalar b = messy_scalar(static_cast<int>(state.range(0)) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_ScalarAdd)->Arg(1)->Arg(3)->Arg(6);

static void BM_ScalarMul(benchmark::State& state)
{
    const Scalar a = messy_scalar(static_cast<int>(state.range(0)));
    const Scalar b = messy_scalar(static_cast<int>(state.range(0)) + 1).inverse();
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMul)->Arg(1)->Arg(3)->Arg(6);

static void BM_DPowerTimesUPower(benchmark::State& state)
{
    const Algebra alg(c1);
    const int n = static_cast<int>(state.range(0));
    const Element dk = Element::word(0, 0, n);
    const Element ul = Element::word(0, 0, -n);
    for (auto _ : state)
        benchmark::DoNotOptimize(alg.mul(dk, ul));
}
BENCHMARK(BM_DPowerTimesUPower)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_ElementMul(benchmark::State& state)
{
    const Algebra alg(c1);
    const Element a = alg.x() + alg.d() + alg.u() + Element::word(-1, 2, 2, c1.r());
    const Element b = alg.y() - alg.pow(alg.u(), 2) + Element::word(2, -1, 1, c1.s());
    for (auto _ : state)
        benchmark::DoNotOptimize(alg.mul(a, b));
}
BENCHMARK(BM_ElementMul);

static void BM_Decompose(benchmark::State& state)
{
    const Algebra alg(c1);
    const Element t = Element::word(1, -2, 2, Scalar(3)) + Element::word(0, 1, -2, c1.r()) +
                      Element::word(-1, 0, 1);
    const DerivSpec s = inner(alg, t) + base_derivation(BaseDerivation::D1);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose(alg, s));
}
BENCHMARK(BM_Decompose);

static void BM_InvertAndCheck(benchmark::State& state)
{
    const Algebra alg(c1);
    const ClassifiedEndo m{EndoKind::swap, c1.r() + Scalar(1), c1.s(), 2, -1, -3, 0};
    for (auto _ : state) {
        const ClassifiedEndo phi = invert(alg, m);
        benchmark::DoNotOptimize(compose_on_generators(alg, m, phi));
    }
}
BENCHMARK(BM_InvertAndCheck);
BENCHMARK_MAIN();
