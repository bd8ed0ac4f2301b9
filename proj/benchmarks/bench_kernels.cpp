#include <benchmark/benchmark.h>

#include "summand/ideal.hpp"
#include "summand/module.hpp"
#include "summand/properties.hpp"

namespace {

using namespace summand;

DescriptorPtr pattern_ring() {
    return make_pattern(3, make_zmod(2), {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
}

void BM_ConstructMatrixRing(benchmark::State& state) {
    const auto desc = make_matrix(2, make_zmod(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto r = construct(desc);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ConstructMatrixRing)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_ValidateAxioms(benchmark::State& state) {
    const auto r = construct(make_matrix(2, make_zmod(static_cast<int>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(validate_axioms(*r).passed);
}
BENCHMARK(BM_ValidateAxioms)->Arg(2)->Arg(4);

void BM_IdempotentScan(benchmark::State& state) {
    const auto r = construct(make_matrix(2, make_zmod(4)));
    for (auto _ : state) benchmark::DoNotOptimize(idempotents(*r).size());
}
BENCHMARK(BM_IdempotentScan);

void BM_IdealClosure(benchmark::State& state) {
    const auto r = construct(pattern_ring());
    for (auto _ : state) benchmark::DoNotOptimize(ideal_generated(r, Side::left, {10, 12}).count());
}
BENCHMARK(BM_IdealClosure);

void BM_SummandWitness(benchmark::State& state) {
    const auto r = construct(pattern_ring());
    const auto ideal = ideal_generated(r, Side::left, {10, 12});
    for (auto _ : state) benchmark::DoNotOptimize(summand_witness(ideal).has_value());
}
BENCHMARK(BM_SummandWitness);

void BM_CheckSspDefinitional(benchmark::State& state) {
    const auto r = construct(make_matrix(2, make_zmod(static_cast<int>(state.range(0)))));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_ssp(r, Side::right, SspMethod::definitional).holds);
}
BENCHMARK(BM_CheckSspDefinitional)->Arg(2)->Arg(4)->Arg(6);

void BM_EnumerateIdeals(benchmark::State& state) {
    const auto r = construct(pattern_ring());
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_ideals(r, Side::right, 16).size());
}
BENCHMARK(BM_EnumerateIdeals);

void BM_HomEnumeration(benchmark::State& state) {
    const auto r = construct(make_zmod(static_cast<int>(state.range(0))));
    const auto m = free_module(r, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hom_maps(m, m).size());
}
BENCHMARK(BM_HomEnumeration)->Arg(2)->Arg(4)->Arg(8);

void BM_EndomorphismRing(benchmark::State& state) {
    const auto r = construct(make_zmod(static_cast<int>(state.range(0))));
    const auto m = free_module(r, 2);
    for (auto _ : state) benchmark::DoNotOptimize(endomorphism_ring(m).ring->size);
}
BENCHMARK(BM_EndomorphismRing)->Arg(2)->Arg(4);

void BM_TheoremSuiteSmall(benchmark::State& state) {
    const auto r = construct(pattern_ring());
    Caps caps;
    caps.size = 256;  // keeps the matrix check skipped
    for (auto _ : state) benchmark::DoNotOptimize(theorem_suite(r, caps).all_passed());
}
BENCHMARK(BM_TheoremSuiteSmall);

}  // namespace

BENCHMARK_MAIN();
