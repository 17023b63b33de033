// Serial vs OpenMP basis-tuple expansion on the two largest identity checks.

#include "hcl/alt_forms.hpp"

#include <benchmark/benchmark.h>

using namespace hcl;

namespace {

struct SenaryCase
{
    MultiForm lhs;
    TupleEvaluator rhs;

    explicit SenaryCase(long D)
    {
        SenaryPair P = senary_identity_pair(D);
        lhs = senary_form_product(P, P, mod_floor(BigInt(D), 4) == 1 ? 1 : 0);
        rhs = senary_rhs(P.E, senary_identity_cube(D), SenaryBilinear::product);
    }
};

SenaryCase const & senary_case()
{
    static SenaryCase c(-47);
    return c;
}

void BM_senary_serial(benchmark::State & state)
{
    auto const & c = senary_case();
    for (auto _ : state)
        benchmark::DoNotOptimize(find_mismatch_serial(c.lhs, c.rhs));
}

void BM_senary_parallel(benchmark::State & state)
{
    auto const & c = senary_case();
    for (auto _ : state)
        benchmark::DoNotOptimize(find_mismatch(c.lhs, c.rhs));
}

void BM_quaternary_verify(benchmark::State & state)
{
    Cube A{0, 2, 2, -1, 1, 0, 0, -3}, B{0, -1, -2, -1, -1, 0, 0, 6}, C{-1, 2, 2, -2, 1, 5, -1, -11};
    Cube R{0, 2, 2, -1, 1, 0, 0, -3}, S{1, -2, -1, 0, -1, 1, -6, 12}, T{0, 2, 1, 0, 1, -1, 0, -6};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_quaternary_composition(A, B, C, R, S, T));
}

}  // namespace

BENCHMARK(BM_senary_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_senary_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_quaternary_verify)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
