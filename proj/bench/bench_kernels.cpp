#include <benchmark/benchmark.h>

#include "mzv/kernels.hpp"

using namespace mzvkit;

namespace {

// Every index up to weight 5 under all three truncations at one N.
std::vector<SumRequest> requests(std::uint64_t n)
{
    std::vector<SumRequest> out;
    for (const Index &k : indices_up_to_weight(5)) {
        for (Variant v : {Variant::plain, Variant::flat, Variant::natural}) {
            out.push_back(SumRequest::of(v, word_of_index(k), n));
        }
    }
    return out;
}

void BM_BatchSerial(benchmark::State &state)
{
    auto reqs = requests(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch_serial(reqs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reqs.size()));
}

void BM_BatchParallel(benchmark::State &state)
{
    auto reqs = requests(static_cast<std::uint64_t>(state.range(0)));
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_batch(reqs, workers));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reqs.size()));
}

} // namespace

BENCHMARK(BM_BatchSerial)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)
    ->ArgsProduct({{1 << 10, 1 << 14}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
