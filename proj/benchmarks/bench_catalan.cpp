#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "catalan/exact.hpp"
#include "catalan/representations.hpp"

namespace {

using catalan::RepresentationId;

void BM_Representation(benchmark::State& state) {
    const auto id = static_cast<RepresentationId>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    std::int64_t evaluations = 0;
    for (auto _ : state) {
        const auto rec = catalan::evaluate_representation(id, n);
        evaluations = rec.quadrature.evaluations;
        benchmark::DoNotOptimize(rec.estimate);
    }
    state.SetLabel(std::string(catalan::to_string(id)));
    state.counters["evaluations"] = static_cast<double>(evaluations);
}

void representation_args(benchmark::internal::Benchmark* b) {
    for (auto id : catalan::kAllRepresentations) {
        for (int n : {2, 10, 20, 30}) {
            b->Args({static_cast<std::int64_t>(id), n});
        }
    }
}

BENCHMARK(BM_Representation)->Apply(representation_args)->Unit(benchmark::kMicrosecond);

void BM_VerifyIdentity(benchmark::State& state) {
    const auto identity = state.range(0) == 0 ? catalan::Identity::touchard : catalan::Identity::callan;
    const std::int64_t n_min = identity == catalan::Identity::callan ? 2 : 0;
    for (auto _ : state) {
        const auto report = catalan::verify_identity(identity, n_min, state.range(1));
        benchmark::DoNotOptimize(report.all_passed);
    }
    state.SetLabel(std::string(catalan::to_string(identity)));
}

BENCHMARK(BM_VerifyIdentity)->Args({0, 500})->Args({1, 500})->Unit(benchmark::kMillisecond);

void BM_CatalanNumber(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(catalan::catalan_number(n));
    }
}

BENCHMARK(BM_CatalanNumber)->Arg(30)->Arg(500)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
