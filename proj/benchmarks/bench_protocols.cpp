#include <benchmark/benchmark.h>

#include "poltel/metrics.hpp"
#include "poltel/optimizer.hpp"

namespace {

void BM_Variance(benchmark::State& state) {
    poltel::SourceRegistry reg;
    poltel::FluctuationVector v;
    for (int i = 0; i < state.range(0); ++i) {
        v += poltel::FluctuationVector::unit(reg.new_classical(), 0.5 + i);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(poltel::variance(v));
    }
}
BENCHMARK(BM_Variance)->Arg(8)->Arg(64);

void BM_Protocol(benchmark::State& state) {
    const auto scheme = static_cast<poltel::Scheme>(state.range(0));
    poltel::ProtocolParams p;
    switch (scheme) {
        case poltel::Scheme::twin: p = poltel::ProtocolParams::twin(0.3); break;
        case poltel::Scheme::sqd: p = poltel::ProtocolParams::sqd(0.3, 0.5); break;
        case poltel::Scheme::bet: p = poltel::ProtocolParams::bet(0.3, 0.3, 0.2, 0.1); break;
        case poltel::Scheme::optimized_twin: p = poltel::ProtocolParams::optimized_twin(0.3, 0.2, 0.1); break;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(poltel::polarization_fidelity(poltel::run_protocol(p)).total);
    }
    state.SetLabel(std::string(poltel::to_string(scheme)));
}
BENCHMARK(BM_Protocol)->DenseRange(0, 3);

void BM_OptimizeRegimes(benchmark::State& state) {
    for (auto _ : state) {
        auto r = poltel::optimize_regimes(poltel::Scheme::bet, 1e-2, 1e-2);
        benchmark::DoNotOptimize(r.front().fidelity);
    }
}
BENCHMARK(BM_OptimizeRegimes)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
