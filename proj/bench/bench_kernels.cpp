// Serial reference vs OpenMP kernels: connected-tensor evaluation over
// growing subsets of an 8-qubit Haar state, and multi-restart roof descent.
//
//   ./build/bench/qent_bench                 # full run
//   ./build/bench/qent_bench --benchmark_min_time=0.05

#include <benchmark/benchmark.h>

#include <numeric>

#include "qent/catalog.hpp"
#include "qent/correlation.hpp"
#include "qent/random_states.hpp"
#include "qent/roof.hpp"

namespace {

const qent::PureState& eight_qubit_state() {
    static const qent::PureState state = [] {
        qent::StateSampler sampler(404);
        return sampler.haar_state(qent::QuditRegister::qubits(8));
    }();
    return state;
}

void connected_subset(benchmark::State& state, qent::Execution exec) {
    const int m = static_cast<int>(state.range(0));
    std::vector<int> subset(static_cast<std::size_t>(m));
    std::iota(subset.begin(), subset.end(), 1);
    qent::TensorOptions opts;
    opts.exec = exec;
    for (auto _ : state) {
        auto tensor = qent::connected_tensor(eight_qubit_state(), subset, opts);
        benchmark::DoNotOptimize(tensor.values().data());
    }
    state.SetComplexityN(m);
}

void BM_connected_serial(benchmark::State& state) {
    connected_subset(state, qent::Execution::serial);
}
void BM_connected_openmp(benchmark::State& state) {
    connected_subset(state, qent::Execution::parallel);
}
BENCHMARK(BM_connected_serial)->DenseRange(3, 6);
BENCHMARK(BM_connected_openmp)->DenseRange(3, 6);

void roof_restarts(benchmark::State& state, qent::Execution exec) {
    const qent::DensityMatrix rho = qent::catalog::werner(0.4);
    qent::RoofBudget budget;
    budget.restarts = static_cast<int>(state.range(0));
    budget.max_iterations = 10;
    budget.k_max = 8;
    budget.exec = exec;
    for (auto _ : state) {
        auto result = qent::roof_B(rho, {1, 2}, budget);
        benchmark::DoNotOptimize(result.value);
    }
}

void BM_roof_serial(benchmark::State& state) { roof_restarts(state, qent::Execution::serial); }
void BM_roof_openmp(benchmark::State& state) { roof_restarts(state, qent::Execution::parallel); }
BENCHMARK(BM_roof_serial)->Arg(4);
BENCHMARK(BM_roof_openmp)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
