// Serial reference kernels against the OpenMP/GEMM kernels at HVAE and
// segmentor layer sizes. Arguments: batch, channels, spatial size.

#include "dscm/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using dscm::real;
namespace k = dscm::kernels;

std::vector<real> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<real> u(-1, 1);
    std::vector<real> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

k::ConvGeometry geometry(const benchmark::State& state) {
    k::ConvGeometry g;
    g.batch = static_cast<int>(state.range(0));
    g.in_channels = static_cast<int>(state.range(1));
    g.out_channels = static_cast<int>(state.range(1));
    g.height = static_cast<int>(state.range(2));
    g.width = static_cast<int>(state.range(2));
    g.kernel = 3;
    return g;
}

template <bool Serial>
void conv_forward(benchmark::State& state) {
    const auto g = geometry(state);
    const auto x = random_vector(g.input_size(), 1);
    const auto w = random_vector(g.weight_size(), 2);
    const auto b = random_vector(static_cast<std::size_t>(g.out_channels), 3);
    std::vector<real> y(g.output_size());
    for (auto _ : state) {
        if constexpr (Serial)
            k::serial::conv2d_forward(g, x, w, b, y);
        else
            k::conv2d_forward(g, x, w, b, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.output_size()) * g.in_channels * 9);
}

template <bool Serial>
void conv_backward(benchmark::State& state) {
    const auto g = geometry(state);
    const auto x = random_vector(g.input_size(), 1);
    const auto w = random_vector(g.weight_size(), 2);
    const auto gy = random_vector(g.output_size(), 4);
    std::vector<real> gx(g.input_size()), gw(g.weight_size()), gb(static_cast<std::size_t>(g.out_channels));
    for (auto _ : state) {
        if constexpr (Serial) {
            k::serial::conv2d_backward_input(g, gy, w, gx);
            k::serial::conv2d_backward_weight(g, gy, x, gw, gb);
        } else {
            k::conv2d_backward_input(g, gy, w, gx);
            k::conv2d_backward_weight(g, gy, x, gw, gb);
        }
        benchmark::DoNotOptimize(gx.data());
        benchmark::DoNotOptimize(gw.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.output_size()) * g.in_channels * 18);
}

template <bool Serial>
void linear(benchmark::State& state) {
    const k::LinearGeometry g{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                              static_cast<int>(state.range(2))};
    const auto x = random_vector(static_cast<std::size_t>(g.batch) * g.in_features, 1);
    const auto w = random_vector(static_cast<std::size_t>(g.out_features) * g.in_features, 2);
    const auto b = random_vector(static_cast<std::size_t>(g.out_features), 3);
    std::vector<real> y(static_cast<std::size_t>(g.batch) * g.out_features);
    for (auto _ : state) {
        if constexpr (Serial)
            k::serial::linear_forward(g, x, w, b, y);
        else
            k::linear_forward(g, x, w, b, y);
        benchmark::DoNotOptimize(y.data());
    }
}

void conv_args(benchmark::internal::Benchmark* b) {
    b->Args({16, 8, 32})->Args({32, 16, 32})->Args({32, 16, 16})->Args({32, 16, 8});
}

}  // namespace

BENCHMARK(conv_forward<true>)->Name("conv_forward/serial")->Apply(conv_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(conv_forward<false>)->Name("conv_forward/parallel")->Apply(conv_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(conv_backward<true>)->Name("conv_backward/serial")->Apply(conv_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(conv_backward<false>)->Name("conv_backward/parallel")->Apply(conv_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(linear<true>)->Name("linear/serial")->Args({32, 512, 32})->Unit(benchmark::kMicrosecond);
BENCHMARK(linear<false>)->Name("linear/parallel")->Args({32, 512, 32})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
