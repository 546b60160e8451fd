// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "infodecomp/dataset.hpp"
#include "infodecomp/histogram.hpp"
#include "infodecomp/kernels.hpp"
#include "infodecomp/parallel.hpp"

using namespace infodecomp;

namespace {

constexpr std::size_t kDims = 6;

const std::vector<double>& gaussian_rows(std::size_t n) {
    static std::vector<double> rows;
    if (rows.size() != n * kDims) {
        std::mt19937_64 rng(3);
        std::normal_distribution<double> g(0.0, 1.0);
        rows.resize(n * kDims);
        for (auto& v : rows) v = g(rng);
    }
    return rows;
}

std::vector<DimBinning> binning() {
    std::vector<DimBinning> b(kDims);
    for (auto& d : b) {
        d.bins = 10;
        d.min = -4.0;
        d.max = 4.0;
        d.width = 0.8;
    }
    return b;
}

template <Backend B>
void BM_bin_rows(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto& rows = gaussian_rows(n);
    const auto bin = binning();
    const std::vector<std::size_t> cols{0, 1, 2, 3, 4, 5};
    std::vector<std::int32_t> codes(n * kDims);
    for (auto _ : state) {
        if constexpr (B == Backend::Serial)
            kernels::serial::bin_rows(rows, kDims, cols, bin, 1, 4, codes);
        else
            kernels::omp::bin_rows(rows, kDims, cols, bin, 1, 4, codes);
        benchmark::DoNotOptimize(codes.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <Backend B>
void BM_group_coords(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto& rows = gaussian_rows(n);
    const auto bin = binning();
    const std::vector<std::size_t> cols{0, 1, 2, 3, 4, 5};
    std::vector<std::int32_t> codes(n * kDims);
    kernels::serial::bin_rows(rows, kDims, cols, bin, 0, 1, codes);
    for (auto _ : state) benchmark::DoNotOptimize(group_coords(codes, kDims, cols, {}, B));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <Backend B>
void BM_finalize(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto& rows = gaussian_rows(n);
    for (auto _ : state) {
        DataSet ds(4);
        for (std::size_t d = 0; d < kDims; ++d) ds.declare_variable(VariableSpec::continuous(d, 10));
        ds.add_samples(rows, kDims);
        ds.finalize(B);
        benchmark::DoNotOptimize(ds.histogram(0).cell_count());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

}  // namespace

BENCHMARK(BM_bin_rows<Backend::Serial>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_bin_rows<Backend::Parallel>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_group_coords<Backend::Serial>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_group_coords<Backend::Parallel>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_finalize<Backend::Serial>)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_finalize<Backend::Parallel>)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    configure_threads_from_env();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::AddCustomContext("omp_threads", std::to_string(max_threads()));
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
