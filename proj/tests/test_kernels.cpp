#include <doctest.h>

#include <numeric>
#include <random>

#include "infodecomp/histogram.hpp"
#include "infodecomp/kernels.hpp"

using namespace infodecomp;

namespace {

DimBinning unit_interval(int bins) {
    DimBinning b;
    b.bins = bins;
    b.min = 0.0;
    b.max = 1.0;
    b.width = 1.0 / bins;
    return b;
}

std::vector<double> random_table(std::mt19937_64& rng, std::size_t rows, std::size_t width) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> t(rows * width);
    for (auto& v : t) v = g(rng);
    return t;
}

}  // namespace

TEST_CASE("bin_value follows floor binning with shifted edges") {
    const auto b = unit_interval(2);
    const std::vector<double> xs{0.1, 0.4, 0.6, 0.9};
    std::vector<int> unshifted, shifted;
    for (double x : xs) {
        unshifted.push_back(bin_value(x, b, 0, 1));
        shifted.push_back(bin_value(x, b, 1, 2));
    }
    CHECK(unshifted == std::vector<int>{0, 0, 1, 1});
    // floor((x + 0.25) / 0.5)
    CHECK(shifted == std::vector<int>{0, 1, 1, 2});
}

TEST_CASE("bin_value edge handling") {
    const auto b = unit_interval(4);
    CHECK(bin_value(1.0, b, 0, 4) == 3);   // top edge closes the last regular bin
    CHECK(bin_value(1.0, b, 3, 4) == 4);   // overflow bin under a shifted grid
    CHECK(bin_value(0.0, b, 0, 4) == 0);
    CHECK(bin_value(-5.0, b, 0, 4) == 0);  // clamped
    CHECK(bin_value(7.0, b, 2, 4) == 4);

    DimBinning single;
    single.bins = 1;
    single.min = single.max = 3.0;
    CHECK(bin_value(3.0, single, 0, 1) == 0);

    DimBinning d;
    d.discrete = true;
    d.levels = {-1.0, 2.5, 7.0};
    CHECK(bin_value(2.5, d, 0, 1) == 1);
    CHECK(bin_value(7.0, d, 3, 4) == 2);
}

TEST_CASE("serial and omp kernels agree bit for bit") {
    std::mt19937_64 rng(11);
    const std::size_t rows = 5000, width = 5;
    const auto table = random_table(rng, rows, width);
    const std::vector<std::size_t> columns{0, 2, 3, 4};
    std::vector<DimBinning> binning;
    for (int bins : {3, 8, 1, 20}) {
        DimBinning b;
        b.bins = bins;
        b.min = -1.5;
        b.max = 1.5;
        b.width = 3.0 / bins;
        binning.push_back(b);
    }

    for (std::size_t shift = 0; shift < 3; ++shift) {
        std::vector<std::int32_t> a(rows * columns.size()), b(rows * columns.size());
        kernels::serial::bin_rows(table, width, columns, binning, shift, 3, a);
        kernels::omp::bin_rows(table, width, columns, binning, shift, 3, b);
        REQUIRE(a == b);

        const std::vector<std::size_t> positions{3, 0, 1};
        std::vector<std::int32_t> ma(3), mb(3);
        kernels::serial::column_max(a, columns.size(), positions, ma);
        kernels::omp::column_max(a, columns.size(), positions, mb);
        CHECK(ma == mb);

        std::vector<std::uint64_t> radices{21, 4, 9};
        std::vector<std::uint64_t> ka(rows), kb(rows);
        kernels::serial::pack_keys(a, columns.size(), positions, radices, ka);
        kernels::omp::pack_keys(a, columns.size(), positions, radices, kb);
        CHECK(ka == kb);
    }

    std::vector<std::uint32_t> labels(rows);
    std::vector<std::uint64_t> weights(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        labels[i] = static_cast<std::uint32_t>(rng() % 97);
        weights[i] = rng() % 13;
    }
    for (bool weighted : {false, true}) {
        std::vector<std::uint64_t> ca(97, 0), cb(97, 0);
        const std::span<const std::uint64_t> w = weighted ? std::span<const std::uint64_t>(weights) : std::span<const std::uint64_t>{};
        kernels::serial::count_labels(labels, w, ca);
        kernels::omp::count_labels(labels, w, cb);
        CHECK(ca == cb);
    }

    CHECK(kernels::serial::count_clamped(table, width, columns, binning) ==
          kernels::omp::count_clamped(table, width, columns, binning));
    CHECK(kernels::serial::count_clamped(table, width, columns, binning) > 0);
}

TEST_CASE("packed-key and tuple-compare grouping give identical classes") {
    std::mt19937_64 rng(5);
    const std::size_t n = 3000, stride = 4;
    std::vector<std::int32_t> coords(n * stride);
    for (auto& c : coords) c = static_cast<std::int32_t>(rng() % 5);
    std::vector<std::uint64_t> weights(n);
    for (auto& w : weights) w = 1 + rng() % 4;
    const std::vector<std::size_t> positions{2, 0};

    const auto packed = group_coords(coords, stride, positions, weights, Backend::Parallel, false);
    const auto tuple = group_coords(coords, stride, positions, weights, Backend::Serial, true);
    CHECK(packed.labels == tuple.labels);
    CHECK(packed.counts == tuple.counts);
    CHECK(packed.representative == tuple.representative);
    CHECK(packed.counts.size() == 25);
    CHECK(std::accumulate(packed.counts.begin(), packed.counts.end(), std::uint64_t{0}) ==
          std::accumulate(weights.begin(), weights.end(), std::uint64_t{0}));

    // Classes run in lexicographic order of (coord[2], coord[0]).
    for (std::size_t c = 1; c < packed.representative.size(); ++c) {
        const auto* prev = coords.data() + packed.representative[c - 1] * stride;
        const auto* cur = coords.data() + packed.representative[c] * stride;
        CHECK(std::make_pair(prev[2], prev[0]) < std::make_pair(cur[2], cur[0]));
    }
}

TEST_CASE("histogram build agrees across backends and sparse invariants hold") {
    std::mt19937_64 rng(3);
    const std::size_t n = 4000, dims = 3;
    std::vector<std::int32_t> codes(n * dims);
    for (auto& c : codes) c = static_cast<std::int32_t>(rng() % 6);
    const auto a = SparseJointHistogram::build(codes, dims, 0, Backend::Serial);
    const auto b = SparseJointHistogram::build(codes, dims, 0, Backend::Parallel);
    CHECK(a == b);
    CHECK(a.total() == n);
    for (std::size_t i = 0; i < a.cell_count(); ++i) CHECK(a.count(i) > 0);
    for (std::size_t i = 1; i < a.cell_count(); ++i) {
        const auto p = a.cell(i - 1), c = a.cell(i);
        CHECK(std::lexicographical_compare(p.begin(), p.end(), c.begin(), c.end()));
    }
    const std::vector<std::int32_t> probe{codes[0], codes[1], codes[2]};
    CHECK(a.count_of(probe) > 0);
    CHECK(a.count_of(std::vector<std::int32_t>{9, 9, 9}) == 0);
}

TEST_CASE("entropy_bits") {
    CHECK(entropy_bits(std::vector<std::uint64_t>{1, 1}, 2) == doctest::Approx(1.0));
    CHECK(entropy_bits(std::vector<std::uint64_t>{5}, 5) == 0.0);
    CHECK(entropy_bits(std::vector<std::uint64_t>{}, 0) == 0.0);
}
