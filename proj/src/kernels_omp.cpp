#include <algorithm>
#include <cstdint>
#include <limits>

#include "infodecomp/kernels.hpp"

namespace infodecomp::kernels::omp {

void bin_rows(std::span<const double> rows, std::size_t row_width, std::span<const std::size_t> columns,
              std::span<const DimBinning> binning, std::size_t shift, std::size_t shifts,
              std::span<std::int32_t> codes) {
    const auto n = static_cast<std::int64_t>(rows.size() / row_width);
    const std::size_t d = columns.size();
    const double* data = rows.data();
    std::int32_t* out = codes.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
        const double* row = data + r * row_width;
        for (std::size_t j = 0; j < d; ++j)
            out[r * d + j] = bin_value(row[columns[j]], binning[j], shift, shifts);
    }
}

void column_max(std::span<const std::int32_t> coords, std::size_t stride,
                std::span<const std::size_t> positions, std::span<std::int32_t> out) {
    const auto n = static_cast<std::int64_t>(stride == 0 ? 0 : coords.size() / stride);
    const std::int32_t* c = coords.data();
    for (std::size_t p = 0; p < positions.size(); ++p) {
        const std::size_t pos = positions[p];
        std::int32_t m = -1;
#pragma omp parallel for schedule(static) reduction(max : m)
        for (std::int64_t r = 0; r < n; ++r) m = std::max(m, c[r * stride + pos]);
        out[p] = m;
    }
}

void pack_keys(std::span<const std::int32_t> coords, std::size_t stride,
               std::span<const std::size_t> positions, std::span<const std::uint64_t> radices,
               std::span<std::uint64_t> keys) {
    const auto n = static_cast<std::int64_t>(keys.size());
    const std::size_t np = positions.size();
    const std::int32_t* c = coords.data();
    std::uint64_t* out = keys.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) {
        const std::int32_t* row = c + r * stride;
        std::uint64_t key = 0;
        for (std::size_t p = 0; p < np; ++p)
            key = key * radices[p] + static_cast<std::uint64_t>(row[positions[p]]);
        out[r] = key;
    }
}

void count_labels(std::span<const std::uint32_t> labels, std::span<const std::uint64_t> weights,
                  std::span<std::uint64_t> counts) {
    const auto n = static_cast<std::int64_t>(labels.size());
    const std::size_t k = counts.size();
    const std::uint32_t* l = labels.data();
    const std::uint64_t* w = weights.empty() ? nullptr : weights.data();
    std::uint64_t* acc = counts.data();
#pragma omp parallel for schedule(static) reduction(+ : acc[:k])
    for (std::int64_t i = 0; i < n; ++i) acc[l[i]] += w ? w[i] : 1;
}

std::uint64_t count_clamped(std::span<const double> rows, std::size_t row_width,
                            std::span<const std::size_t> columns, std::span<const DimBinning> binning) {
    const auto n = static_cast<std::int64_t>(rows.size() / row_width);
    const double* data = rows.data();
    std::uint64_t clamped = 0;
#pragma omp parallel for schedule(static) reduction(+ : clamped)
    for (std::int64_t r = 0; r < n; ++r) {
        const double* row = data + r * row_width;
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (binning[j].discrete) continue;
            const double x = row[columns[j]];
            if (x < binning[j].min || x > binning[j].max) ++clamped;
        }
    }
    return clamped;
}

}  // namespace infodecomp::kernels::omp
