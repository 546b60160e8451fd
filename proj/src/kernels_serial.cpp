#include <algorithm>

#include "infodecomp/kernels.hpp"

namespace infodecomp::kernels::serial {

void bin_rows(std::span<const double> rows, std::size_t row_width, std::span<const std::size_t> columns,
              std::span<const DimBinning> binning, std::size_t shift, std::size_t shifts,
              std::span<std::int32_t> codes) {
    const std::size_t n = rows.size() / row_width;
    const std::size_t d = columns.size();
    for (std::size_t r = 0; r < n; ++r) {
        const double* row = rows.data() + r * row_width;
        for (std::size_t j = 0; j < d; ++j)
            codes[r * d + j] = bin_value(row[columns[j]], binning[j], shift, shifts);
    }
}

void column_max(std::span<const std::int32_t> coords, std::size_t stride,
                std::span<const std::size_t> positions, std::span<std::int32_t> out) {
    const std::size_t n = stride == 0 ? 0 : coords.size() / stride;
    for (std::size_t p = 0; p < positions.size(); ++p) {
        std::int32_t m = -1;
        for (std::size_t r = 0; r < n; ++r) m = std::max(m, coords[r * stride + positions[p]]);
        out[p] = m;
    }
}

void pack_keys(std::span<const std::int32_t> coords, std::size_t stride,
               std::span<const std::size_t> positions, std::span<const std::uint64_t> radices,
               std::span<std::uint64_t> keys) {
    for (std::size_t r = 0; r < keys.size(); ++r) {
        const std::int32_t* c = coords.data() + r * stride;
        std::uint64_t key = 0;
        for (std::size_t p = 0; p < positions.size(); ++p)
            key = key * radices[p] + static_cast<std::uint64_t>(c[positions[p]]);
        keys[r] = key;
    }
}

void count_labels(std::span<const std::uint32_t> labels, std::span<const std::uint64_t> weights,
                  std::span<std::uint64_t> counts) {
    if (weights.empty()) {
        for (auto l : labels) ++counts[l];
    } else {
        for (std::size_t i = 0; i < labels.size(); ++i) counts[labels[i]] += weights[i];
    }
}

std::uint64_t count_clamped(std::span<const double> rows, std::size_t row_width,
                            std::span<const std::size_t> columns, std::span<const DimBinning> binning) {
    const std::size_t n = rows.size() / row_width;
    std::uint64_t clamped = 0;
    for (std::size_t r = 0; r < n; ++r) {
        const double* row = rows.data() + r * row_width;
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (binning[j].discrete) continue;
            const double x = row[columns[j]];
            if (x < binning[j].min || x > binning[j].max) ++clamped;
        }
    }
    return clamped;
}

}  // namespace infodecomp::kernels::serial
