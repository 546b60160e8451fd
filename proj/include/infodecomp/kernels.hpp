#pragma once

// Data-parallel inner loops of the histogram core. Each kernel exists twice
// with identical signatures: `serial` is the reference implementation kept
// for testing and benchmarking, `omp` is what the library runs. All kernels
// produce integer outputs, so the two must agree bit-for-bit.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace infodecomp {

enum class Backend { Serial, Parallel };

/// Resolved binning rule for one declared dim.
struct DimBinning {
    bool discrete = false;
    int bins = 1;
    double min = 0.0;
    double max = 0.0;
    double width = 0.0;
    std::vector<double> levels;  // sorted distinct values, discrete only

    /// Number of distinct codes this dim can take (continuous dims reserve
    /// one overflow bin for shifted grids).
    std::int64_t radix() const noexcept {
        return discrete ? static_cast<std::int64_t>(levels.size()) : bins + 1;
    }
};

/// Bin index of `x` under shift `shift` of `shifts`. Continuous values are
/// clamped into [min, max] first; at shift 0 the top edge belongs to the
/// last regular bin.
std::int32_t bin_value(double x, const DimBinning& binning, std::size_t shift, std::size_t shifts) noexcept;

namespace kernels {

namespace serial {

/// codes[r * columns.size() + d] = bin of rows[r * row_width + columns[d]]
void bin_rows(std::span<const double> rows, std::size_t row_width,
              std::span<const std::size_t> columns, std::span<const DimBinning> binning,
              std::size_t shift, std::size_t shifts, std::span<std::int32_t> codes);

/// Largest coordinate at each selected position, -1 for an empty table.
void column_max(std::span<const std::int32_t> coords, std::size_t stride,
                std::span<const std::size_t> positions, std::span<std::int32_t> out);

/// Mixed-radix key of the selected positions, first position most significant.
void pack_keys(std::span<const std::int32_t> coords, std::size_t stride,
               std::span<const std::size_t> positions, std::span<const std::uint64_t> radices,
               std::span<std::uint64_t> keys);

/// counts[labels[i]] += weights[i], or += 1 when weights is empty. `counts`
/// must arrive zeroed.
void count_labels(std::span<const std::uint32_t> labels, std::span<const std::uint64_t> weights,
                  std::span<std::uint64_t> counts);

/// Number of continuous coordinates lying outside their explicit range.
std::uint64_t count_clamped(std::span<const double> rows, std::size_t row_width,
                            std::span<const std::size_t> columns,
                            std::span<const DimBinning> binning);

}  // namespace serial

namespace omp {

void bin_rows(std::span<const double> rows, std::size_t row_width,
              std::span<const std::size_t> columns, std::span<const DimBinning> binning,
              std::size_t shift, std::size_t shifts, std::span<std::int32_t> codes);
void column_max(std::span<const std::int32_t> coords, std::size_t stride,
                std::span<const std::size_t> positions, std::span<std::int32_t> out);
void pack_keys(std::span<const std::int32_t> coords, std::size_t stride,
               std::span<const std::size_t> positions, std::span<const std::uint64_t> radices,
               std::span<std::uint64_t> keys);
void count_labels(std::span<const std::uint32_t> labels, std::span<const std::uint64_t> weights,
                  std::span<std::uint64_t> counts);
std::uint64_t count_clamped(std::span<const double> rows, std::size_t row_width,
                            std::span<const std::size_t> columns,
                            std::span<const DimBinning> binning);

}  // namespace omp

}  // namespace kernels

/// Result of grouping rows of a coordinate table by a subset of positions.
/// Classes are numbered in lexicographic order of their projected coordinates.
struct Grouping {
    std::vector<std::uint32_t> labels;        // class of each input row
    std::vector<std::uint64_t> counts;        // weighted size of each class
    std::vector<std::size_t> representative;  // one input row per class
};

/// Groups `coords` (rows × stride, non-negative) by the given positions.
/// Uses packed 64-bit keys when the radix product fits, otherwise compares
/// coordinate tuples directly; `force_tuple_compare` selects the latter.
Grouping group_coords(std::span<const std::int32_t> coords, std::size_t stride,
                      std::span<const std::size_t> positions, std::span<const std::uint64_t> weights,
                      Backend backend = Backend::Parallel, bool force_tuple_compare = false);

}  // namespace infodecomp
