#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "infodecomp/dataset.hpp"

namespace infodecomp {

/// A measure averaged over ASH shifts. `per_shift_values` keeps the raw
/// per-shift numbers; `value_bits` is their mean, raised to 0 (and
/// `clamped` set) when cancellation left it slightly negative.
struct MeasureValue {
    double value_bits = 0.0;
    std::vector<double> per_shift_values;
    bool clamped = false;
};

MeasureValue entropy(const DataSet& ds, const DimGroup& x);
MeasureValue conditional_entropy(const DataSet& ds, const DimGroup& x, const DimGroup& y);
MeasureValue mutual_info(const DataSet& ds, const DimGroup& x, const DimGroup& y);
MeasureValue conditional_mutual_info(const DataSet& ds, const DimGroup& x, const DimGroup& y,
                                     const DimGroup& z);

/// Concatenation of groups; throws OverlappingGroups if any column repeats.
DimGroup join_disjoint(std::initializer_list<DimGroup> groups);

namespace shift {

// Raw single-shift values, unclamped. Positions are histogram positions as
// returned by DataSet::positions().
double entropy(const SparseJointHistogram& h, std::span<const std::size_t> x);
double mutual_info(const SparseJointHistogram& h, std::span<const std::size_t> x,
                   std::span<const std::size_t> y);
double conditional_mutual_info(const SparseJointHistogram& h, std::span<const std::size_t> x,
                               std::span<const std::size_t> y, std::span<const std::size_t> z);

}  // namespace shift

}  // namespace infodecomp
