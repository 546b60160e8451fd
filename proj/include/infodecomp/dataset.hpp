#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "infodecomp/histogram.hpp"
#include "infodecomp/types.hpp"

namespace infodecomp {

/// Append-only sample store. Rows are added while Building; finalize()
/// resolves binning (auto-ranges need the full data) and builds one sparse
/// histogram per shift. After that the object is immutable and safe to read
/// from any number of threads.
class DataSet {
public:
    enum class State { Building, Finalized };

    explicit DataSet(std::size_t shifts = 1);

    VarId declare_variable(const VariableSpec& spec);
    void add_sample(std::span<const double> row);
    void add_samples(std::span<const double> rows, std::size_t row_width);
    void finalize(Backend backend = Backend::Parallel);

    State state() const noexcept { return state_; }
    bool finalized() const noexcept { return state_ == State::Finalized; }
    std::size_t shift_count() const noexcept { return shifts_; }
    std::size_t row_width() const noexcept { return row_width_; }
    std::size_t row_count() const noexcept { return row_width_ == 0 ? 0 : rows_.size() / row_width_; }
    std::uint64_t clamp_count() const noexcept { return clamp_count_; }

    std::size_t variable_count() const noexcept { return specs_.size(); }
    const VariableSpec& variable(VarId id) const;
    DimGroup group_of(VarId id) const;

    /// Declared columns in histogram order (ascending column index).
    std::span<const std::size_t> declared_dims() const noexcept { return columns_; }
    const DimBinning& binning(std::size_t column) const;

    const SparseJointHistogram& histogram(std::size_t shift) const;

    /// Histogram positions of a group's columns. Throws on unknown or
    /// repeated columns and on an empty group.
    std::vector<std::size_t> positions(const DimGroup& group) const;

    /// Fraction of rows whose projected bin coordinates equal `coords`.
    double marginal_probability(const DimGroup& group, std::span<const std::int32_t> coords,
                                std::size_t shift) const;

    /// Projection of one shift's histogram onto a group.
    Partition partition(const DimGroup& group, std::size_t shift) const;

private:
    void require_building(const char* what) const;
    void require_finalized(const char* what) const;
    void require_shift(std::size_t shift) const;

    std::size_t shifts_;
    State state_ = State::Building;
    std::vector<VariableSpec> specs_;
    std::vector<std::size_t> columns_;
    std::vector<std::size_t> column_position_;  // column -> position, npos when undeclared
    std::vector<DimBinning> binning_;           // by position
    std::size_t row_width_ = 0;
    std::vector<double> rows_;
    std::uint64_t clamp_count_ = 0;
    std::vector<SparseJointHistogram> histograms_;
};

/// Per-shift values of a functional and their mean.
struct ShiftAverage {
    double mean = 0.0;
    std::vector<double> per_shift;
};

/// Evaluates `f(histogram_k)` for every shift and averages the results.
/// Every public measure goes through here.
template <class F>
ShiftAverage averaged_over_shifts(const DataSet& ds, F&& f) {
    ShiftAverage out;
    out.per_shift.reserve(ds.shift_count());
    double sum = 0.0;
    for (std::size_t k = 0; k < ds.shift_count(); ++k) {
        const double v = f(ds.histogram(k));
        out.per_shift.push_back(v);
        sum += v;
    }
    out.mean = sum / static_cast<double>(ds.shift_count());
    return out;
}

}  // namespace infodecomp
