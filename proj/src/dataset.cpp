#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "infodecomp/dataset.hpp"
#include "infodecomp/error.hpp"

namespace infodecomp {

namespace {

constexpr std::size_t kUndeclared = std::numeric_limits<std::size_t>::max();

}  // namespace

DataSet::DataSet(std::size_t shifts) : shifts_(shifts) {
    if (shifts < 1) throw Error(ErrorCode::InvalidSpec, "shift count must be >= 1");
}

void DataSet::require_building(const char* what) const {
    if (state_ != State::Building)
        throw Error(ErrorCode::WrongState, std::string(what) + ": dataset is already finalized");
}

void DataSet::require_finalized(const char* what) const {
    if (state_ != State::Finalized)
        throw Error(ErrorCode::WrongState, std::string(what) + ": dataset is not finalized");
}

void DataSet::require_shift(std::size_t shift) const {
    if (shift >= shifts_)
        throw Error(ErrorCode::BadShift,
                    "shift " + std::to_string(shift) + " out of range [0, " + std::to_string(shifts_) + ")");
}

VarId DataSet::declare_variable(const VariableSpec& spec) {
    require_building("declare_variable");
    spec.validate();
    if (!rows_.empty())
        throw Error(ErrorCode::WrongState, "declare_variable: rows were already added");
    for (auto d : spec.dims) {
        if (d < column_position_.size() && column_position_[d] != kUndeclared)
            throw Error(ErrorCode::DuplicateDim, "dim " + std::to_string(d) + " is already claimed");
    }

    specs_.push_back(spec);
    for (auto d : spec.dims) {
        columns_.push_back(d);
        row_width_ = std::max(row_width_, d + 1);
    }
    std::sort(columns_.begin(), columns_.end());
    column_position_.assign(row_width_, kUndeclared);
    for (std::size_t p = 0; p < columns_.size(); ++p) column_position_[columns_[p]] = p;
    return VarId{specs_.size() - 1};
}

void DataSet::add_sample(std::span<const double> row) {
    add_samples(row, row.size());
}

void DataSet::add_samples(std::span<const double> rows, std::size_t row_width) {
    require_building("add_sample");
    if (row_width_ == 0) throw Error(ErrorCode::WidthMismatch, "add_sample: no variables declared");
    if (row_width != row_width_ || rows.size() % row_width_ != 0)
        throw Error(ErrorCode::WidthMismatch, "add_sample: expected rows of width " + std::to_string(row_width_) +
                                                  ", got " + std::to_string(row_width));
    for (double v : rows) {
        if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "add_sample: non-finite value");
    }
    rows_.insert(rows_.end(), rows.begin(), rows.end());
}

void DataSet::finalize(Backend backend) {
    require_building("finalize");
    const std::size_t n = row_count();
    if (n == 0) throw Error(ErrorCode::EmptyData, "finalize: no rows");

    binning_.assign(columns_.size(), {});
    bool any_continuous = false;
    for (const auto& spec : specs_) {
        for (std::size_t i = 0; i < spec.dims.size(); ++i) {
            const std::size_t col = spec.dims[i];
            DimBinning& b = binning_[column_position_[col]];
            b.discrete = spec.is_discrete_per_dim[i];
            if (b.discrete) {
                b.levels.reserve(n);
                for (std::size_t r = 0; r < n; ++r) b.levels.push_back(rows_[r * row_width_ + col]);
                std::sort(b.levels.begin(), b.levels.end());
                b.levels.erase(std::unique(b.levels.begin(), b.levels.end()), b.levels.end());
                b.levels.shrink_to_fit();
                continue;
            }
            any_continuous = true;
            b.bins = spec.bins_per_dim[i];
            if (const auto& r = spec.range_per_dim[i]) {
                b.min = r->min;
                b.max = r->max;
            } else {
                b.min = std::numeric_limits<double>::infinity();
                b.max = -std::numeric_limits<double>::infinity();
                for (std::size_t row = 0; row < n; ++row) {
                    const double x = rows_[row * row_width_ + col];
                    b.min = std::min(b.min, x);
                    b.max = std::max(b.max, x);
                }
                if (b.min == b.max && b.bins > 1)
                    throw Error(ErrorCode::DegenerateRange,
                                "finalize: dim " + std::to_string(col) + " is constant but has " +
                                    std::to_string(b.bins) + " bins");
            }
            b.width = (b.max - b.min) / static_cast<double>(b.bins);
        }
    }

    const std::span<const double> rows(rows_);
    clamp_count_ = backend == Backend::Parallel
                       ? kernels::omp::count_clamped(rows, row_width_, columns_, binning_)
                       : kernels::serial::count_clamped(rows, row_width_, columns_, binning_);

    const std::size_t d = columns_.size();
    std::vector<std::int32_t> codes(n * d);
    histograms_.clear();
    histograms_.reserve(shifts_);
    for (std::size_t k = 0; k < shifts_; ++k) {
        if (k > 0 && !any_continuous) {
            // Discrete binning does not depend on the shift.
            histograms_.push_back(histograms_.front().relabeled(k));
            continue;
        }
        if (backend == Backend::Parallel)
            kernels::omp::bin_rows(rows, row_width_, columns_, binning_, k, shifts_, codes);
        else
            kernels::serial::bin_rows(rows, row_width_, columns_, binning_, k, shifts_, codes);
        histograms_.push_back(SparseJointHistogram::build(codes, d, k, backend));
    }
    state_ = State::Finalized;
}

const VariableSpec& DataSet::variable(VarId id) const {
    if (id.value >= specs_.size())
        throw Error(ErrorCode::IndexOutOfRange, "unknown variable id " + std::to_string(id.value));
    return specs_[id.value];
}

DimGroup DataSet::group_of(VarId id) const {
    return variable(id).dims;
}

const DimBinning& DataSet::binning(std::size_t column) const {
    require_finalized("binning");
    if (column >= column_position_.size() || column_position_[column] == kUndeclared)
        throw Error(ErrorCode::UnknownDim, "dim " + std::to_string(column) + " is not declared");
    return binning_[column_position_[column]];
}

const SparseJointHistogram& DataSet::histogram(std::size_t shift) const {
    require_finalized("histogram");
    require_shift(shift);
    return histograms_[shift];
}

std::vector<std::size_t> DataSet::positions(const DimGroup& group) const {
    if (group.empty()) throw Error(ErrorCode::InvalidSpec, "empty dim group");
    std::vector<std::size_t> out;
    out.reserve(group.size());
    for (auto col : group) {
        if (col >= column_position_.size() || column_position_[col] == kUndeclared)
            throw Error(ErrorCode::UnknownDim, "dim " + std::to_string(col) + " is not declared");
        const std::size_t p = column_position_[col];
        if (std::find(out.begin(), out.end(), p) != out.end())
            throw Error(ErrorCode::DuplicateDim, "dim " + std::to_string(col) + " repeated in group");
        out.push_back(p);
    }
    return out;
}

double DataSet::marginal_probability(const DimGroup& group, std::span<const std::int32_t> coords,
                                     std::size_t shift) const {
    const auto& h = histogram(shift);
    const auto pos = positions(group);
    if (coords.size() != pos.size())
        throw Error(ErrorCode::BadCoords, "coordinate vector length does not match group");
    const Partition p = h.project(pos);
    const auto c = p.find(coords);
    if (!c) return 0.0;
    return static_cast<double>(p.counts[*c]) / static_cast<double>(p.total);
}

Partition DataSet::partition(const DimGroup& group, std::size_t shift) const {
    const auto& h = histogram(shift);
    return h.project(positions(group));
}

}  // namespace infodecomp
