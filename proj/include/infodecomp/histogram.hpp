#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "infodecomp/kernels.hpp"

namespace infodecomp {

/// Classes of histogram cells that agree on a subset of dims. `labels` maps
/// each cell of the source histogram to its class; classes are ordered
/// lexicographically by their coordinates.
struct Partition {
    std::size_t arity = 0;
    std::uint64_t total = 0;
    std::vector<std::uint32_t> labels;
    std::vector<std::uint64_t> counts;
    std::vector<std::int32_t> coords;  // size() × arity

    std::size_t size() const noexcept { return counts.size(); }
    std::span<const std::int32_t> class_coords(std::size_t c) const {
        return {coords.data() + c * arity, arity};
    }
    std::optional<std::size_t> find(std::span<const std::int32_t> key) const;
};

/// Joint occupancy of two partitions of the same histogram. Entry i stands
/// for the pair (keys[i] / right_classes, keys[i] % right_classes); keys are
/// sorted, so entries sharing a left class are contiguous.
struct JointCounts {
    std::size_t right_classes = 0;
    std::vector<std::uint64_t> keys;
    std::vector<std::uint64_t> counts;

    std::size_t left_of(std::size_t i) const noexcept { return keys[i] / right_classes; }
    std::size_t right_of(std::size_t i) const noexcept { return keys[i] % right_classes; }
};

/// Sparse joint histogram for one shift: only occupied cells are stored,
/// sorted lexicographically by their bin coordinates over the full dim set.
class SparseJointHistogram {
public:
    SparseJointHistogram() = default;

    /// Aggregates per-row codes (rows × dims) into occupied cells.
    static SparseJointHistogram build(std::span<const std::int32_t> codes, std::size_t dims,
                                      std::size_t shift, Backend backend = Backend::Parallel);

    std::size_t shift() const noexcept { return shift_; }
    std::size_t dims() const noexcept { return dims_; }
    std::size_t cell_count() const noexcept { return counts_.size(); }
    std::uint64_t total() const noexcept { return total_; }

    std::span<const std::int32_t> cell(std::size_t i) const {
        return {coords_.data() + i * dims_, dims_};
    }
    std::uint64_t count(std::size_t i) const { return counts_[i]; }
    std::span<const std::int32_t> coords() const noexcept { return coords_; }
    std::span<const std::uint64_t> counts() const noexcept { return counts_; }

    /// Count stored for a full coordinate vector, 0 when unoccupied.
    std::uint64_t count_of(std::span<const std::int32_t> key) const;

    /// Copy of this histogram filed under another shift index.
    SparseJointHistogram relabeled(std::size_t shift) const {
        SparseJointHistogram h = *this;
        h.shift_ = shift;
        return h;
    }

    /// Marginalizes onto the given dim positions.
    Partition project(std::span<const std::size_t> positions,
                      Backend backend = Backend::Parallel) const;

    friend bool operator==(const SparseJointHistogram&, const SparseJointHistogram&) = default;

private:
    std::size_t shift_ = 0;
    std::size_t dims_ = 0;
    std::uint64_t total_ = 0;
    std::vector<std::int32_t> coords_;
    std::vector<std::uint64_t> counts_;
};

/// Pairs two partitions taken from the same histogram.
JointCounts joint(const Partition& left, const Partition& right, std::span<const std::uint64_t> cell_counts,
                  Backend backend = Backend::Parallel);

/// Shannon entropy in bits of a count vector with the given total.
double entropy_bits(std::span<const std::uint64_t> counts, std::uint64_t total) noexcept;

}  // namespace infodecomp
