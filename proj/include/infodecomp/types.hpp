#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace infodecomp {

struct Range {
    double min = 0.0;
    double max = 1.0;
};

/// Declares one (possibly multidimensional) random variable. All per-dim
/// vectors run parallel to `dims`; discrete dims ignore bins and range.
struct VariableSpec {
    std::vector<std::size_t> dims;
    std::vector<int> bins_per_dim;
    std::vector<std::optional<Range>> range_per_dim;
    std::vector<bool> is_discrete_per_dim;

    static VariableSpec continuous(std::size_t dim, int bins, std::optional<Range> range = std::nullopt);
    static VariableSpec discrete(std::size_t dim);
    static VariableSpec continuous(std::vector<std::size_t> dims, int bins,
                                   std::optional<Range> range = std::nullopt);
    static VariableSpec discrete(std::vector<std::size_t> dims);

    void validate() const;
};

struct VarId {
    std::size_t value = 0;
    friend bool operator==(VarId, VarId) = default;
};

/// Ordered list of column indices forming a queryable sub-space. May span
/// several variables.
using DimGroup = std::vector<std::size_t>;

}  // namespace infodecomp
