#include <cmath>
#include <string>
#include <unordered_set>

#include "infodecomp/error.hpp"
#include "infodecomp/types.hpp"

namespace infodecomp {

VariableSpec VariableSpec::continuous(std::size_t dim, int bins, std::optional<Range> range) {
    return continuous(std::vector<std::size_t>{dim}, bins, range);
}

VariableSpec VariableSpec::discrete(std::size_t dim) {
    return discrete(std::vector<std::size_t>{dim});
}

VariableSpec VariableSpec::continuous(std::vector<std::size_t> dims, int bins, std::optional<Range> range) {
    VariableSpec s;
    const auto n = dims.size();
    s.dims = std::move(dims);
    s.bins_per_dim.assign(n, bins);
    s.range_per_dim.assign(n, range);
    s.is_discrete_per_dim.assign(n, false);
    return s;
}

VariableSpec VariableSpec::discrete(std::vector<std::size_t> dims) {
    VariableSpec s;
    const auto n = dims.size();
    s.dims = std::move(dims);
    s.bins_per_dim.assign(n, 1);
    s.range_per_dim.assign(n, std::nullopt);
    s.is_discrete_per_dim.assign(n, true);
    return s;
}

void VariableSpec::validate() const {
    if (dims.empty()) throw Error(ErrorCode::InvalidSpec, "variable spec declares no dims");
    const auto n = dims.size();
    if (bins_per_dim.size() != n || range_per_dim.size() != n || is_discrete_per_dim.size() != n)
        throw Error(ErrorCode::InvalidSpec, "per-dim vectors must match the number of dims");

    std::unordered_set<std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen.insert(dims[i]).second)
            throw Error(ErrorCode::DuplicateDim, "dim " + std::to_string(dims[i]) + " repeated within one spec");
        if (is_discrete_per_dim[i]) continue;
        if (bins_per_dim[i] < 1)
            throw Error(ErrorCode::InvalidSpec, "dim " + std::to_string(dims[i]) + ": bins must be >= 1");
        if (const auto& r = range_per_dim[i]) {
            if (!std::isfinite(r->min) || !std::isfinite(r->max) || !(r->min < r->max))
                throw Error(ErrorCode::InvalidSpec,
                            "dim " + std::to_string(dims[i]) + ": range requires finite min < max");
        }
    }
}

}  // namespace infodecomp
