#include <algorithm>
#include <cmath>
#include <numeric>

#include "grouping_detail.hpp"
#include "infodecomp/histogram.hpp"

namespace infodecomp {

namespace {

// Index of the row equal to `key` in a lexicographically sorted table.
std::optional<std::size_t> find_row(std::span<const std::int32_t> table, std::size_t arity,
                                    std::span<const std::int32_t> key) {
    if (key.size() != arity || arity == 0) return std::nullopt;
    const std::size_t n = table.size() / arity;
    auto row = [&](std::size_t i) { return table.subspan(i * arity, arity); };
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto r = row(mid);
        if (std::lexicographical_compare(r.begin(), r.end(), key.begin(), key.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < n && std::ranges::equal(row(lo), key)) return lo;
    return std::nullopt;
}

}  // namespace

std::optional<std::size_t> Partition::find(std::span<const std::int32_t> key) const {
    return find_row(coords, arity, key);
}

SparseJointHistogram SparseJointHistogram::build(std::span<const std::int32_t> codes, std::size_t dims,
                                                 std::size_t shift, Backend backend) {
    SparseJointHistogram h;
    h.shift_ = shift;
    h.dims_ = dims;
    if (dims == 0) return h;

    std::vector<std::size_t> all(dims);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const Grouping g = group_coords(codes, dims, all, {}, backend);

    h.counts_ = g.counts;
    h.coords_.reserve(g.representative.size() * dims);
    for (auto r : g.representative)
        h.coords_.insert(h.coords_.end(), codes.begin() + r * dims, codes.begin() + (r + 1) * dims);
    h.total_ = std::accumulate(h.counts_.begin(), h.counts_.end(), std::uint64_t{0});
    return h;
}

std::uint64_t SparseJointHistogram::count_of(std::span<const std::int32_t> key) const {
    const auto i = find_row(coords_, dims_, key);
    return i ? counts_[*i] : 0;
}

Partition SparseJointHistogram::project(std::span<const std::size_t> positions, Backend backend) const {
    Partition p;
    p.arity = positions.size();
    p.total = total_;
    Grouping g = group_coords(coords_, dims_, positions, counts_, backend);
    p.labels = std::move(g.labels);
    p.counts = std::move(g.counts);
    p.coords.reserve(g.representative.size() * positions.size());
    for (auto r : g.representative) {
        const auto c = cell(r);
        for (auto pos : positions) p.coords.push_back(c[pos]);
    }
    return p;
}

JointCounts joint(const Partition& left, const Partition& right, std::span<const std::uint64_t> cell_counts,
                  Backend backend) {
    JointCounts j;
    j.right_classes = right.size();
    const std::size_t n = left.labels.size();
    std::vector<std::uint64_t> keys(n);
    for (std::size_t i = 0; i < n; ++i)
        keys[i] = std::uint64_t{left.labels[i]} * j.right_classes + right.labels[i];
    const Grouping g = group_keys(keys, cell_counts, backend);
    j.counts = g.counts;
    j.keys.reserve(g.representative.size());
    for (auto r : g.representative) j.keys.push_back(keys[r]);
    return j;
}

double entropy_bits(std::span<const std::uint64_t> counts, std::uint64_t total) noexcept {
    if (total == 0) return 0.0;
    const double n = static_cast<double>(total);
    double h = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace infodecomp
