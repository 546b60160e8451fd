#include <algorithm>
#include <string>
#include <unordered_set>

#include "infodecomp/error.hpp"
#include "infodecomp/measures.hpp"

namespace infodecomp {

namespace {

MeasureValue publish(ShiftAverage avg) {
    MeasureValue out;
    out.per_shift_values = std::move(avg.per_shift);
    out.value_bits = avg.mean;
    if (out.value_bits < 0.0) out.clamped = true;
    if (out.value_bits <= 0.0) out.value_bits = 0.0;
    return out;
}

std::vector<std::size_t> concat(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    std::vector<std::size_t> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

DimGroup join_disjoint(std::initializer_list<DimGroup> groups) {
    DimGroup out;
    std::unordered_set<std::size_t> seen;
    for (const auto& g : groups) {
        for (auto d : g) {
            if (!seen.insert(d).second)
                throw Error(ErrorCode::OverlappingGroups, "dim " + std::to_string(d) + " appears in more than one group");
            out.push_back(d);
        }
    }
    return out;
}

namespace shift {

double entropy(const SparseJointHistogram& h, std::span<const std::size_t> x) {
    // Canonical dim order fixes the summation order, so H(XY) == H(YX) exactly.
    std::vector<std::size_t> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    const Partition p = h.project(sorted);
    return entropy_bits(p.counts, p.total);
}

double mutual_info(const SparseJointHistogram& h, std::span<const std::size_t> x,
                   std::span<const std::size_t> y) {
    return entropy(h, x) + entropy(h, y) - entropy(h, concat(x, y));
}

double conditional_mutual_info(const SparseJointHistogram& h, std::span<const std::size_t> x,
                               std::span<const std::size_t> y, std::span<const std::size_t> z) {
    const auto xz = concat(x, z);
    const auto yz = concat(y, z);
    const auto xyz = concat(x, yz);
    return entropy(h, xz) + entropy(h, yz) - entropy(h, xyz) - entropy(h, z);
}

}  // namespace shift

MeasureValue entropy(const DataSet& ds, const DimGroup& x) {
    const auto px = ds.positions(x);
    return publish(averaged_over_shifts(ds, [&](const SparseJointHistogram& h) { return shift::entropy(h, px); }));
}

MeasureValue conditional_entropy(const DataSet& ds, const DimGroup& x, const DimGroup& y) {
    const auto pxy = ds.positions(join_disjoint({x, y}));
    const auto py = ds.positions(y);
    return publish(averaged_over_shifts(
        ds, [&](const SparseJointHistogram& h) { return shift::entropy(h, pxy) - shift::entropy(h, py); }));
}

MeasureValue mutual_info(const DataSet& ds, const DimGroup& x, const DimGroup& y) {
    join_disjoint({x, y});
    const auto px = ds.positions(x);
    const auto py = ds.positions(y);
    return publish(
        averaged_over_shifts(ds, [&](const SparseJointHistogram& h) { return shift::mutual_info(h, px, py); }));
}

MeasureValue conditional_mutual_info(const DataSet& ds, const DimGroup& x, const DimGroup& y, const DimGroup& z) {
    join_disjoint({x, y, z});
    const auto px = ds.positions(x);
    const auto py = ds.positions(y);
    const auto pz = ds.positions(z);
    return publish(averaged_over_shifts(
        ds, [&](const SparseJointHistogram& h) { return shift::conditional_mutual_info(h, px, py, pz); }));
}

}  // namespace infodecomp
