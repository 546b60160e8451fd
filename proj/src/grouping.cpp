#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "grouping_detail.hpp"
#include "infodecomp/kernels.hpp"

namespace infodecomp {

namespace {

void count(const Grouping& g, std::span<const std::uint64_t> weights, std::span<std::uint64_t> out,
           Backend backend) {
    if (backend == Backend::Parallel)
        kernels::omp::count_labels(g.labels, weights, out);
    else
        kernels::serial::count_labels(g.labels, weights, out);
}

// Sorts (key, row) pairs and hands out labels in key order. Ties keep row
// order, so the representative of a class is its first row.
Grouping label_sorted(std::vector<std::pair<std::uint64_t, std::uint32_t>>& order, std::size_t n) {
    std::sort(order.begin(), order.end());
    Grouping g;
    g.labels.resize(n);
    std::uint32_t cls = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && order[i].first != order[i - 1].first) ++cls;
        if (i == 0 || order[i].first != order[i - 1].first) g.representative.push_back(order[i].second);
        g.labels[order[i].second] = cls;
    }
    return g;
}

}  // namespace

Grouping group_keys(std::span<const std::uint64_t> keys, std::span<const std::uint64_t> weights,
                    Backend backend) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> order(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) order[i] = {keys[i], static_cast<std::uint32_t>(i)};
    Grouping g = label_sorted(order, keys.size());
    g.counts.assign(g.representative.size(), 0);
    count(g, weights, g.counts, backend);
    return g;
}

Grouping group_coords(std::span<const std::int32_t> coords, std::size_t stride,
                      std::span<const std::size_t> positions, std::span<const std::uint64_t> weights,
                      Backend backend, bool force_tuple_compare) {
    const std::size_t n = stride == 0 ? 0 : coords.size() / stride;
    if (n == 0) return {};

    std::vector<std::int32_t> maxima(positions.size());
    if (backend == Backend::Parallel)
        kernels::omp::column_max(coords, stride, positions, maxima);
    else
        kernels::serial::column_max(coords, stride, positions, maxima);

    std::vector<std::uint64_t> radices(positions.size());
    bool fits = !force_tuple_compare;
    std::uint64_t product = 1;
    for (std::size_t p = 0; p < positions.size(); ++p) {
        radices[p] = static_cast<std::uint64_t>(maxima[p]) + 1;
        if (product > std::numeric_limits<std::uint64_t>::max() / radices[p])
            fits = false;
        else
            product *= radices[p];
    }

    if (fits) {
        std::vector<std::uint64_t> keys(n);
        if (backend == Backend::Parallel)
            kernels::omp::pack_keys(coords, stride, positions, radices, keys);
        else
            kernels::serial::pack_keys(coords, stride, positions, radices, keys);
        return group_keys(keys, weights, backend);
    }

    // Tuple comparison yields the same lexicographic class order as packed keys.
    auto less = [&](std::uint32_t a, std::uint32_t b) {
        const std::int32_t* ra = coords.data() + std::size_t{a} * stride;
        const std::int32_t* rb = coords.data() + std::size_t{b} * stride;
        for (auto p : positions) {
            if (ra[p] != rb[p]) return ra[p] < rb[p];
        }
        return a < b;
    };
    auto same = [&](std::uint32_t a, std::uint32_t b) {
        const std::int32_t* ra = coords.data() + std::size_t{a} * stride;
        const std::int32_t* rb = coords.data() + std::size_t{b} * stride;
        return std::all_of(positions.begin(), positions.end(), [&](std::size_t p) { return ra[p] == rb[p]; });
    };

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), less);

    Grouping g;
    g.labels.resize(n);
    std::uint32_t cls = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool fresh = i == 0 || !same(order[i], order[i - 1]);
        if (i > 0 && fresh) ++cls;
        if (fresh) g.representative.push_back(order[i]);
        g.labels[order[i]] = cls;
    }
    g.counts.assign(g.representative.size(), 0);
    count(g, weights, g.counts, backend);
    return g;
}

}  // namespace infodecomp
