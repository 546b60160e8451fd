#include <algorithm>
#include <cmath>

#include "infodecomp/kernels.hpp"

namespace infodecomp {

std::int32_t bin_value(double x, const DimBinning& b, std::size_t shift, std::size_t shifts) noexcept {
    if (b.discrete) {
        const auto it = std::lower_bound(b.levels.begin(), b.levels.end(), x);
        return static_cast<std::int32_t>(it - b.levels.begin());
    }
    if (b.width <= 0.0) return 0;

    const double xc = std::clamp(x, b.min, b.max);
    const double offset = static_cast<double>(shift) * b.width / static_cast<double>(shifts);
    auto v = static_cast<std::int64_t>(std::floor((xc - b.min + offset) / b.width));
    const std::int64_t top = shift == 0 ? b.bins - 1 : b.bins;
    v = std::clamp<std::int64_t>(v, 0, top);
    return static_cast<std::int32_t>(v);
}

}  // namespace infodecomp
