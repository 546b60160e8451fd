#pragma once

#include <cstdint>
#include <span>

#include "infodecomp/kernels.hpp"

namespace infodecomp {

/// Groups rows by a precomputed 64-bit key; classes follow key order.
Grouping group_keys(std::span<const std::uint64_t> keys, std::span<const std::uint64_t> weights,
                    Backend backend);

}  // namespace infodecomp
