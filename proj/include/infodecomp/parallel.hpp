#pragma once

#include <cstddef>

namespace infodecomp {

/// Applies the INFODECOMP_THREADS cap, if set, to the OpenMP runtime.
/// Returns the thread count in effect afterwards.
std::size_t configure_threads_from_env();

std::size_t max_threads() noexcept;

}  // namespace infodecomp
