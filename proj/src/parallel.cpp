#include <cstdlib>
#include <string>

#include "infodecomp/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace infodecomp {

std::size_t configure_threads_from_env() {
#ifdef _OPENMP
    if (const char* cap = std::getenv("INFODECOMP_THREADS")) {
        try {
            const int n = std::stoi(cap);
            if (n > 0 && n < omp_get_max_threads()) omp_set_num_threads(n);
        } catch (const std::exception&) {
            // unparseable caps are ignored
        }
    }
#endif
    return max_threads();
}

std::size_t max_threads() noexcept {
#ifdef _OPENMP
    return static_cast<std::size_t>(omp_get_max_threads());
#else
    return 1;
#endif
}

}  // namespace infodecomp
