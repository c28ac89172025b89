#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morpheval {

// Every parallel kernel in the library has a serial twin selected by this
// flag. Results are required to be identical: kernels write per-index slots
// and all aggregation happens serially afterwards.
enum class Execution { Serial, Parallel };

template <class F>
void for_each_index(std::size_t n, Execution exec, F&& f) {
#ifdef _OPENMP
  if (exec == Execution::Parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace morpheval
