#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vwreath {

enum class Exec { serial, parallel };

// Runs body(i) for i in [0, n). Iterations must be independent; callers write
// results into per-index slots so the outcome does not depend on scheduling.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body, int jobs = 0) {
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 1) {
    const long count = static_cast<long>(n);
    if (jobs > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
      for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
  (void)jobs;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

inline int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace vwreath
