#pragma once
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace colorpass {

// Every data-parallel kernel in this library exists in two forms selected at
// runtime: a plain serial loop and an OpenMP loop over the same body. Outputs
// are written to disjoint slots and each slot is computed in a fixed order, so
// the two modes (and any thread count) produce bit-identical results.
enum class ExecMode { Serial, Parallel };

template <class F>
void for_index(std::int64_t n, ExecMode mode, F&& body) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)mode;
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_thread_count(int t) {
#ifdef _OPENMP
  omp_set_num_threads(t);
#else
  (void)t;
#endif
}

}  // namespace colorpass
