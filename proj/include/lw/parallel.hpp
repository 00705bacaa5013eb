#pragma once

#include <cstddef>

namespace lw {

// Number of worker threads used by the parallel kernels.  Honors the
// LIPWIDTH_THREADS environment variable as an upper cap; defaults to the
// OpenMP runtime's choice (1 in serial builds).
int worker_threads();

// Parallel loop over [0, count).  Each index must be independent; results
// written by index stay deterministic regardless of the schedule.
template <class F>
void parallel_for(std::size_t count, F&& body);

// Parallel max-reduction of body(i) over [0, count).  Max is associative and
// commutative, so the result does not depend on thread scheduling.
template <class F>
double parallel_max(std::size_t count, F&& body);

}  // namespace lw

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lw {

template <class F>
void parallel_for(std::size_t count, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(worker_threads())
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    body(static_cast<std::size_t>(i));
  }
#else
  for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

template <class F>
double parallel_max(std::size_t count, F&& body) {
  double best = -1.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : best) \
    num_threads(worker_threads())
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    double v = body(static_cast<std::size_t>(i));
    if (v > best) best = v;
  }
#else
  for (std::size_t i = 0; i < count; ++i) {
    double v = body(i);
    if (v > best) best = v;
  }
#endif
  return best;
}

}  // namespace lw
