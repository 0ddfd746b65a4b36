#ifndef ZCROSS_PARALLEL_HPP
#define ZCROSS_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zcross {

inline int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Index-parallel loop. Results must be written to per-index slots; the body
// must not depend on execution order. jobs <= 1 runs the plain serial loop.
// Exceptions thrown by the body are captured and rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& body) {
#ifdef _OPENMP
  if (jobs > 1 && n > 1) {
    std::exception_ptr err;
    std::mutex err_mu;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Same contract but with a static chunked schedule, for cheap uniform bodies.
template <typename Fn>
void parallel_for_static(std::size_t n, int jobs, Fn&& body) {
#ifdef _OPENMP
  if (jobs > 1 && n > 4096) {
    std::exception_ptr err;
    std::mutex err_mu;
#pragma omp parallel for schedule(static) num_threads(jobs)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace zcross

#endif
