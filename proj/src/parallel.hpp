#pragma once

#include <exception>
#include <mutex>

namespace gfc::detail {

/// Runs body(i) for i in [begin, end) across OpenMP threads (serially when
/// built without OpenMP). The first exception thrown by any iteration is
/// rethrown on the calling thread once the loop has finished.
template <class Body>
void parallel_for(int begin, int end, Body&& body) {
  std::exception_ptr failure;
  std::mutex guard;
#if defined(GFC_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (int i = begin; i < end; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace gfc::detail
