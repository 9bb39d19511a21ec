#pragma once

#include <exception>

namespace confnav {

/// Selects the reference (serial) or OpenMP implementation of a kernel. Both
/// paths perform the same arithmetic per output entry.
enum class Execution { Serial, Parallel };

int available_threads();

/// Runs body(i) for i in [0, n). Exceptions thrown inside the parallel region
/// are captured and the first one is rethrown after the loop.
template <class Body>
void parallel_for(long n, Execution exec, Body&& body) {
  if (exec == Execution::Serial) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(confnav_parallel_for_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace confnav
