#include "hyperspec/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperspec {

int worker_count() {
  static const int cached = [] {
#ifdef _OPENMP
    int workers = omp_get_max_threads();
    if (const char* env = std::getenv("HYPERSPEC_THREADS")) {
      try {
        const int cap = std::stoi(env);
        if (cap >= 1 && cap < workers) workers = cap;
      } catch (...) {
        // ignore malformed values, keep the OpenMP default
      }
    }
    return workers;
#else
    return 1;
#endif
  }();
  return cached;
}

}  // namespace hyperspec
