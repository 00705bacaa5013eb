#include "lw/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lw {

int worker_threads() {
  static const int cached = [] {
    int n = 1;
#ifdef _OPENMP
    n = omp_get_max_threads();
#endif
    if (const char* env = std::getenv("LIPWIDTH_THREADS")) {
      try {
        int cap = std::stoi(env);
        if (cap >= 1 && cap < n) n = cap;
        if (cap >= 1 && n < 1) n = cap;
      } catch (...) {
        // Unparsable cap: ignore and keep the runtime default.
      }
    }
    return n < 1 ? 1 : n;
  }();
  return cached;
}

}  // namespace lw
