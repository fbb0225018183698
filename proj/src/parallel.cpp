#include "omegaforge/parallel.hpp"

#include <omp.h>

#include <cstdlib>

namespace omegaforge {

namespace {

int g_override = 0;

}  // namespace

int thread_cap() {
  if (g_override > 0) return g_override;
  if (const char* env = std::getenv("OMEGAFORGE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

void set_thread_cap(int threads) { g_override = threads; }

}  // namespace omegaforge
