#pragma once

namespace omegaforge {

/// Thread cap: explicit override if set, else OMEGAFORGE_THREADS, else the
/// OpenMP default.
int thread_cap();
void set_thread_cap(int threads);

}  // namespace omegaforge
