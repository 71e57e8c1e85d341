#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace eqbm {

enum class RunMode { serial, parallel };

// Thread count used by RunMode::parallel; 0 keeps the OpenMP default.
// Reads EQBM_THREADS on first use unless overridden.
void set_thread_count(int n);
int thread_count();

// Maps fn over [0, n). fn must write only to disjoint slots. The serial mode
// is the reference path; the parallel mode must produce identical output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, RunMode mode);

// Deterministic pairwise tree sum, independent of thread count.
double pairwise_sum(const double* xs, std::size_t n);
double pairwise_sum(const std::vector<double>& xs);

}  // namespace eqbm
