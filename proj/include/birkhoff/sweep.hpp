/*
 * sweep.hpp — data-parallel grid sweeps with a serial reference path.
 *
 * Every sweep writes its result by grid index, so the parallel and serial
 * paths produce byte-identical row vectors and thread count never changes
 * output.  The serial path is kept as the reference the tests and the
 * benchmark compare against.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "birkhoff/classifier.hpp"
#include "birkhoff/oracle.hpp"

namespace birkhoff {

enum class ExecMode { kSerial, kParallel };

template <typename Fn>
void for_each_index(std::size_t n, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::kParallel) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// One grid point of the classifier-vs-oracle sweep.
struct ClassifyRow {
  double phi = 0.0;
  double a = 0.0;
  double b = 0.0;
  MarkovClass verdict = MarkovClass::kNotMarkov;
  bool oracle_divisible = false;
  bool agree = false;
};

struct ClassifyGrid {
  int phi_samples = 25;
  int a_samples = 20;
  int b_samples = 20;
  double eps = kDefaultEps;
  int n_max = 12;
};

/// Should the classifier verdict and the truncated divisibility oracle be
/// called consistent?  Markov-or-divisible verdicts must be divisible;
/// a < b points must not be.  Other NOT_MARKOV points are outside what the
/// truncated oracle can certify.
bool verdicts_consistent(MarkovClass verdict, double a, double b,
                         bool oracle_divisible, double eps);

/// Classifies every bistochastic point of a (phi, a, b) grid and runs the
/// divisibility oracle next to it.  Rows come out in grid order.
std::vector<ClassifyRow> classification_sweep(const ClassifyGrid& grid,
                                              ExecMode mode);

/// f_numeric over `samples` equispaced angles in [0, 2pi).
std::vector<double> boundary_sweep(int samples, ExecMode mode,
                                   double tol = 1e-7);

}  // namespace birkhoff
