#ifndef LANDAULAB_PARALLEL_HPP
#define LANDAULAB_PARALLEL_HPP

#include <cstdint>
#include <vector>

namespace landau {

/// Global switch between the deterministic fixed-order reduction (default;
/// independent of thread count) and the plain parallel reduction.
void set_parallel_reduction(bool enabled);
bool parallel_reduction();

/// Reduce body(a) over a in [0, n). In deterministic mode every per-outer
/// partial is stored and combined in index order with compensated summation.
template <class Body>
double outer_reduce(std::int64_t n, Body&& body) {
  if (parallel_reduction()) {
    double acc = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : acc)
#endif
    for (std::int64_t a = 0; a < n; ++a) acc += body(a);
    return acc;
  }
  std::vector<double> partial(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t a = 0; a < n; ++a) partial[static_cast<size_t>(a)] = body(a);
  double s = 0.0, comp = 0.0;
  for (double x : partial) {
    const double y = x - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace landau

#endif
