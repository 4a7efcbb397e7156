#pragma once

#include <cstddef>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace failcast::par {

// Thread cap: min(OpenMP max, FAILCAST_THREADS). 1 when built without OpenMP.
inline int max_threads() {
#ifdef _OPENMP
  static const int cached = [] {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("FAILCAST_THREADS")) {
      const int cap = std::atoi(env);
      if (cap >= 1 && cap < n) n = cap;
    }
    return n;
  }();
  return cached;
#else
  return 1;
#endif
}

inline constexpr std::size_t kChunk = 2048;

// Sum of term(0..n-1) with a fixed chunked association: each chunk is
// accumulated left to right and chunk partials are combined in index order.
// The result is bit-identical for any thread count, including a serial run,
// because only the chunk-to-thread assignment varies.
template <class Term>
double chunked_sum(std::size_t n, Term&& term, std::size_t parallel_threshold = 16384) {
  if (n == 0) return 0.0;
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  if (nchunks == 1) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += term(i);
    return acc;
  }
  std::vector<double> partial(nchunks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= parallel_threshold && max_threads() > 1)
#endif
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nchunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
    const std::size_t hi = lo + kChunk < n ? lo + kChunk : n;
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

// Element-wise parallel loop. body(i) must touch only state owned by i.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t parallel_threshold = 4096) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= parallel_threshold && max_threads() > 1)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    body(static_cast<std::size_t>(i));
}

}  // namespace failcast::par
