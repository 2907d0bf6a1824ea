#pragma once

#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace suq {

// Every verification sweep runs through one of these drivers.  Serial is the
// reference; Parallel distributes the same per-index body across OpenMP
// threads.  Reductions are order-independent (max / logical-and / integer
// sums), so both modes produce identical results.
enum class ExecMode { Serial, Parallel };

inline const char* exec_mode_name(ExecMode m) {
  return m == ExecMode::Serial ? "serial" : "parallel";
}

template <class F>
double max_over(std::uint64_t n, ExecMode mode, F&& body) {
  double best = 0.0;
  if (mode == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : best)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(n); ++idx) {
      const double v = body(static_cast<std::uint64_t>(idx));
      if (v > best) best = v;
    }
    return best;
#endif
  }
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const double v = body(idx);
    if (v > best) best = v;
  }
  return best;
}

template <class F>
bool all_over(std::uint64_t n, ExecMode mode, F&& body) {
  if (mode == ExecMode::Parallel) {
#ifdef _OPENMP
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(n); ++idx)
      ok = ok && body(static_cast<std::uint64_t>(idx));
    return ok;
#endif
  }
  for (std::uint64_t idx = 0; idx < n; ++idx)
    if (!body(idx)) return false;
  return true;
}

template <class F>
std::uint64_t count_over(std::uint64_t n, ExecMode mode, F&& body) {
  std::uint64_t total = 0;
  if (mode == ExecMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(n); ++idx)
      total += body(static_cast<std::uint64_t>(idx)) ? 1 : 0;
    return total;
#endif
  }
  for (std::uint64_t idx = 0; idx < n; ++idx) total += body(idx) ? 1 : 0;
  return total;
}

}  // namespace suq
