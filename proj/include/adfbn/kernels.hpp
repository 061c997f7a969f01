#pragma once

// Data-parallel scans over index spaces (2^n states, 3^n interpretations).
// Every kernel has a serial reference; the OpenMP variant must return
// identical, index-sorted output.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "adfbn/errors.hpp"

namespace adfbn {

enum class Exec { serial, parallel };

namespace kernels {

inline constexpr std::uint64_t budget_stride = 4096;

/// Indices in [0, count) satisfying `pred`, ascending.
template <class Pred>
std::vector<std::uint64_t> select_serial(std::uint64_t count, Pred&& pred, const Budget& budget = {}) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    if (k % budget_stride == 0) budget.check();
    if (pred(k)) out.push_back(k);
  }
  return out;
}

template <class Pred>
std::vector<std::uint64_t> select_parallel(std::uint64_t count, Pred&& pred, const Budget& budget = {}) {
#ifdef _OPENMP
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(omp_get_max_threads()));
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto total = static_cast<std::int64_t>(count);

#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t k = 0; k < total; ++k) {
    if (stop.load(std::memory_order_relaxed)) continue;
    try {
      if (k % static_cast<std::int64_t>(budget_stride) == 0) budget.check();
      if (pred(static_cast<std::uint64_t>(k)))
        partial[static_cast<std::size_t>(omp_get_thread_num())].push_back(static_cast<std::uint64_t>(k));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      stop = true;
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<std::uint64_t> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
#else
  return select_serial(count, pred, budget);
#endif
}

template <class Pred>
std::vector<std::uint64_t> select(std::uint64_t count, Pred&& pred, Exec exec, const Budget& budget = {}) {
  return exec == Exec::parallel ? select_parallel(count, pred, budget) : select_serial(count, pred, budget);
}

/// out[k] = fn(k) for k in [0, count).
template <class T, class Fn>
std::vector<T> tabulate(std::uint64_t count, Fn&& fn, Exec exec) {
  std::vector<T> out(static_cast<std::size_t>(count));
  if (exec == Exec::serial) {
    for (std::uint64_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < total; ++k) out[static_cast<std::size_t>(k)] = fn(static_cast<std::uint64_t>(k));
  return out;
}

}  // namespace kernels
}  // namespace adfbn
