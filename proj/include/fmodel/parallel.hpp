#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <vector>

#ifdef FMODEL_OMP
#include <omp.h>
#endif

namespace fmodel {

// Grid scans are embarrassingly parallel over sample points. The serial path
// is the reference implementation; the parallel path must reproduce it bit
// for bit, so reductions below are order independent (max) or done serially
// after the parallel map.
enum class ExecPolicy { serial, parallel };

inline int max_threads() {
#ifdef FMODEL_OMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Calls fn(i) for i in [0, n). The first exception by index is rethrown
/// after the loop, independent of thread scheduling.
template <class Fn>
void for_each_index(std::size_t n, ExecPolicy policy, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
  if (policy == ExecPolicy::parallel) {
#ifdef FMODEL_OMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < count; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (long long i = 0; i < count; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <class Fn>
auto map_indexed(std::size_t n, ExecPolicy policy, Fn&& fn) {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(n);
  for_each_index(n, policy, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

template <class Fn>
double max_over(std::size_t n, ExecPolicy policy, Fn&& fn) {
  auto values = map_indexed(n, policy, std::forward<Fn>(fn));
  // NaN is sticky so that a broken sample can never hide behind the max.
  double m = 0.0;
  for (double v : values) {
    if (std::isnan(m)) break;
    if (std::isnan(v) || v > m) m = v;
  }
  return m;
}

}  // namespace fmodel
