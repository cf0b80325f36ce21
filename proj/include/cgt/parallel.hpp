#pragma once

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cgt {

// Exhaustive scans over flattened tuple ranges are the hot loops of every
// validator in this library.  Both variants return the smallest index i in
// [0, n) with bad(i) true, or -1 if none.  The parallel variant must agree
// with the serial one bit for bit, including which witness is reported.
enum class ExecMode { serial, parallel };

ExecMode& default_exec_mode();

template <class Pred>
long long find_counterexample_serial(long long n, Pred&& bad) {
  for (long long i = 0; i < n; ++i)
    if (bad(i)) return i;
  return -1;
}

template <class Pred>
long long find_counterexample_parallel(long long n, Pred&& bad) {
#ifdef _OPENMP
  constexpr long long chunk = 1 << 15;
  for (long long base = 0; base < n; base += chunk) {
    const long long hi = std::min(n, base + chunk);
    long long best = hi;
#pragma omp parallel for reduction(min : best) schedule(static)
    for (long long i = base; i < hi; ++i) {
      if (i < best && bad(i)) best = i;
    }
    if (best < hi) return best;
  }
  return -1;
#else
  return find_counterexample_serial(n, bad);
#endif
}

template <class Pred>
long long find_counterexample(long long n, Pred&& bad,
                              ExecMode mode = default_exec_mode()) {
  return mode == ExecMode::serial
             ? find_counterexample_serial(n, bad)
             : find_counterexample_parallel(n, bad);
}

}  // namespace cgt
