// Compare the serial reference scans against the OpenMP kernels on the
// heaviest validator workloads.

#include <chrono>
#include <cstdio>

#include "cgt/g2.hpp"
#include "cgt/inn.hpp"
#include "cgt/parallel.hpp"
#include "cgt/tcm.hpp"

using namespace cgt;
using clk = std::chrono::steady_clock;

namespace {

double run_ms(ExecMode mode, void (*work)()) {
  default_exec_mode() = mode;
  auto t0 = clk::now();
  work();
  auto t1 = clk::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void work_2group() {
  auto rep = check_2group_axioms(inn_crossed_module(symmetric_3()));
  if (!rep.all_pass()) std::abort();
}

void work_strictness() {
  auto inn = build_inn(inn_crossed_module(symmetric_3()));
  auto rep = check_strictness(inn);
  if (!rep.all_pass()) std::abort();
}

void work_tcm() {
  auto ext = extract_from_inn(inn_crossed_module(symmetric_3()));
  auto rep = validate_2crossed(ext.tcm);
  if (!rep.all_pass()) std::abort();
}

void work_raw_scan() {
  auto x = inn_crossed_module(symmetric_3());
  const int n = x.G->order();
  volatile long long sink = find_counterexample(
      200000000LL, [&](long long i) {
        int a = (int)(i % n), b = (int)(i / n % n), c = (int)(i / n / n % n);
        return x.G->mul(x.G->mul(a, b), c) != x.G->mul(a, x.G->mul(b, c));
      });
  (void)sink;
}

}  // namespace

int main() {
  struct {
    const char* name;
    void (*work)();
    int reps;
  } cases[] = {
      {"2group_axioms_s3", work_2group, 3},
      {"inn_strictness_s3", work_strictness, 3},
      {"tcm_axioms_s3", work_tcm, 3},
      {"raw_scan_200M", work_raw_scan, 1},
  };

  std::printf("%-22s %12s %12s %8s\n", "case", "serial(ms)", "openmp(ms)",
              "speedup");
  for (auto& c : cases) {
    double s = 0, p = 0;
    for (int r = 0; r < c.reps; ++r) {
      s += run_ms(ExecMode::serial, c.work);
      p += run_ms(ExecMode::parallel, c.work);
    }
    s /= c.reps;
    p /= c.reps;
    std::printf("%-22s %12.1f %12.1f %7.2fx\n", c.name, s, p, s / p);
  }
  default_exec_mode() = ExecMode::parallel;
  return 0;
}
