// Compares the serial reference kernels against their OpenMP versions on a
// few instances that are large enough to show a difference.

#include <chrono>
#include <cstdio>

#include "pqx/extremal.hpp"
#include "pqx/kneser.hpp"
#include "pqx/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_s(Fn&& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-34s %9.3fs %9.3fs %6.2fx\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int workers = argc > 1 ? std::atoi(argv[1]) : 4;
  std::printf("%-34s %10s %10s %7s  (workers=%d)\n", "kernel", "serial", "openmp", "speedup", workers);

  uint64_t v1 = 0, v2 = 0;
  double s = time_s([&] { v1 = pqx::extremal_oracle_serial(6, 3, 4, 3).value; });
  double p = time_s([&] { v2 = pqx::extremal_oracle(6, 3, 4, 3, workers).value; });
  row("extremal oracle (6,3,4,3)", s, p);
  if (v1 != v2) std::printf("  MISMATCH: %llu vs %llu\n", (unsigned long long)v1, (unsigned long long)v2);

  pqx::SearchBudget b1;
  pqx::SearchBudget bw;
  bw.workers = workers;
  s = time_s([&] { v1 = pqx::extremal_number(8, 2, 6, 3, b1).value; });
  p = time_s([&] { v2 = pqx::extremal_number(8, 2, 6, 3, bw).value; });
  row("extremal branch-and-bound (8,2,6,3)", s, p);
  if (v1 != v2) std::printf("  MISMATCH: %llu vs %llu\n", (unsigned long long)v1, (unsigned long long)v2);

  pqx::Lemma5Report r1, r2;
  s = time_s([&] { r1 = pqx::lemma5_scan_serial(7); });
  p = time_s([&] { r2 = pqx::lemma5_scan(7, workers); });
  row("degree dichotomy scan (K_7)", s, p);
  if (r1.relevant != r2.relevant) std::printf("  MISMATCH in relevant counts\n");

  pqx::KneserSpec spec = pqx::KneserSpec::of(16, 2, 3, 2);
  pqx::KneserGuards guards;
  guards.max_vertices = 128;  // C(16,2) = 120 candidate vertices
  int e1 = 0, e2 = 0;
  s = time_s([&] { e1 = pqx::build_kneser(spec, guards, 1).hg.num_edges(); });
  p = time_s([&] { e2 = pqx::build_kneser(spec, guards, workers).hg.num_edges(); });
  row("kneser edge enumeration (16,2,3,2)", s, p);
  if (e1 != e2) std::printf("  MISMATCH: %d vs %d\n", e1, e2);

  pqx::VerifyOptions vo;
  vo.suite = "lemma3";
  vo.workers = 1;
  pqx::VerifyOptions vw = vo;
  vw.workers = workers;
  s = time_s([&] { (void)pqx::run_verify(vo); });
  p = time_s([&] { (void)pqx::run_verify(vw); });
  row("lemma3 battery (1e5 instances)", s, p);
  return 0;
}
