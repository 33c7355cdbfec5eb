// Times the OpenMP kernels against their serial reference paths
// (workers == 1). Wall-clock only; the outputs themselves are asserted
// byte-identical in the test suite.

#include <chrono>
#include <cstdio>
#include <string>

#include "permgen/character.hpp"
#include "permgen/experiments.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace permgen;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms, int threads) {
  std::printf("%-28s %10.1f ms %10.1f ms   x%.2f (%d threads)\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, threads);
}

}  // namespace

int main() {
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

  {
    ExperimentConfig cfg;
    cfg.n = 30;
    cfg.trials = 4000;
    cfg.seed = 42;
    cfg.workers = 1;
    double serial = time_ms([&] { (void)estimate_p(cfg); });
    cfg.workers = 0;
    double parallel = time_ms([&] { (void)estimate_p(cfg); });
    row("estimate n=30 4k trials", serial, parallel, threads);
  }
  {
    ExperimentConfig cfg;
    cfg.n = 12;
    cfg.window = 144;
    cfg.trials = 20000;
    cfg.seed = 42;
    cfg.workers = 1;
    double serial = time_ms([&] { (void)second_moment_run(cfg); });
    cfg.workers = 0;
    double parallel = time_ms([&] { (void)second_moment_run(cfg); });
    row("second-moment n=12 20k", serial, parallel, threads);
  }
  {
    ExperimentConfig cfg;
    cfg.n = 12;
    cfg.max_word_len = 6;
    cfg.trials = 2000;
    cfg.seed = 42;
    cfg.workers = 1;
    double serial = time_ms([&] { (void)word_experiment(cfg); });
    cfg.workers = 0;
    double parallel = time_ms([&] { (void)word_experiment(cfg); });
    row("words n=12 depth 6 2k", serial, parallel, threads);
  }
  {
    double serial = time_ms([&] { (void)character_table(14, 1); });
    double parallel = time_ms([&] { (void)character_table(14, 0); });
    row("character table n=14", serial, parallel, threads);
  }
  return 0;
}
