#pragma once

#include <cstdint>
#include <vector>

namespace gcg {

struct BenchPoint {
  int a1 = 0;
  int a2 = 0;
  int d1 = 0;
  int d2 = 0;
};

struct BenchRow {
  BenchPoint point;
  std::uint64_t pairs = 0;
  bool agree = false;  // fast and brute-force outputs are identical
  double brute_seconds = 0.0;
  double fast_seconds = 0.0;

  double speedup() const { return fast_seconds > 0.0 ? brute_seconds / fast_seconds : 0.0; }
};

// (a1, a2) in {2, 4, 6, 8} x {1, 2, 3} with d = (2, 3).
std::vector<BenchPoint> default_bench_grid();

// Times both enumerators at every point, best of `repeats` runs each.
std::vector<BenchRow> run_bench(const std::vector<BenchPoint>& grid, int threads = 1, int repeats = 1);

}  // namespace gcg
