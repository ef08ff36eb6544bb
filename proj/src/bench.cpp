#include "gcg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "gcg/compat.hpp"
#include "gcg/error.hpp"

namespace gcg {

namespace {

template <typename Fn>
double best_time(int repeats, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

std::vector<BenchPoint> default_bench_grid() {
  std::vector<BenchPoint> grid;
  for (int a1 : {2, 4, 6, 8}) {
    for (int a2 : {1, 2, 3}) grid.push_back({a1, a2, 2, 3});
  }
  return grid;
}

std::vector<BenchRow> run_bench(const std::vector<BenchPoint>& grid, int threads, int repeats) {
  if (repeats < 1) raise(ErrorCode::InvalidArgument, "repeats must be positive");
  std::vector<BenchRow> rows;
  for (const auto& point : grid) {
    std::vector<GradingPair> brute, fast;
    BenchRow row;
    row.point = point;
    row.brute_seconds = best_time(repeats, [&] { brute = enumerate_bruteforce(point.a1, point.a2, point.d1, point.d2); });
    row.fast_seconds =
        best_time(repeats, [&] { fast = enumerate_fast(point.a1, point.a2, point.d1, point.d2, threads); });
    row.pairs = fast.size();
    row.agree = brute == fast;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gcg
