#include <gtest/gtest.h>

#include <thread>

#include "common/golden.hpp"
#include "gcg/cluster.hpp"
#include "gcg/error.hpp"
#include "gcg/greedy.hpp"

using namespace gcg;
using golden::in_x2;
using golden::x1;
using golden::x2;

namespace {

using Params = std::pair<std::int64_t, std::int64_t>;

// u_{k,j} from the two-term recursion run upward from u_{-1} = 0, u_0 = 1.
std::int64_t u_forward(int d1, int d2, int k, int j) {
  if (k == -1) return 0;
  std::int64_t prev = 0, cur = 1;
  for (int i = 0; i < k; ++i) {
    const int index = j - k + i;
    const std::int64_t next = ((index % 2 != 0) ? d1 : d2) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST(Cluster, GoldenVariables) {
  AlgebraContext ctx(CoefficientMode::all_ones(2, 3));
  EXPECT_EQ(ctx.cluster_variable(1), x1());
  EXPECT_EQ(ctx.cluster_variable(2), x2());
  EXPECT_EQ(ctx.cluster_variable(3), golden::x3());
  EXPECT_EQ(ctx.cluster_variable(4), golden::x4());
  EXPECT_EQ(ctx.cluster_variable(5), golden::x5());
}

TEST(Cluster, ExchangeRelationsHold) {
  AlgebraContext ctx(CoefficientMode::symbolic(2, 2));
  for (int k = -4; k <= 6; ++k) {
    EXPECT_EQ(ctx.cluster_variable(k + 1) * ctx.cluster_variable(k - 1),
              lp_eval_univariate(ctx.exchange_polynomial(k), ctx.cluster_variable(k)))
        << k;
  }
}

TEST(Cluster, StandardMonomials) {
  AlgebraContext ctx(CoefficientMode::all_ones(2, 3));
  EXPECT_EQ(ctx.standard_monomial(1, -1, -2), x1() * x2(2));
  EXPECT_EQ(ctx.standard_monomial(1, 1, 1), ctx.cluster_variable(0) * ctx.cluster_variable(3));
  EXPECT_EQ(ctx.standard_monomial(1, 0, 0), LaurentPoly(1L));
}

TEST(Cluster, Chebyshev) {
  for (int d1 = 0; d1 <= 4; ++d1) {
    for (int d2 = 0; d2 <= 4; ++d2) {
      for (int k = -1; k <= 10; ++k) {
        for (int j = 1; j <= 2; ++j) EXPECT_EQ(chebyshev_u(d1, d2, k, j), u_forward(d1, d2, k, j));
      }
    }
  }
  EXPECT_EQ(chebyshev_u(2, 3, 1, 1), 3);
  EXPECT_EQ(chebyshev_u(2, 3, 0, 2), 1);
  EXPECT_THROW(chebyshev_u(9, 9, 200, 1), Error);
}

TEST(Cluster, GreedyParameters) {
  EXPECT_EQ(greedy_params_of_cluster_monomial(2, 3, 1, -2, -1), Params(-2, -1));
  EXPECT_EQ(greedy_params_of_cluster_monomial(2, 3, 4, -1, 0), Params(3, 1));
  EXPECT_EQ(greedy_params_of_cluster_monomial(2, 3, 5, -1, 0), Params(5, 2));
  EXPECT_EQ(greedy_params_of_cluster_variable(2, 3, 1), Params(-1, 0));
  EXPECT_EQ(greedy_params_of_cluster_variable(2, 3, 2), Params(0, -1));
  EXPECT_EQ(greedy_params_of_cluster_variable(2, 3, 3), Params(1, 0));
  EXPECT_THROW(greedy_params_of_cluster_monomial(2, 3, 1, 1, 0), Error);
}

TEST(Cluster, ClusterVariablesAreGreedyElements) {
  for (int d1 = 1; d1 <= 3; ++d1) {
    for (int d2 = 1; d2 <= 3; ++d2) {
      AlgebraContext ctx(CoefficientMode::all_ones(d1, d2));
      for (int k = -2; k <= 5; ++k) {
        const auto [a1, a2] = greedy_params_of_cluster_variable(d1, d2, k);
        EXPECT_EQ(ctx.cluster_variable(k), greedy_combinatorial(ctx.mode(), a1, a2)) << k;
      }
    }
  }
}

TEST(Cluster, ExpandInCluster) {
  AlgebraContext ctx(CoefficientMode::all_ones(2, 3));
  EXPECT_EQ(ctx.expand_in_cluster(ctx.cluster_variable(3), 2), x2());
  // e1 counts x2 and e2 counts x3 in cluster 2.
  EXPECT_EQ(ctx.expand_in_cluster(x1(), 2), lp_swap(x1(-1) * in_x2({1, 1, 1})));
  const LaurentPoly x11 = greedy_combinatorial(ctx.mode(), 1, 1);
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(lp_is_positive(ctx.expand_in_cluster(x11, k))) << k;
  ctx.set_cluster_range(-1, 3);
  EXPECT_THROW(ctx.expand_in_cluster(x11, 4), Error);
  EXPECT_THROW(ctx.set_cluster_range(2, 5), Error);
}

TEST(Cluster, Reflections) {
  AlgebraContext ctx(CoefficientMode::all_ones(2, 3));
  EXPECT_EQ(ctx.apply_reflection(x1(), 2), golden::x3());
  EXPECT_EQ(ctx.apply_reflection(ctx.cluster_variable(5), 2), ctx.cluster_variable(-1));
  EXPECT_EQ(ctx.apply_reflection(ctx.cluster_variable(4), 1), ctx.cluster_variable(-2));
  EXPECT_THROW(ctx.apply_reflection(x1(), 3), Error);
}

TEST(Cluster, ConcurrentReadersSeeOneValue) {
  AlgebraContext ctx(CoefficientMode::all_ones(2, 2));
  std::vector<std::thread> pool;
  std::vector<LaurentPoly> seen(4);
  for (int t = 0; t < 4; ++t) pool.emplace_back([&, t] { seen[t] = ctx.cluster_variable(7 - t % 2 * 9); });
  for (auto& th : pool) th.join();
  EXPECT_EQ(seen[0], ctx.cluster_variable(7));
  EXPECT_EQ(seen[1], ctx.cluster_variable(-2));
  EXPECT_EQ(seen[0], seen[2]);
  EXPECT_EQ(seen[1], seen[3]);
}
