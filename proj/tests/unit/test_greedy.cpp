#include <gtest/gtest.h>

#include "common/golden.hpp"
#include "gcg/error.hpp"
#include "gcg/greedy.hpp"

using namespace gcg;
using golden::in_x2;
using golden::x1;
using golden::x2;

namespace {

const CoefficientMode& ones23() {
  static const CoefficientMode mode = CoefficientMode::all_ones(2, 3);
  return mode;
}

LaurentPoly in_x1(std::initializer_list<long> coeffs) {
  LaurentPoly out;
  std::int64_t e = 0;
  for (long c : coeffs) out = out + LaurentPoly::monomial(e++, 0, CoeffPoly(c));
  return out;
}

}  // namespace

TEST(Greedy, PairWeight) {
  const CoefficientMode sym = CoefficientMode::symbolic(2, 3);
  EXPECT_TRUE(pair_weight(sym, HGrading(5, 0), VGrading(2, 0)).is_one());
  EXPECT_EQ(pair_weight(sym, {2, 1, 0, 0, 0}, {1, 3}), sym.rho(1) * sym.varrho(1));
}

TEST(Greedy, SmallElements) {
  EXPECT_EQ(greedy_combinatorial(CoefficientMode::all_ones(2, 1), 1, 0), x1(-1) * in_x2({1, 1, 1}));
  EXPECT_EQ(greedy_combinatorial(ones23(), -2, -3), x1(2) * x2(3));
  EXPECT_EQ(greedy_combinatorial(ones23(), 1, 1), x1(-1) * x2(-1) * (in_x1({1, 1, 1, 1}) + in_x2({0, 1, 1})));
}

TEST(Greedy, ClusterVariableFiveByTwo) {
  EXPECT_EQ(greedy_combinatorial(ones23(), 5, 2), golden::x5());
  const GreedyTable table = greedy_recursive(ones23(), 5, 2);
  EXPECT_EQ(table.to_laurent(), golden::x5());
  // The x1^4 row of the bracket: p = 4 in x1, q = 0..3 in x2.
  const std::vector<long> row{3, 4, 4, 1};
  for (int q = 0; q <= 3; ++q) EXPECT_EQ(table.at(4, q), row[q]);
}

TEST(Greedy, RecursionForNonpositivePoint) {
  const GreedyTable t = greedy_recursive(ones23(), -1, 0);
  EXPECT_EQ(t.pmax, 0);
  EXPECT_EQ(t.qmax, 0);
  EXPECT_EQ(t.at(0, 0), 1);
  EXPECT_THROW(greedy_recursive(CoefficientMode::symbolic(2, 3), 1, 1), Error);
}

TEST(Greedy, FromPairs) {
  const auto pairs = enumerate_fast(5, 2, 2, 3);
  EXPECT_EQ(greedy_from_pairs(ones23(), 5, 2, pairs), golden::x5());
}

TEST(Greedy, ReflectParams) {
  using Params = std::pair<std::int64_t, std::int64_t>;
  EXPECT_EQ(reflect_params(Reflection::Sigma2, 2, 3, 5, 2), Params(1, 2));
  EXPECT_EQ(reflect_params(Reflection::Sigma2, 2, 3, -1, -1), Params(1, -1));
  for (int a1 = -3; a1 <= 3; ++a1) {
    for (int a2 = -3; a2 <= 3; ++a2) {
      for (auto axis : {Reflection::Sigma1, Reflection::Sigma2}) {
        const auto [b1, b2] = reflect_params(axis, 2, 3, a1, a2);
        EXPECT_EQ(reflect_params(axis, 2, 3, b1, b2), Params(a1, a2));
      }
    }
  }
}

TEST(Greedy, Expansion) {
  const GreedyExpansion self = greedy_expand(ones23(), golden::x5());
  ASSERT_EQ(self.size(), 1u);
  EXPECT_TRUE(self.at({5, 2}).is_one());

  const GreedyExpansion sum = greedy_expand(ones23(), x1() + x2());
  ASSERT_EQ(sum.size(), 2u);
  EXPECT_TRUE(sum.at({-1, 0}).is_one());
  EXPECT_TRUE(sum.at({0, -1}).is_one());

  const LaurentPoly product = golden::x3() * golden::x4();
  const GreedyExpansion e = greedy_expand(ones23(), product);
  for (const auto& [point, c] : e) {
    ASSERT_TRUE(c.is_constant());
    EXPECT_GT(sgn(c.constant_term()), 0);
  }
  EXPECT_EQ(greedy_reassemble(ones23(), e), product);
}

TEST(Greedy, ExpansionRejectsNonElements) {
  try {
    greedy_expand(ones23(), x1(-1) * x2(-1));
    FAIL() << "expected NotInAlgebra";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInAlgebra);
  }
}
