#include <gtest/gtest.h>

#include "gcg/error.hpp"
#include "gcg/multinom.hpp"

using namespace gcg;

namespace {

using Parts = std::vector<int>;

// Independent oracle: coefficients of P(z)^n by repeated multiplication for
// n >= 0, and through the inverse series of P for n < 0.
std::vector<mpz_class> naive_power(const std::vector<mpz_class>& p, int n, int N) {
  std::vector<mpz_class> out(static_cast<std::size_t>(N) + 1);
  out[0] = 1;
  auto multiply = [&](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) {
      for (int j = 0; i + j <= N && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  if (n >= 0) {
    for (int i = 0; i < n; ++i) out = multiply(out, p);
    return out;
  }
  std::vector<mpz_class> inverse(static_cast<std::size_t>(N) + 1);
  inverse[0] = 1;
  for (int i = 1; i <= N; ++i) {
    mpz_class s;
    for (int j = 1; j <= i && j < static_cast<int>(p.size()); ++j) s += p[j] * inverse[i - j];
    inverse[i] = -s;
  }
  for (int i = 0; i < -n; ++i) out = multiply(out, inverse);
  return out;
}

}  // namespace

TEST(Multinom, Compositions) {
  EXPECT_EQ(compositions(2, 3), (std::vector<Parts>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}));
  EXPECT_EQ(compositions(0, 4), (std::vector<Parts>{{0, 0, 0, 0}}));
  EXPECT_EQ(compositions(3, 1), (std::vector<Parts>{{3}}));
  std::vector<Parts> streamed;
  for (const auto& c : Compositions(4, 3)) streamed.push_back(c);
  EXPECT_EQ(streamed, compositions(4, 3));
}

TEST(Multinom, WeightedCompositionsArePruned) {
  std::vector<Parts> seen;
  for_each_weighted_composition(3, 3, 4, [&](const Parts& p) { seen.push_back(p); });
  std::vector<Parts> expected;
  for (const auto& p : compositions(3, 3)) {
    if (p[0] + 2 * p[1] + 3 * p[2] <= 4) expected.push_back(p);
  }
  EXPECT_EQ(seen, expected);
}

TEST(Multinom, GeneralizedBinomial) {
  EXPECT_EQ(gen_binomial(-2, 3), -4);
  EXPECT_EQ(gen_binomial(5, 2), 10);
  EXPECT_EQ(gen_binomial(3, 5), 0);
  EXPECT_EQ(gen_binomial(7, -1), 0);
  EXPECT_EQ(gen_binomial(-1, 4), 1);
}

TEST(Multinom, Multinomial) {
  const Parts ones{1, 1, 1};
  EXPECT_EQ(multinomial(3, 0, ones), 6);
  const Parts two{1, 1};
  EXPECT_EQ(multinomial(-1, -3, two), 2);
  const Parts any{1, 0};
  EXPECT_EQ(multinomial(2, 5, any), 0);
  const Parts mixed{2, 1};
  EXPECT_EQ(multinomial(6, 3, mixed), 60);
}

TEST(Multinom, PowerSeries) {
  const std::vector<mpz_class> p{1, 1, 1};
  EXPECT_EQ(poly_power_series(p, -1, 4), (std::vector<mpz_class>{1, -1, 0, 1, -1}));
  const std::vector<mpz_class> q{1, 1};
  EXPECT_EQ(poly_power_series(q, 2, 2), (std::vector<mpz_class>{1, 2, 1}));
  EXPECT_EQ(poly_power_series(p, 0, 3), (std::vector<mpz_class>{1, 0, 0, 0}));
  EXPECT_THROW(poly_power_series(std::vector<mpz_class>{2, 1}, 1, 3), Error);
}

TEST(Multinom, PowerSeriesMatchesNaiveExpansion) {
  const std::vector<std::vector<mpz_class>> polys{{1}, {1, 2}, {1, -1, 3}, {1, 0, 0, 2}, {1, 1, 1, 1, 1}};
  for (const auto& p : polys) {
    for (int n = -3; n <= 4; ++n) {
      EXPECT_EQ(poly_power_series(p, n, 10), naive_power(p, n, 10)) << "n=" << n;
    }
  }
}
