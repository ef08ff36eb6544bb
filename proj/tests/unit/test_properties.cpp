#include <gtest/gtest.h>

#include "gcg/error.hpp"
#include "gcg/verify.hpp"

using namespace gcg;

namespace {

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, AllChecksPass) {
  for (const auto& r : run_verify(GetParam())) {
    EXPECT_GT(r.cases, 0u) << r.name;
    EXPECT_TRUE(r.passed()) << r.suite << "." << r.name << ": " << r.failures << " failures, first: "
                            << r.first_failure;
  }
}

INSTANTIATE_TEST_SUITE_P(Verify, Suite,
                         ::testing::Values("coeffring", "laurent", "multinom", "dyckpath", "compat", "greedy",
                                           "cluster"),
                         [](const auto& info) { return info.param; });

}  // namespace

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_verify("nope"), Error); }

TEST(Verify, ResultsAreDeterministic) {
  VerifyOptions two;
  two.threads = 2;
  const auto a = run_verify("multinom"), b = run_verify("multinom", two);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].cases, b[i].cases);
  }
}
