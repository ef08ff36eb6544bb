#include <gtest/gtest.h>

#include <cstring>
#include <string>
#include <vector>

#include "gcg.h"

namespace {

struct Context {
  gcg_context* ptr = nullptr;
  ~Context() { gcg_context_free(ptr); }
};

struct Laurent {
  gcg_laurent* ptr = nullptr;
  ~Laurent() { gcg_laurent_free(ptr); }
};

std::string take(char* s) {
  std::string out = s;
  gcg_string_free(s);
  return out;
}

Context numeric_23() {
  const int64_t p1[] = {1, 1, 1};
  const int64_t p2[] = {1, 1, 1, 1};
  Context ctx;
  EXPECT_EQ(gcg_context_new_numeric(p1, 3, p2, 4, &ctx.ptr), GCG_OK);
  return ctx;
}

}  // namespace

TEST(CApi, ClusterVariableRendering) {
  Context ctx = numeric_23();
  Laurent x3;
  ASSERT_EQ(gcg_cluster_variable(ctx.ptr, 3, &x3.ptr), GCG_OK);
  char* text = nullptr;
  ASSERT_EQ(gcg_laurent_render(ctx.ptr, x3.ptr, GCG_FORMAT_TEXT, &text), GCG_OK);
  EXPECT_EQ(take(text), "x1^-1: 1\nx1^-1 x2: 1\nx1^-1 x2^2: 1\n");
}

TEST(CApi, ParseRenderRoundtrip) {
  Context ctx = numeric_23();
  Laurent x5, parsed, greedy;
  ASSERT_EQ(gcg_cluster_variable(ctx.ptr, 5, &x5.ptr), GCG_OK);
  char* json = nullptr;
  ASSERT_EQ(gcg_laurent_render(ctx.ptr, x5.ptr, GCG_FORMAT_JSON, &json), GCG_OK);
  const std::string text = take(json);
  ASSERT_EQ(gcg_laurent_parse(ctx.ptr, text.c_str(), &parsed.ptr), GCG_OK);
  EXPECT_EQ(gcg_laurent_equal(x5.ptr, parsed.ptr), 1);
  ASSERT_EQ(gcg_greedy(ctx.ptr, 5, 2, GCG_METHOD_RECURSIVE, &greedy.ptr), GCG_OK);
  EXPECT_EQ(gcg_laurent_equal(x5.ptr, greedy.ptr), 1);
  EXPECT_EQ(gcg_laurent_equal(x5.ptr, nullptr), 0);
}

TEST(CApi, ErrorsCarryCodesAndMessages) {
  Context ctx = numeric_23();
  EXPECT_EQ(gcg_context_set_cluster_range(ctx.ptr, 3, 5), GCG_ERR_INVALID_ARGUMENT);
  EXPECT_GT(std::strlen(gcg_last_error()), 0u);
  Laurent f;
  EXPECT_EQ(gcg_laurent_parse(ctx.ptr, "{not json", &f.ptr), GCG_ERR_PARSE);
  EXPECT_EQ(f.ptr, nullptr);
  EXPECT_EQ(gcg_cluster_variable(nullptr, 1, &f.ptr), GCG_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(gcg_status_name(GCG_ERR_NOT_DIVISIBLE), "NotDivisible");

  const int64_t bad[] = {1, 2};
  const int64_t ok[] = {1, 1};
  Context rejected;
  EXPECT_EQ(gcg_context_new_numeric(bad, 2, ok, 2, &rejected.ptr), GCG_ERR_INVALID_ARGUMENT);

  Context sym;
  ASSERT_EQ(gcg_context_new_symbolic(2, 3, &sym.ptr), GCG_OK);
  Laurent g;
  EXPECT_EQ(gcg_greedy(sym.ptr, 1, 1, GCG_METHOD_RECURSIVE, &g.ptr), GCG_ERR_SYMBOLIC_MODE_UNSUPPORTED);
  EXPECT_EQ(gcg_greedy(sym.ptr, 1, 1, GCG_METHOD_COMBINATORIAL, &g.ptr), GCG_OK);
  EXPECT_STREQ(gcg_last_error(), "");
}

TEST(CApi, EnumeratePairs) {
  Context ctx = numeric_23();
  ASSERT_EQ(gcg_context_set_threads(ctx.ptr, 3), GCG_OK);
  struct Tally {
    int pairs = 0;
    int stop_after = -1;
    std::vector<int> first;
  } tally;
  auto visit = [](const int* s1, size_t n1, const int* s2, size_t n2, void* user) -> int {
    auto* t = static_cast<Tally*>(user);
    if (t->pairs == 0) {
      t->first.assign(s1, s1 + n1);
      t->first.insert(t->first.end(), s2, s2 + n2);
    }
    ++t->pairs;
    return t->pairs == t->stop_after ? 1 : 0;
  };
  ASSERT_EQ(gcg_enumerate_pairs(ctx.ptr, 5, 2, visit, &tally), GCG_OK);
  EXPECT_EQ(tally.pairs, 547);
  EXPECT_EQ(tally.first, (std::vector<int>{0, 0, 0, 0, 0, 0, 0}));
  tally = Tally{};
  tally.stop_after = 10;
  ASSERT_EQ(gcg_enumerate_pairs(ctx.ptr, 5, 2, visit, &tally), GCG_OK);
  EXPECT_EQ(tally.pairs, 10);
}

TEST(CApi, ExpansionAndPositivity) {
  Context ctx = numeric_23();
  Laurent x3, x4, product, in_cluster;
  ASSERT_EQ(gcg_cluster_variable(ctx.ptr, 3, &x3.ptr), GCG_OK);
  ASSERT_EQ(gcg_cluster_variable(ctx.ptr, 4, &x4.ptr), GCG_OK);
  ASSERT_EQ(gcg_laurent_mul(x3.ptr, x4.ptr, &product.ptr), GCG_OK);
  char* expansion = nullptr;
  ASSERT_EQ(gcg_greedy_expand(ctx.ptr, product.ptr, GCG_FORMAT_TEXT, &expansion), GCG_OK);
  EXPECT_FALSE(take(expansion).empty());
  ASSERT_EQ(gcg_expand_in_cluster(ctx.ptr, product.ptr, 3, &in_cluster.ptr), GCG_OK);
  EXPECT_EQ(gcg_laurent_is_positive(in_cluster.ptr), 1);
  Laurent reflected;
  ASSERT_EQ(gcg_apply_reflection(ctx.ptr, x3.ptr, 2, &reflected.ptr), GCG_OK);
  Laurent x1;
  ASSERT_EQ(gcg_cluster_variable(ctx.ptr, 1, &x1.ptr), GCG_OK);
  EXPECT_EQ(gcg_laurent_equal(reflected.ptr, x1.ptr), 1);
}

TEST(CApi, VerifyAndBench) {
  char* report = nullptr;
  int passed = 0;
  ASSERT_EQ(gcg_verify("multinom", 1, 0, &report, &passed), GCG_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(take(report).find("\"passed\":true"), std::string::npos);
  EXPECT_EQ(gcg_verify("nope", 1, 0, &report, &passed), GCG_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(gcg_bench(1, 1, &report), GCG_OK);
  const std::string bench = take(report);
  EXPECT_NE(bench.find("\"pairs\":21880"), std::string::npos);
  EXPECT_EQ(bench.find("\"agree\":false"), std::string::npos);
}
