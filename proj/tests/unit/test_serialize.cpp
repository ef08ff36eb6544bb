#include <gtest/gtest.h>

#include "common/golden.hpp"
#include "gcg/cluster.hpp"
#include "gcg/error.hpp"
#include "gcg/greedy.hpp"
#include "gcg/serialize.hpp"

using namespace gcg;

namespace {

ErrorCode parse_error(const std::string& text, int d1 = 2, int d2 = 3) {
  try {
    laurent_parse(text, d1, d2);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Serialize, LaurentJson) {
  const LaurentPoly f = golden::x3();
  EXPECT_EQ(laurent_to_json(f, 2, 3).dump(),
            R"({"terms":[{"e":[-1,0],"c":[{"n":"1"}]},{"e":[-1,1],"c":[{"n":"1"}]},{"e":[-1,2],"c":[{"n":"1"}]}]})");
  EXPECT_EQ(laurent_from_json(laurent_to_json(f, 2, 3), 2, 3), f);
}

TEST(Serialize, SymbolicRoundtrip) {
  AlgebraContext ctx(CoefficientMode::symbolic(3, 4));
  for (int k = -2; k <= 5; ++k) {
    const LaurentPoly f = ctx.cluster_variable(k);
    EXPECT_EQ(laurent_parse(laurent_to_json(f, 3, 4).dump(), 3, 4), f) << k;
  }
}

TEST(Serialize, CoefficientsAreCanonicalized) {
  // rho_3 with d1 = 4 is read as rho_1; repeated monomials merge.
  const Json j = Json::parse(R"([{"rho":[0,0,1],"n":"2"},{"rho":[1,0,0],"n":3},{"n":"-7"}])");
  const CoeffPoly c = coeff_from_json(j, 4, 2);
  const CoefficientMode mode = CoefficientMode::symbolic(4, 2);
  EXPECT_EQ(c, CoeffPoly(5L) * mode.rho(1) - CoeffPoly(7L));
  const Json big = Json::parse(R"([{"n":"123456789012345678901234567890"}])");
  EXPECT_EQ(coeff_from_json(big, 2, 2).constant_term(), mpz_class("123456789012345678901234567890"));
}

TEST(Serialize, MalformedInputIsRejected) {
  EXPECT_EQ(parse_error("{"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("[]"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"terms":[{"e":[1],"c":[]}]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"terms":[{"e":[1,2],"c":[{"rho":[1,1],"n":"1"}]}]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"terms":[{"e":[1,2],"c":[{"n":"x"}]}]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error(R"({"terms":[{"e":[1,2],"c":[{"rho":[-1],"n":"1"}]}]})"), ErrorCode::ParseError);
}

TEST(Serialize, TextRendering) {
  EXPECT_EQ(render_laurent_text(golden::x3()), "x1^-1: 1\nx1^-1 x2: 1\nx1^-1 x2^2: 1\n");
  EXPECT_EQ(render_laurent_text(LaurentPoly(3L)), "1: 3\n");
  EXPECT_EQ(render_laurent_text(LaurentPoly()), "0\n");
}

TEST(Serialize, Pairs) {
  const GradingPair p{{2, 1, 0, 0, 0}, {1, 3}};
  EXPECT_EQ(pair_to_json(p).dump(), R"({"s1":[2,1,0,0,0],"s2":[1,3],"m1":3,"m2":4})");
  EXPECT_EQ(render_pair_text(p), "s1=2,1,0,0,0 s2=1,3 m1=3 m2=4");
}
