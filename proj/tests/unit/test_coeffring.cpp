#include <gtest/gtest.h>

#include "gcg/coeffring.hpp"
#include "gcg/error.hpp"

using namespace gcg;

namespace {

CoeffPoly rho(int t) { return CoeffPoly::generator(make_rho(t, 5)); }
CoeffPoly vrho(int t) { return CoeffPoly::generator(make_varrho(t, 4)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Internal;
}

}  // namespace

TEST(CoeffRing, AdditionCollectsLikeTerms) {
  EXPECT_EQ(rho(1) + rho(1), CoeffPoly(2L) * rho(1));
  EXPECT_TRUE((rho(1) + (-rho(1))).is_zero());
  EXPECT_EQ((CoeffPoly(2L) + vrho(2)) + (CoeffPoly(3L) + rho(1)), CoeffPoly(5L) + rho(1) + vrho(2));
}

TEST(CoeffRing, Multiplication) {
  const CoeffPoly p = rho(1) * vrho(2);
  ASSERT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.terms()[0].mono.size(), 2u);
  EXPECT_EQ((CoeffPoly(1L) + rho(1)) * (CoeffPoly(1L) - rho(1)), CoeffPoly(1L) - rho(1) * rho(1));
  EXPECT_TRUE((CoeffPoly() * (rho(2) + vrho(1))).is_zero());
  EXPECT_EQ(cf_pow(rho(1) + CoeffPoly(1L), 3),
            rho(1) * rho(1) * rho(1) + CoeffPoly(3L) * rho(1) * rho(1) + CoeffPoly(3L) * rho(1) + CoeffPoly(1L));
}

TEST(CoeffRing, ExactDivision) {
  EXPECT_EQ(cf_exact_div(rho(1) * rho(1) - CoeffPoly(1L), rho(1) - CoeffPoly(1L)), rho(1) + CoeffPoly(1L));
  EXPECT_EQ(cf_exact_div(CoeffPoly(6L) * vrho(1), CoeffPoly(3L)), CoeffPoly(2L) * vrho(1));
  EXPECT_EQ(code_of([] { cf_exact_div(rho(1) + CoeffPoly(1L), CoeffPoly(2L)); }), ErrorCode::NotDivisible);
  EXPECT_EQ(code_of([] { cf_exact_div(rho(1), CoeffPoly()); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { cf_exact_div(rho(1), vrho(1)); }), ErrorCode::NotDivisible);
}

TEST(CoeffRing, Evaluation) {
  const std::map<GeneratorId, mpz_class> ones{{make_rho(1, 5), 1}, {make_varrho(2, 4), 1}};
  EXPECT_EQ(cf_eval(rho(1) + vrho(2), ones), 2);
  EXPECT_EQ(cf_eval(CoeffPoly(7L), {}), 7);
  const std::map<GeneratorId, mpz_class> at{{make_rho(1, 5), 2}, {make_varrho(1, 4), 3}};
  EXPECT_EQ(cf_eval(rho(1) * vrho(1) * vrho(1), at), 18);
  EXPECT_EQ(code_of([] { cf_eval(rho(2), {}); }), ErrorCode::MissingGenerator);
}

TEST(CoeffRing, PalindromicIdentification) {
  EXPECT_EQ(make_rho(1, 5), make_rho(4, 5));
  EXPECT_EQ(make_rho(2, 5), make_rho(3, 5));
  EXPECT_NE(make_rho(1, 5), make_varrho(1, 5));
  EXPECT_EQ(code_of([] { make_rho(0, 5); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { make_varrho(4, 4); }), ErrorCode::InvalidArgument);
}

TEST(CoeffRing, CoefficientModes) {
  const CoefficientMode sym = CoefficientMode::symbolic(2, 3);
  EXPECT_FALSE(sym.is_numeric());
  EXPECT_TRUE(sym.rho(0).is_one());
  EXPECT_TRUE(sym.rho(2).is_one());
  EXPECT_EQ(sym.varrho(1), sym.varrho(2));
  ASSERT_EQ(sym.p2().size(), 4u);
  EXPECT_EQ(code_of([&] { sym.numeric_p1(); }), ErrorCode::SymbolicModeUnsupported);

  const CoefficientMode num = CoefficientMode::numeric({1, 2, 1}, {1, 1});
  EXPECT_EQ(num.d1(), 2);
  EXPECT_EQ(num.rho(1), CoeffPoly(2L));
  EXPECT_EQ(code_of([] { CoefficientMode::numeric({1, 2, 3}, {1, 1}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { CoefficientMode::numeric({2, 1, 2}, {1, 1}); }), ErrorCode::InvalidArgument);
}

TEST(CoeffRing, RenderingIsCanonical) {
  EXPECT_EQ(to_string(CoeffPoly()), "0");
  EXPECT_EQ(to_string(CoeffPoly(-3L)), "-3");
  EXPECT_EQ(to_string(rho(4)), to_string(rho(1)));
}
