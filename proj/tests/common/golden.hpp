#pragma once

#include <array>
#include <string>
#include <vector>

#include "gcg/laurent.hpp"

namespace golden {

using gcg::LaurentPoly;

inline LaurentPoly x1(std::int64_t e = 1) { return LaurentPoly::monomial(e, 0); }
inline LaurentPoly x2(std::int64_t e = 1) { return LaurentPoly::monomial(0, e); }

// Univariate polynomial in x2 from low-to-high integer coefficients.
inline LaurentPoly in_x2(std::initializer_list<long> coeffs) {
  LaurentPoly out;
  std::int64_t e = 0;
  for (long c : coeffs) out = out + LaurentPoly::monomial(0, e++, gcg::CoeffPoly(c));
  return out;
}

// Cluster variables for P1 = 1 + z + z^2, P2 = 1 + z + z^2 + z^3, written
// exactly as printed.
inline LaurentPoly x3() { return x1(-1) * in_x2({1, 1, 1}); }

inline LaurentPoly x4() {
  const LaurentPoly q = in_x2({1, 1, 1});
  return x1(-3) * x2(-1) * (x1(3) + x1(2) * q + x1() * gcg::lp_pow(q, 2) + gcg::lp_pow(q, 3));
}

inline LaurentPoly x5() {
  const LaurentPoly q = in_x2({1, 1, 1});
  const LaurentPoly bracket = x1(6) + x1(5) * in_x2({2, 1}) + x1(4) * in_x2({3, 4, 4, 1}) +
                              x1(3) * in_x2({4, 9, 14, 11, 6, 1}) + LaurentPoly(3L) * x1(2) * gcg::lp_pow(q, 3) +
                              LaurentPoly(2L) * x1() * gcg::lp_pow(q, 4) + gcg::lp_pow(q, 5);
  return x1(-5) * x2(-2) * bracket;
}

// The sixteen diagrams of compatible pairs on D_{5,2} with S1 <= 2 and
// S2 <= 3: for each vertical grading, the allowed values on h1..h5.
struct Diagram {
  std::array<int, 2> s2;
  std::array<const char*, 5> allowed;
};

inline const std::vector<Diagram>& pairs_5_2() {
  static const std::vector<Diagram> diagrams{
      {{0, 0}, {"012", "012", "012", "012", "012"}}, {{1, 0}, {"012", "012", "0", "012", "012"}},
      {{2, 0}, {"012", "0", "0", "012", "012"}},     {{3, 0}, {"0", "0", "0", "012", "012"}},
      {{0, 1}, {"012", "012", "012", "012", "0"}},   {{1, 1}, {"012", "012", "0", "012", "0"}},
      {{2, 1}, {"012", "0", "0", "012", "0"}},       {{3, 1}, {"0", "0", "0", "012", "0"}},
      {{0, 2}, {"012", "012", "012", "0", "0"}},     {{1, 2}, {"012", "012", "0", "0", "0"}},
      {{2, 2}, {"012", "0", "0", "0", "0"}},         {{3, 2}, {"0", "0", "0", "0", "0"}},
      {{0, 3}, {"012", "012", "01", "0", "0"}},      {{1, 3}, {"012", "01", "0", "0", "0"}},
      {{2, 3}, {"01", "0", "0", "0", "0"}},          {{3, 3}, {"0", "0", "0", "0", "0"}},
  };
  return diagrams;
}

}  // namespace golden
