#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gcg/coeffring.hpp"

namespace gcg {

struct Monomial2 {
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  auto operator<=>(const Monomial2&) const = default;
};

// Sparse Laurent polynomial in x1, x2; terms kept sorted by (e1, e2).
class LaurentPoly {
 public:
  using Term = std::pair<Monomial2, CoeffPoly>;

  LaurentPoly() = default;
  LaurentPoly(const CoeffPoly& c);
  LaurentPoly(long c) : LaurentPoly(CoeffPoly(c)) {}

  static LaurentPoly monomial(std::int64_t e1, std::int64_t e2, CoeffPoly c = CoeffPoly(1L));
  static LaurentPoly x1() { return monomial(1, 0); }
  static LaurentPoly x2() { return monomial(0, 1); }
  // Accepts unsorted terms with repeats; zero sums are dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  CoeffPoly coeff(Monomial2 m) const;
  Monomial2 min_exponents() const;  // componentwise
  Monomial2 max_exponents() const;

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }

 private:
  std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_neg(const LaurentPoly& f);
LaurentPoly lp_scale(const LaurentPoly& f, const CoeffPoly& c);
LaurentPoly lp_shift(const LaurentPoly& f, std::int64_t e1, std::int64_t e2);
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_pow(const LaurentPoly& f, unsigned n);

/// Exact quotient f / g as Laurent polynomials.
/// Both operands are first normalized by their minimal monomial, then the
/// ordinary polynomials are divided by leading-term elimination in graded
/// lex order with e1 > e2. Throws NotDivisible when the quotient is not
/// Laurent, InvalidArgument when g = 0.
LaurentPoly lp_exact_div(const LaurentPoly& f, const LaurentPoly& g);

// Sum of P[i] * arg^i.
LaurentPoly lp_eval_univariate(const std::vector<CoeffPoly>& p, const LaurentPoly& arg);

// Substitutes x_var -> numerator / y where numerator only involves the other
// variable; y takes the slot of x_var in the result. Throws NotLaurent.
LaurentPoly lp_substitute_ratio(const LaurentPoly& f, int var, const LaurentPoly& numerator);

// Exchanges the roles of x1 and x2.
LaurentPoly lp_swap(const LaurentPoly& f);

struct PointedForm {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::map<std::pair<std::int64_t, std::int64_t>, CoeffPoly> coeffs;
};

PointedForm lp_to_pointed(const LaurentPoly& f);
LaurentPoly lp_from_pointed(const PointedForm& p);

// Numeric coefficients only: nonzero with every coefficient >= 0.
bool lp_is_positive(const LaurentPoly& f);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return lp_add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return lp_sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return lp_mul(a, b); }

}  // namespace gcg
