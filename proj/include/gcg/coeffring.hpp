#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gcg {

enum class Family : std::uint8_t { Rho, Varrho };

// A formal exchange coefficient rho_t or varrho_t, always stored with its
// palindromic representative index min(t, d - t).
struct GeneratorId {
  Family family = Family::Rho;
  std::uint32_t index = 1;

  auto operator<=>(const GeneratorId&) const = default;
};

GeneratorId make_rho(int t, int d1);
GeneratorId make_varrho(int t, int d2);
std::string generator_name(GeneratorId g);

// Sparse exponent vector, sorted by generator, no zero exponents.
using Exponents = std::vector<std::pair<GeneratorId, std::uint32_t>>;

// Graded lexicographic comparison of exponent vectors.
std::strong_ordering compare_monomials(const Exponents& a, const Exponents& b);
std::uint64_t total_degree(const Exponents& e);

class CoeffPoly {
 public:
  struct Term {
    Exponents mono;
    mpz_class coeff;
    bool operator==(const Term& other) const {
      return mono == other.mono && coeff == other.coeff;
    }
  };

  CoeffPoly() = default;
  CoeffPoly(long value) : constant_(value) {}
  CoeffPoly(const mpz_class& value) : constant_(value) {}
  CoeffPoly(mpz_class&& value) : constant_(std::move(value)) {}

  static CoeffPoly generator(GeneratorId g, std::uint32_t power = 1);
  // Builds a canonical polynomial from arbitrary terms (merges, drops zeros).
  static CoeffPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty() && sgn(constant_) == 0; }
  bool is_constant() const { return terms_.empty(); }
  bool is_one() const { return terms_.empty() && constant_ == 1; }
  const mpz_class& constant_term() const { return constant_; }

  // All terms in ascending monomial order, the constant first when nonzero.
  std::vector<Term> terms() const;
  std::size_t term_count() const {
    return terms_.size() + (sgn(constant_) != 0 ? 1 : 0);
  }
  // Largest monomial under the graded lexicographic order.
  Term leading_term() const;

  bool operator==(const CoeffPoly& other) const {
    return constant_ == other.constant_ && terms_ == other.terms_;
  }

  CoeffPoly& operator+=(const CoeffPoly& other);
  CoeffPoly& operator-=(const CoeffPoly& other);
  CoeffPoly operator-() const;

  friend void cf_addmul(CoeffPoly& acc, const CoeffPoly& a, const CoeffPoly& b);
  friend void cf_submul(CoeffPoly& acc, const CoeffPoly& a, const CoeffPoly& b);
  friend CoeffPoly cf_mul(const CoeffPoly& a, const CoeffPoly& b);
  friend class CoeffAccumulator;

 private:
  void add_terms(const std::vector<Term>& other, int sign);

  mpz_class constant_;
  std::vector<Term> terms_;  // non-constant monomials, ascending order
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

// Hashed running sum of products; the ordered form is built once by take().
class CoeffAccumulator {
 public:
  void add(const CoeffPoly& a);
  void addmul(const CoeffPoly& a, const CoeffPoly& b);
  void submul(const CoeffPoly& a, const CoeffPoly& b);
  CoeffPoly take();

 private:
  void accumulate(const CoeffPoly& a, const CoeffPoly& b, bool negate);

  mpz_class constant_;
  std::unordered_map<Exponents, mpz_class, ExponentsHash> terms_;
  Exponents scratch_;
};

CoeffPoly cf_add(const CoeffPoly& a, const CoeffPoly& b);
CoeffPoly cf_sub(const CoeffPoly& a, const CoeffPoly& b);
CoeffPoly cf_mul(const CoeffPoly& a, const CoeffPoly& b);
// acc += a * b and acc -= a * b without temporaries in the constant case.
void cf_addmul(CoeffPoly& acc, const CoeffPoly& a, const CoeffPoly& b);
void cf_submul(CoeffPoly& acc, const CoeffPoly& a, const CoeffPoly& b);
CoeffPoly cf_pow(const CoeffPoly& a, unsigned n);

/// Exact quotient a / b over the integer polynomial ring.
/// Throws NotDivisible when b does not divide a, InvalidArgument when b = 0.
CoeffPoly cf_exact_div(const CoeffPoly& a, const CoeffPoly& b);

mpz_class cf_eval(const CoeffPoly& a, const std::map<GeneratorId, mpz_class>& assignment);

inline CoeffPoly operator+(const CoeffPoly& a, const CoeffPoly& b) { return cf_add(a, b); }
inline CoeffPoly operator-(const CoeffPoly& a, const CoeffPoly& b) { return cf_sub(a, b); }
inline CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) { return cf_mul(a, b); }

std::string to_string(const CoeffPoly& a);

// Either formal generators of given degrees, or concrete integer
// coefficient lists for P1 and P2 (low to high).
class CoefficientMode {
 public:
  static CoefficientMode symbolic(int d1, int d2);
  static CoefficientMode numeric(std::vector<mpz_class> p1, std::vector<mpz_class> p2);
  // Numeric mode with every coefficient equal to one.
  static CoefficientMode all_ones(int d1, int d2);

  bool is_numeric() const { return numeric_; }
  int d1() const { return d1_; }
  int d2() const { return d2_; }

  // rho_t and varrho_t with rho_0 = rho_d = 1 and palindromic identification.
  CoeffPoly rho(int t) const;
  CoeffPoly varrho(int t) const;
  const std::vector<CoeffPoly>& p1() const { return p1_; }
  const std::vector<CoeffPoly>& p2() const { return p2_; }
  const std::vector<CoeffPoly>& p(int which) const { return which == 1 ? p1_ : p2_; }
  // Integer coefficients; throws SymbolicModeUnsupported in symbolic mode.
  const std::vector<mpz_class>& numeric_p1() const;
  const std::vector<mpz_class>& numeric_p2() const;

 private:
  CoefficientMode() = default;

  bool numeric_ = false;
  int d1_ = 0;
  int d2_ = 0;
  std::vector<mpz_class> n1_, n2_;
  std::vector<CoeffPoly> p1_, p2_;
};

}  // namespace gcg
