#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gcg/coeffring.hpp"
#include "gcg/compat.hpp"
#include "gcg/laurent.hpp"

namespace gcg {

// Coefficients c(p, q) of x[a1, a2] = x1^-a1 x2^-a2 sum c(p, q) x1^p x2^q
// over p <= d2 [a2]_+ and q <= d1 [a1]_+.
struct GreedyTable {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;
  std::int64_t pmax = 0;
  std::int64_t qmax = 0;
  std::vector<mpz_class> c;

  const mpz_class& at(std::int64_t p, std::int64_t q) const {
    return c[static_cast<std::size_t>(p * (qmax + 1) + q)];
  }
  LaurentPoly to_laurent() const;
};

CoeffPoly pair_weight(const CoefficientMode& mode, const HGrading& s1, const VGrading& s2);

LaurentPoly greedy_combinatorial(const CoefficientMode& mode, std::int64_t a1, std::int64_t a2,
                                 int threads = 1);
// Direct sum of pair weights over an explicit list of compatible pairs.
LaurentPoly greedy_from_pairs(const CoefficientMode& mode, std::int64_t a1, std::int64_t a2,
                              const std::vector<GradingPair>& pairs);

/// The max-form recursion. Numeric mode only; for a1, a2 >= 0 every entry
/// is also checked against the closed-form branch selected by a1 q - a2 p,
/// and an extra guard row and column must come out zero.
GreedyTable greedy_recursive(const CoefficientMode& mode, std::int64_t a1, std::int64_t a2);

enum class Reflection { Sigma1, Sigma2 };

std::pair<std::int64_t, std::int64_t> reflect_params(Reflection axis, int d1, int d2,
                                                     std::int64_t a1, std::int64_t a2);

using GreedyExpansion = std::map<std::pair<std::int64_t, std::int64_t>, CoeffPoly>;

// Coefficients of f in the greedy basis; throws NotInAlgebra when the
// subtraction process does not terminate within the pass cap.
GreedyExpansion greedy_expand(const CoefficientMode& mode, const LaurentPoly& f, int threads = 1);
LaurentPoly greedy_reassemble(const CoefficientMode& mode, const GreedyExpansion& e, int threads = 1);

}  // namespace gcg
