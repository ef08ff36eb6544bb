#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "gcg/coeffring.hpp"
#include "gcg/laurent.hpp"

namespace gcg {

// u_{k,j} with u_{-1,j} = 0, u_{0,j} = 1 and
// u_{k+1,j+1} = d_j u_{k,j} - u_{k-1,j-1}, d_j = d1 (j odd) or d2 (j even).
std::int64_t chebyshev_u(int d1, int d2, std::int64_t k, std::int64_t j);

// Greedy parameters of the cluster variable x_k.
std::pair<std::int64_t, std::int64_t> greedy_params_of_cluster_variable(int d1, int d2, std::int64_t k);
// Greedy parameters of z_k[a1, a2] = x_k^-a1 x_{k+1}^-a2 for a1, a2 <= 0.
std::pair<std::int64_t, std::int64_t> greedy_params_of_cluster_monomial(int d1, int d2, std::int64_t k,
                                                                         std::int64_t a1, std::int64_t a2);

class AlgebraContext {
 public:
  explicit AlgebraContext(CoefficientMode mode);
  AlgebraContext(const AlgebraContext&) = delete;
  AlgebraContext& operator=(const AlgebraContext&) = delete;

  const CoefficientMode& mode() const { return mode_; }
  int d1() const { return mode_.d1(); }
  int d2() const { return mode_.d2(); }

  // Clusters reachable by expand_in_cluster; defaults to [-6, 8].
  void set_cluster_range(std::int64_t lo, std::int64_t hi);
  std::pair<std::int64_t, std::int64_t> cluster_range() const { return {range_lo_, range_hi_}; }

  /// x_k as a Laurent polynomial in x1, x2, built outward from the initial
  /// cluster by exact division and cached. A failed division would
  /// contradict the Laurent phenomenon and surfaces as NotDivisible.
  LaurentPoly cluster_variable(std::int64_t k);

  // P1 for k even and P2 for k odd, so that x_{k+1} x_{k-1} = P(x_k).
  const std::vector<CoeffPoly>& exchange_polynomial(std::int64_t k) const;

  LaurentPoly standard_monomial(std::int64_t k, std::int64_t a1, std::int64_t a2);

  // Rewrites f in the cluster (x_k, x_{k+1}): e1 counts x_k, e2 counts x_{k+1}.
  LaurentPoly expand_in_cluster(const LaurentPoly& f, std::int64_t k) const;

  // sigma_1 fixes x1 and sends x2 to P2(x1)/x2; sigma_2 fixes x2 and sends
  // x1 to P1(x2)/x1.
  LaurentPoly apply_reflection(const LaurentPoly& f, int p) const;

 private:
  CoefficientMode mode_;
  std::int64_t range_lo_ = -6;
  std::int64_t range_hi_ = 8;
  mutable std::shared_mutex mutex_;
  std::map<std::int64_t, LaurentPoly> memo_;
};

}  // namespace gcg
