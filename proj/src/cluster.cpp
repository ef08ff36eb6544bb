#include "gcg/cluster.hpp"

#include <limits>
#include <string>

#include "gcg/error.hpp"

namespace gcg {

namespace {

std::int64_t positive_part(std::int64_t a) { return a > 0 ? a : 0; }

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    raise(ErrorCode::InvalidArgument, "Chebyshev value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

LaurentPoly univariate(const std::vector<CoeffPoly>& coeffs, int slot) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    const auto e = static_cast<std::int64_t>(t);
    terms.emplace_back(slot == 1 ? Monomial2{e, 0} : Monomial2{0, e}, coeffs[t]);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

std::int64_t chebyshev_u(int d1, int d2, std::int64_t k, std::int64_t j) {
  auto d = [&](std::int64_t index) -> __int128 { return index % 2 != 0 ? d1 : d2; };
  // Walk the diagonal w_i = u_{i, j - k + i} from (w_{-1}, w_0) = (0, 1).
  const std::int64_t base = j - k;
  __int128 prev = 0, cur = 1;
  if (k == -1) return 0;
  if (k >= 0) {
    for (std::int64_t i = 0; i < k; ++i) {
      const __int128 next = d(base + i) * cur - prev;
      prev = cur;
      cur = narrow(next);
    }
    return narrow(cur);
  }
  // Downward: w_{i-1} = d_{base+i} w_i - w_{i+1}, starting from w_0 = 1, w_{-1} = 0.
  __int128 upper = 1, lower = 0;
  for (std::int64_t i = -1; i > k; --i) {
    const __int128 next = d(base + i) * lower - upper;
    upper = lower;
    lower = narrow(next);
  }
  return narrow(lower);
}

std::pair<std::int64_t, std::int64_t> greedy_params_of_cluster_variable(int d1, int d2, std::int64_t k) {
  return greedy_params_of_cluster_monomial(d1, d2, k, -1, 0);
}

std::pair<std::int64_t, std::int64_t> greedy_params_of_cluster_monomial(int d1, int d2, std::int64_t k,
                                                                         std::int64_t a1, std::int64_t a2) {
  if (a1 > 0 || a2 > 0) raise(ErrorCode::InvalidArgument, "cluster monomial exponents must be nonpositive");
  auto u = [&](std::int64_t kk, std::int64_t j) -> __int128 { return chebyshev_u(d1, d2, kk, j); };
  __int128 b1, b2;
  if (k >= 2) {
    b1 = -a1 * u(k - 3, 1) - a2 * u(k - 2, 1);
    b2 = -a1 * u(k - 4, 2) - a2 * u(k - 3, 2);
  } else if (k == 1) {
    b1 = a1;
    b2 = a2;
  } else {
    b1 = -a1 * u(-k - 1, 1) - a2 * u(-k - 2, 1);
    b2 = -a1 * u(-k, 2) - a2 * u(-k - 1, 2);
  }
  return {narrow(b1), narrow(b2)};
}

AlgebraContext::AlgebraContext(CoefficientMode mode) : mode_(std::move(mode)) {
  memo_.emplace(1, LaurentPoly::x1());
  memo_.emplace(2, LaurentPoly::x2());
}

void AlgebraContext::set_cluster_range(std::int64_t lo, std::int64_t hi) {
  if (lo > 1 || hi < 1) raise(ErrorCode::InvalidArgument, "cluster range must contain 1");
  range_lo_ = lo;
  range_hi_ = hi;
}

const std::vector<CoeffPoly>& AlgebraContext::exchange_polynomial(std::int64_t k) const {
  return k % 2 == 0 ? mode_.p1() : mode_.p2();
}

LaurentPoly AlgebraContext::cluster_variable(std::int64_t k) {
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  if (k > 2) {
    for (std::int64_t i = memo_.rbegin()->first + 1; i <= k; ++i) {
      const LaurentPoly& prev = memo_.at(i - 1);
      const LaurentPoly numerator = lp_eval_univariate(exchange_polynomial(i - 1), prev);
      memo_.emplace(i, lp_exact_div(numerator, memo_.at(i - 2)));
    }
  } else {
    for (std::int64_t i = memo_.begin()->first - 1; i >= k; --i) {
      const LaurentPoly& next = memo_.at(i + 1);
      const LaurentPoly numerator = lp_eval_univariate(exchange_polynomial(i + 1), next);
      memo_.emplace(i, lp_exact_div(numerator, memo_.at(i + 2)));
    }
  }
  return memo_.at(k);
}

LaurentPoly AlgebraContext::standard_monomial(std::int64_t k, std::int64_t a1, std::int64_t a2) {
  LaurentPoly out(1L);
  auto factor = [&](std::int64_t index, std::int64_t power) {
    if (power > 0) out = lp_mul(out, lp_pow(cluster_variable(index), static_cast<unsigned>(power)));
  };
  factor(k - 1, positive_part(a2));
  factor(k, positive_part(-a1));
  factor(k + 1, positive_part(-a2));
  factor(k + 2, positive_part(a1));
  return out;
}

LaurentPoly AlgebraContext::expand_in_cluster(const LaurentPoly& f, std::int64_t k) const {
  if (k < range_lo_ || k > range_hi_) {
    raise(ErrorCode::InvalidArgument, "cluster " + std::to_string(k) + " outside the configured range [" +
                                          std::to_string(range_lo_) + ", " + std::to_string(range_hi_) + "]");
  }
  LaurentPoly g = f;
  for (std::int64_t c = 1; c < k; ++c) {
    // x_c = P(x_{c+1}) / x_{c+2}
    g = lp_swap(lp_substitute_ratio(g, 1, univariate(exchange_polynomial(c + 1), 2)));
  }
  for (std::int64_t c = 1; c > k; --c) {
    // x_{c+1} = P(x_c) / x_{c-1}
    g = lp_swap(lp_substitute_ratio(g, 2, univariate(exchange_polynomial(c), 1)));
  }
  return g;
}

LaurentPoly AlgebraContext::apply_reflection(const LaurentPoly& f, int p) const {
  if (p == 2) return lp_substitute_ratio(f, 1, univariate(mode_.p1(), 2));
  if (p == 1) return lp_substitute_ratio(f, 2, univariate(mode_.p2(), 1));
  raise(ErrorCode::InvalidArgument, "reflection index must be 1 or 2");
}

}  // namespace gcg
