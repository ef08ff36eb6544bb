#include "gcg/multinom.hpp"

#include <string>

#include "gcg/error.hpp"

namespace gcg {

Compositions::Compositions(int k, int r) : k_(k), r_(r) {
  if (k < 0 || r < 1) raise(ErrorCode::InvalidArgument, "compositions need k >= 0 and r >= 1");
}

Compositions::iterator Compositions::begin() const {
  iterator it;
  it.parts_.assign(static_cast<std::size_t>(r_), 0);
  it.parts_[0] = k_;
  it.done_ = false;
  return it;
}

Compositions::iterator& Compositions::iterator::operator++() {
  const int r = static_cast<int>(parts_.size());
  int i = r - 2;
  while (i >= 0 && parts_[static_cast<std::size_t>(i)] == 0) --i;
  if (i < 0) {
    done_ = true;
    parts_.clear();
    return *this;
  }
  int tail = 0;
  for (int j = i + 1; j < r; ++j) {
    tail += parts_[static_cast<std::size_t>(j)];
    parts_[static_cast<std::size_t>(j)] = 0;
  }
  --parts_[static_cast<std::size_t>(i)];
  parts_[static_cast<std::size_t>(i + 1)] = tail + 1;
  return *this;
}

std::vector<std::vector<int>> compositions(int k, int r) {
  std::vector<std::vector<int>> out;
  for (const auto& c : Compositions(k, r)) out.push_back(c);
  return out;
}

namespace {

void weighted_step(std::vector<int>& parts, int pos, int remaining, std::int64_t budget,
                   const std::function<void(const std::vector<int>&)>& visit) {
  const int r = static_cast<int>(parts.size());
  const std::int64_t weight = pos + 1;
  if (pos == r - 1) {
    if (remaining * weight <= budget) {
      parts[static_cast<std::size_t>(pos)] = remaining;
      visit(parts);
      parts[static_cast<std::size_t>(pos)] = 0;
    }
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    const std::int64_t left = budget - v * weight;
    // Cheapest completion puts the rest on the next position.
    if (left < static_cast<std::int64_t>(remaining - v) * (weight + 1)) continue;
    parts[static_cast<std::size_t>(pos)] = v;
    weighted_step(parts, pos + 1, remaining - v, left, visit);
  }
  parts[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

void for_each_weighted_composition(int k, int r, std::int64_t bound,
                                   const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || r < 1) raise(ErrorCode::InvalidArgument, "compositions need k >= 0 and r >= 1");
  std::vector<int> parts(static_cast<std::size_t>(r), 0);
  weighted_step(parts, 0, k, bound, visit);
}

mpz_class gen_binomial(std::int64_t n, std::int64_t m) {
  mpz_class out;
  if (m < 0) return out;
  if (n >= 0) {
    if (m > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    return out;
  }
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(-n + m - 1), static_cast<unsigned long>(m));
  if (m % 2 != 0) out = -out;
  return out;
}

mpz_class multinomial(std::int64_t n, std::int64_t k0, std::span<const int> parts) {
  if (n < k0) return 0;
  std::int64_t sum = 0;
  for (int k : parts) {
    if (k < 0) raise(ErrorCode::InvalidArgument, "multinomial parts must be nonnegative");
    sum += k;
  }
  if (sum != n - k0) {
    raise(ErrorCode::InconsistentArguments,
          "parts sum to " + std::to_string(sum) + " but n - k0 = " + std::to_string(n - k0));
  }
  mpz_class value = gen_binomial(n, n - k0);
  if (sgn(value) == 0) return value;
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(sum));
  value *= f;
  for (int k : parts) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), f.get_mpz_t());
  }
  return value;
}

std::vector<mpz_class> poly_power_series(std::span<const mpz_class> p, std::int64_t n, int N) {
  if (p.empty() || p[0] != 1) raise(ErrorCode::InvalidArgument, "series expansion needs constant term 1");
  if (N < 0) raise(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
  std::vector<mpz_class> out(static_cast<std::size_t>(N) + 1);
  const int d = static_cast<int>(p.size()) - 1;
  out[0] = 1;
  if (d == 0) return out;
  for (int k = 1; k <= N; ++k) {
    for_each_weighted_composition(k, d, N, [&](const std::vector<int>& parts) {
      mpz_class term = multinomial(-n + k - 1, -n - 1, parts);
      if (sgn(term) == 0) return;
      if (k % 2 != 0) term = -term;
      std::size_t exponent = 0;
      for (int i = 0; i < d; ++i) {
        const int ki = parts[static_cast<std::size_t>(i)];
        if (ki == 0) continue;
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), p[static_cast<std::size_t>(i) + 1].get_mpz_t(),
                   static_cast<unsigned long>(ki));
        term *= power;
        exponent += static_cast<std::size_t>(i + 1) * static_cast<std::size_t>(ki);
      }
      out[exponent] += term;
    });
  }
  return out;
}

}  // namespace gcg
