#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <vector>

namespace gcg {

// All vectors of r nonnegative integers summing to k, starting at
// (k, 0, ..., 0) and ending at (0, ..., 0, k).
class Compositions {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::vector<int>*;
    using reference = const std::vector<int>&;

    iterator() = default;
    reference operator*() const { return parts_; }
    pointer operator->() const { return &parts_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator& other) const { return done_ == other.done_ && (done_ || parts_ == other.parts_); }

   private:
    friend class Compositions;
    std::vector<int> parts_;
    bool done_ = true;
  };

  Compositions(int k, int r);
  iterator begin() const;
  iterator end() const { return iterator(); }

 private:
  int k_;
  int r_;
};

std::vector<std::vector<int>> compositions(int k, int r);

// Visits compositions (k_1..k_r) of k with sum of i * k_i at most bound, in
// the same order as Compositions.
void for_each_weighted_composition(int k, int r, std::int64_t bound,
                                   const std::function<void(const std::vector<int>&)>& visit);

mpz_class gen_binomial(std::int64_t n, std::int64_t m);
mpz_class multinomial(std::int64_t n, std::int64_t k0, std::span<const int> parts);

/// Coefficients of z^0..z^N in P(z)^n for P with constant term 1, via the
/// composition expansion with generalized multinomials. Valid for negative n.
std::vector<mpz_class> poly_power_series(std::span<const mpz_class> p, std::int64_t n, int N);

}  // namespace gcg
