#include "gcg/greedy.hpp"

#include <algorithm>
#include <string>

#include "gcg/error.hpp"
#include "gcg/multinom.hpp"

namespace gcg {

namespace {

std::int64_t positive_part(std::int64_t a) { return a > 0 ? a : 0; }

LaurentPoly univariate_x2(const std::vector<CoeffPoly>& coeffs) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (!coeffs[t].is_zero()) terms.emplace_back(Monomial2{0, static_cast<std::int64_t>(t)}, coeffs[t]);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

LaurentPoly GreedyTable::to_laurent() const {
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t p = 0; p <= pmax; ++p) {
    for (std::int64_t q = 0; q <= qmax; ++q) {
      const mpz_class& v = at(p, q);
      if (sgn(v) != 0) terms.emplace_back(Monomial2{p - a1, q - a2}, CoeffPoly(v));
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

CoeffPoly pair_weight(const CoefficientMode& mode, const HGrading& s1, const VGrading& s2) {
  CoeffPoly w(1L);
  for (int value : s1) w = cf_mul(w, mode.rho(value));
  for (int value : s2) w = cf_mul(w, mode.varrho(value));
  return w;
}

LaurentPoly greedy_from_pairs(const CoefficientMode& mode, std::int64_t a1, std::int64_t a2,
                              const std::vector<GradingPair>& pairs) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(pairs.size());
  for (const auto& pair : pairs) {
    terms.emplace_back(Monomial2{pair.m2() - a1, pair.m1() - a2}, pair_weight(mode, pair.s1, pair.s2));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly greedy_combinatorial(const CoefficientMode& mode, std::int64_t a1, std::int64_t a2, int threads) {
  const std::int64_t b1 = positive_part(a1), b2 = positive_part(a2);
  const auto classes = vertical_classes(static_cast<int>(b1), static_cast<int>(b2), mode.d1(), mode.d2(), threads);
  const LaurentPoly p1 = univariate_x2(mode.p1());
  std::vector<LaurentPoly> p1_powers{LaurentPoly(1L)};
  // Sum over each vertical grading, collected by |S2| (the x1 exponent).
  std::map<std::int64_t, LaurentPoly> by_m2;
  for (const auto& c : classes) {
    std::vector<LaurentPoly::Term> remote_terms;
    for (const auto& values : c.remote_values) {
      CoeffPoly w(1L);
      std::int64_t size = 0;
      for (int v : values) {
        w = cf_mul(w, mode.rho(v));
        size += v;
      }
      remote_terms.emplace_back(Monomial2{0, size}, std::move(w));
    }
    LaurentPoly inner = LaurentPoly::from_terms(std::move(remote_terms));
    while (p1_powers.size() <= c.free_edges.size()) p1_powers.push_back(lp_mul(p1_powers.back(), p1));
    inner = lp_mul(inner, p1_powers[c.free_edges.size()]);
    CoeffPoly weight(1L);
    for (int v : c.s2) weight = cf_mul(weight, mode.varrho(v));
    auto& slot = by_m2[grading_size(c.s2)];
    slot = lp_add(slot, lp_scale(inner, weight));
  }
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [m2, poly] : by_m2) {
    for (const auto& [m, coeff] : poly.terms()) terms.emplace_back(Monomial2{m2 - a1, m.e2 - a2}, coeff);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

GreedyTable greedy_recursive(const CoefficientMode& mode, std::int64_t a1, std::int64_t a2) {
  if (!mode.is_numeric()) {
    raise(ErrorCode::SymbolicModeUnsupported, "the greedy recursion needs integer coefficients");
  }
  const int d1 = mode.d1(), d2 = mode.d2();
  const auto& rho = mode.numeric_p1();
  const auto& varrho = mode.numeric_p2();
  GreedyTable table;
  table.a1 = a1;
  table.a2 = a2;
  table.pmax = d2 * positive_part(a2);
  table.qmax = d1 * positive_part(a1);
  // Work on a grid with one extra guard row and column.
  const std::int64_t prows = table.pmax + 2, qcols = table.qmax + 2;
  std::vector<mpz_class> grid(static_cast<std::size_t>(prows * qcols));
  auto cell = [&](std::int64_t p, std::int64_t q) -> mpz_class& {
    return grid[static_cast<std::size_t>(p * qcols + q)];
  };
  cell(0, 0) = 1;
  const bool check_closed_form = a1 >= 0 && a2 >= 0;

  auto weighted_sum = [](int k, int d, std::int64_t bound, std::int64_t top, std::int64_t k0_base,
                         const std::vector<mpz_class>& coeffs, auto&& lookup) {
    mpz_class total;
    if (d == 0) return total;
    for_each_weighted_composition(k, d, bound, [&](const std::vector<int>& parts) {
      std::int64_t shift = 0;
      mpz_class term(1);
      for (int i = 0; i < d; ++i) {
        const int ki = parts[static_cast<std::size_t>(i)];
        if (ki == 0) continue;
        shift += static_cast<std::int64_t>(i + 1) * ki;
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), coeffs[static_cast<std::size_t>(i) + 1].get_mpz_t(),
                   static_cast<unsigned long>(ki));
        term *= power;
      }
      const mpz_class& prev = lookup(shift);
      if (sgn(prev) == 0) return;
      term *= prev;
      term *= multinomial(top + k - 1, k0_base - 1, parts);
      if ((k - 1) % 2 != 0) term = -term;
      total += term;
    });
    return total;
  };

  for (std::int64_t s = 1; s <= prows - 1 + qcols - 1; ++s) {
    for (std::int64_t p = std::max<std::int64_t>(0, s - (qcols - 1)); p <= std::min(s, prows - 1); ++p) {
      const std::int64_t q = s - p;
      mpz_class sum_a, sum_b;
      for (std::int64_t k = 1; k <= p; ++k) {
        sum_a += weighted_sum(static_cast<int>(k), d2, p, a2 - q, a2 - q, varrho,
                              [&](std::int64_t shift) -> const mpz_class& { return cell(p - shift, q); });
      }
      for (std::int64_t l = 1; l <= q; ++l) {
        sum_b += weighted_sum(static_cast<int>(l), d1, q, a1 - p, a1 - p, rho,
                              [&](std::int64_t shift) -> const mpz_class& { return cell(p, q - shift); });
      }
      if (sgn(sum_a) < 0) sum_a = 0;
      if (sgn(sum_b) < 0) sum_b = 0;
      mpz_class value = sum_a > sum_b ? sum_a : sum_b;
      if (check_closed_form) {
        const std::int64_t lhs = a1 * q, rhs = a2 * p;
        if ((lhs <= rhs && value != sum_a) || (lhs >= rhs && value != sum_b)) {
          raise(ErrorCode::Internal, "closed-form branch disagrees with the max form at (" +
                                         std::to_string(p) + "," + std::to_string(q) + ")");
        }
      }
      if ((p > table.pmax || q > table.qmax) && sgn(value) != 0) {
        raise(ErrorCode::Internal, "greedy coefficient outside the expected box at (" +
                                       std::to_string(p) + "," + std::to_string(q) + ")");
      }
      cell(p, q) = std::move(value);
    }
  }
  table.c.resize(static_cast<std::size_t>((table.pmax + 1) * (table.qmax + 1)));
  for (std::int64_t p = 0; p <= table.pmax; ++p) {
    for (std::int64_t q = 0; q <= table.qmax; ++q) {
      table.c[static_cast<std::size_t>(p * (table.qmax + 1) + q)] = cell(p, q);
    }
  }
  return table;
}

std::pair<std::int64_t, std::int64_t> reflect_params(Reflection axis, int d1, int d2, std::int64_t a1,
                                                     std::int64_t a2) {
  if (axis == Reflection::Sigma1) return {a1, d1 * positive_part(a1) - a2};
  return {d2 * positive_part(a2) - a1, a2};
}

GreedyExpansion greedy_expand(const CoefficientMode& mode, const LaurentPoly& f, int threads) {
  GreedyExpansion out;
  if (f.is_zero()) return out;
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const std::int64_t deg = m.e1 + m.e2;
    lo = first ? deg : std::min(lo, deg);
    hi = first ? deg : std::max(hi, deg);
    first = false;
  }
  const std::int64_t cap = 10 * (hi - lo + 1);
  std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> cache;
  LaurentPoly residual = f;
  std::int64_t last_degree = lo - 1;
  for (std::int64_t pass = 0; !residual.is_zero(); ++pass) {
    if (pass >= cap) raise(ErrorCode::NotInAlgebra, "greedy expansion exceeded its pass limit");
    std::int64_t m = 0;
    first = true;
    for (const auto& [e, c] : residual.terms()) {
      m = first ? e.e1 + e.e2 : std::min(m, e.e1 + e.e2);
      first = false;
    }
    if (m <= last_degree) raise(ErrorCode::NotInAlgebra, "greedy expansion stopped making progress");
    last_degree = m;
    LaurentPoly subtract;
    for (const auto& [e, c] : residual.terms()) {
      if (e.e1 + e.e2 != m) continue;
      const auto key = std::make_pair(-e.e1, -e.e2);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, greedy_combinatorial(mode, key.first, key.second, threads)).first;
      subtract = lp_add(subtract, lp_scale(it->second, c));
      out[key] += c;
    }
    residual = lp_sub(residual, subtract);
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

LaurentPoly greedy_reassemble(const CoefficientMode& mode, const GreedyExpansion& e, int threads) {
  LaurentPoly total;
  for (const auto& [point, c] : e) {
    total = lp_add(total, lp_scale(greedy_combinatorial(mode, point.first, point.second, threads), c));
  }
  return total;
}

}  // namespace gcg
