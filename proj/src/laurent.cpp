#include "gcg/laurent.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "gcg/error.hpp"

namespace gcg {

namespace {

// Dense scratch grids above this many cells fall back to hashing.
constexpr std::int64_t kDenseCellLimit = std::int64_t{1} << 22;

std::uint64_t pack(std::int64_t e1, std::int64_t e2) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e1)) << 32) |
         static_cast<std::uint32_t>(e2);
}

void check_exponent(std::int64_t e) {
  if (e > std::numeric_limits<std::int32_t>::max() / 2 ||
      e < std::numeric_limits<std::int32_t>::min() / 2) {
    raise(ErrorCode::InvalidArgument, "exponent out of supported range");
  }
}

CoeffPoly divide_coefficient(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.is_constant() && b.is_constant()) {
    if (!mpz_divisible_p(a.constant_term().get_mpz_t(), b.constant_term().get_mpz_t())) {
      raise(ErrorCode::NotDivisible, "leading coefficient does not divide");
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.constant_term().get_mpz_t(), b.constant_term().get_mpz_t());
    return CoeffPoly(std::move(q));
  }
  return cf_exact_div(a, b);
}

struct ShiftedTerm {
  std::int64_t e1;
  std::int64_t e2;
  const CoeffPoly* c;
};

}  // namespace

LaurentPoly::LaurentPoly(const CoeffPoly& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial2{0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t e1, std::int64_t e2, CoeffPoly c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(Monomial2{e1, e2}, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      continue;
    }
    if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
    p.terms_.push_back(std::move(t));
  }
  if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  return p;
}

CoeffPoly LaurentPoly::coeff(Monomial2 m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial2& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return CoeffPoly();
}

Monomial2 LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial2 m = terms_.front().first;
  for (const auto& [e, c] : terms_) m.e2 = std::min(m.e2, e.e2);
  return m;
}

Monomial2 LaurentPoly::max_exponents() const {
  if (terms_.empty()) return {};
  Monomial2 m = terms_.back().first;
  for (const auto& [e, c] : terms_) m.e2 = std::max(m.e2, e.e2);
  return m;
}

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.size() + g.size());
  auto i = f.terms().begin();
  auto j = g.terms().begin();
  while (i != f.terms().end() || j != g.terms().end()) {
    if (j == g.terms().end() || (i != f.terms().end() && i->first < j->first)) {
      terms.push_back(*i++);
    } else if (i == f.terms().end() || j->first < i->first) {
      terms.push_back(*j++);
    } else {
      CoeffPoly s = cf_add(i->second, j->second);
      if (!s.is_zero()) terms.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly lp_neg(const LaurentPoly& f) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, -c);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly lp_sub(const LaurentPoly& f, const LaurentPoly& g) { return lp_add(f, lp_neg(g)); }

LaurentPoly lp_scale(const LaurentPoly& f, const CoeffPoly& c) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, x] : f.terms()) terms.emplace_back(m, cf_mul(x, c));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly lp_shift(const LaurentPoly& f, std::int64_t e1, std::int64_t e2) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(Monomial2{m.e1 + e1, m.e2 + e2}, c);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return LaurentPoly();
  const Monomial2 fmin = f.min_exponents(), fmax = f.max_exponents();
  const Monomial2 gmin = g.min_exponents(), gmax = g.max_exponents();
  const std::int64_t base1 = fmin.e1 + gmin.e1;
  const std::int64_t base2 = fmin.e2 + gmin.e2;
  check_exponent(base1);
  check_exponent(base2);
  check_exponent(fmax.e1 + gmax.e1);
  check_exponent(fmax.e2 + gmax.e2);
  const std::int64_t w1 = fmax.e1 + gmax.e1 - base1 + 1;
  const std::int64_t w2 = fmax.e2 + gmax.e2 - base2 + 1;
  const double area = static_cast<double>(w1) * static_cast<double>(w2);
  const double pairs = static_cast<double>(f.size()) * static_cast<double>(g.size());

  std::vector<LaurentPoly::Term> terms;
  if (area <= static_cast<double>(kDenseCellLimit) && area <= 16.0 * pairs + 4096.0) {
    std::vector<CoeffAccumulator> cells(static_cast<std::size_t>(w1 * w2));
    for (const auto& [a, ca] : f.terms()) {
      for (const auto& [b, cb] : g.terms()) {
        const std::int64_t idx = (a.e1 + b.e1 - base1) * w2 + (a.e2 + b.e2 - base2);
        cells[static_cast<std::size_t>(idx)].addmul(ca, cb);
      }
    }
    for (std::int64_t i = 0; i < w1; ++i) {
      for (std::int64_t j = 0; j < w2; ++j) {
        CoeffPoly c = cells[static_cast<std::size_t>(i * w2 + j)].take();
        if (!c.is_zero()) terms.emplace_back(Monomial2{base1 + i, base2 + j}, std::move(c));
      }
    }
    return LaurentPoly::from_terms(std::move(terms));
  }
  std::unordered_map<std::uint64_t, std::pair<Monomial2, CoeffAccumulator>> acc;
  acc.reserve(f.size() + g.size());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Monomial2 m{a.e1 + b.e1, a.e2 + b.e2};
      auto& slot = acc[pack(m.e1, m.e2)];
      slot.first = m;
      slot.second.addmul(ca, cb);
    }
  }
  terms.reserve(acc.size());
  for (auto& [k, v] : acc) {
    CoeffPoly c = v.second.take();
    if (!c.is_zero()) terms.emplace_back(v.first, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly lp_pow(const LaurentPoly& f, unsigned n) {
  LaurentPoly result(1L);
  LaurentPoly base = f;
  while (n > 0) {
    if (n & 1U) result = lp_mul(result, base);
    n >>= 1U;
    if (n > 0) base = lp_mul(base, base);
  }
  return result;
}

LaurentPoly lp_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) raise(ErrorCode::InvalidArgument, "division by the zero Laurent polynomial");
  if (f.is_zero()) return LaurentPoly();
  const Monomial2 fmin = f.min_exponents(), fmax = f.max_exponents();
  const Monomial2 gmin = g.min_exponents(), gmax = g.max_exponents();
  const std::int64_t f1 = fmax.e1 - fmin.e1, f2 = fmax.e2 - fmin.e2;
  const std::int64_t g1 = gmax.e1 - gmin.e1, g2 = gmax.e2 - gmin.e2;
  if (g1 > f1 || g2 > f2) raise(ErrorCode::NotDivisible, "divisor has a wider Newton box");
  const std::int64_t q1max = f1 - g1, q2max = f2 - g2;
  const std::int64_t shift1 = fmin.e1 - gmin.e1, shift2 = fmin.e2 - gmin.e2;

  std::vector<ShiftedTerm> divisor;
  divisor.reserve(g.size());
  ShiftedTerm lead{-1, -1, nullptr};
  for (const auto& [m, c] : g.terms()) {
    ShiftedTerm t{m.e1 - gmin.e1, m.e2 - gmin.e2, &c};
    divisor.push_back(t);
    const std::int64_t deg = t.e1 + t.e2, lead_deg = lead.e1 + lead.e2;
    if (lead.c == nullptr || deg > lead_deg || (deg == lead_deg && t.e1 > lead.e1)) lead = t;
  }

  std::vector<LaurentPoly::Term> quotient;
  auto emit = [&](std::int64_t e1, std::int64_t e2, const CoeffPoly& r,
                  auto&& subtract) {
    const std::int64_t q1 = e1 - lead.e1, q2 = e2 - lead.e2;
    if (q1 < 0 || q2 < 0 || q1 > q1max || q2 > q2max) {
      raise(ErrorCode::NotDivisible, "Laurent quotient does not exist");
    }
    CoeffPoly qc = divide_coefficient(r, *lead.c);
    for (const auto& t : divisor) subtract(q1 + t.e1, q2 + t.e2, qc, *t.c);
    quotient.emplace_back(Monomial2{q1 + shift1, q2 + shift2}, std::move(qc));
  };

  const double area = static_cast<double>(f1 + 1) * static_cast<double>(f2 + 1);
  if (area <= static_cast<double>(kDenseCellLimit) &&
      area <= 64.0 * static_cast<double>(f.size()) + 4096.0) {
    const std::int64_t w2 = f2 + 1;
    std::vector<CoeffAccumulator> rem(static_cast<std::size_t>((f1 + 1) * w2));
    for (const auto& [m, c] : f.terms()) {
      rem[static_cast<std::size_t>((m.e1 - fmin.e1) * w2 + (m.e2 - fmin.e2))].add(c);
    }
    auto subtract = [&](std::int64_t e1, std::int64_t e2, const CoeffPoly& a, const CoeffPoly& b) {
      rem[static_cast<std::size_t>(e1 * w2 + e2)].submul(a, b);
    };
    for (std::int64_t deg = f1 + f2; deg >= 0; --deg) {
      for (std::int64_t e1 = std::min(deg, f1); e1 >= std::max<std::int64_t>(0, deg - f2); --e1) {
        const std::int64_t e2 = deg - e1;
        auto& cell = rem[static_cast<std::size_t>(e1 * w2 + e2)];
        CoeffPoly current = cell.take();
        if (current.is_zero()) continue;
        emit(e1, e2, current, subtract);
        // The cell now holds -current exactly when the lead cancelled.
        CoeffPoly residue = cell.take();
        residue += current;
        if (!residue.is_zero()) raise(ErrorCode::Internal, "leading term did not cancel");
      }
    }
    return LaurentPoly::from_terms(std::move(quotient));
  }

  // Sparse remainder keyed by (total degree, e1); largest key is the leading term.
  std::map<std::pair<std::int64_t, std::int64_t>, CoeffPoly> rem;
  for (const auto& [m, c] : f.terms()) {
    const std::int64_t e1 = m.e1 - fmin.e1, e2 = m.e2 - fmin.e2;
    rem.emplace(std::make_pair(e1 + e2, e1), c);
  }
  auto subtract = [&](std::int64_t e1, std::int64_t e2, const CoeffPoly& a, const CoeffPoly& b) {
    auto [it, inserted] = rem.try_emplace(std::make_pair(e1 + e2, e1));
    cf_submul(it->second, a, b);
    if (it->second.is_zero()) rem.erase(it);
  };
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const std::int64_t e1 = top->first.second, e2 = top->first.first - e1;
    CoeffPoly current = top->second;
    emit(e1, e2, current, subtract);
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly lp_eval_univariate(const std::vector<CoeffPoly>& p, const LaurentPoly& arg) {
  if (p.empty()) raise(ErrorCode::InvalidArgument, "empty coefficient list");
  LaurentPoly result(p.back());
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    result = lp_add(lp_mul(result, arg), LaurentPoly(p[i]));
  }
  return result;
}

LaurentPoly lp_swap(const LaurentPoly& f) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(Monomial2{m.e2, m.e1}, c);
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly lp_substitute_ratio(const LaurentPoly& f, int var, const LaurentPoly& numerator) {
  if (var != 1 && var != 2) raise(ErrorCode::InvalidArgument, "variable must be 1 or 2");
  if (numerator.is_zero()) raise(ErrorCode::InvalidArgument, "numerator must be nonzero");
  for (const auto& [m, c] : numerator.terms()) {
    if ((var == 1 ? m.e1 : m.e2) != 0) {
      raise(ErrorCode::InvalidArgument, "numerator must not involve the substituted variable");
    }
  }
  // Slices of f by the exponent of x_var, each a Laurent polynomial in the other variable.
  std::map<std::int64_t, std::vector<LaurentPoly::Term>> slices;
  for (const auto& [m, c] : f.terms()) {
    const std::int64_t e = var == 1 ? m.e1 : m.e2;
    Monomial2 rest = var == 1 ? Monomial2{0, m.e2} : Monomial2{m.e1, 0};
    slices[e].emplace_back(rest, c);
  }
  std::vector<LaurentPoly> powers{LaurentPoly(1L)};
  auto power = [&](std::int64_t n) -> const LaurentPoly& {
    while (static_cast<std::int64_t>(powers.size()) <= n) {
      powers.push_back(lp_mul(powers.back(), numerator));
    }
    return powers[static_cast<std::size_t>(n)];
  };
  std::vector<LaurentPoly::Term> out;
  for (auto& [e, terms] : slices) {
    LaurentPoly slice = LaurentPoly::from_terms(std::move(terms));
    LaurentPoly image;
    if (e >= 0) {
      image = lp_mul(slice, power(e));
    } else {
      try {
        image = lp_exact_div(slice, power(-e));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NotDivisible) throw;
        raise(ErrorCode::NotLaurent, "substitution leaves a non-Laurent remainder");
      }
    }
    for (const auto& [m, c] : image.terms()) {
      Monomial2 placed = var == 1 ? Monomial2{-e, m.e2} : Monomial2{m.e1, -e};
      out.emplace_back(placed, c);
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

PointedForm lp_to_pointed(const LaurentPoly& f) {
  if (f.is_zero()) raise(ErrorCode::NotPointed, "the zero polynomial is not pointed");
  const Monomial2 m = f.min_exponents();
  if (!f.coeff(m).is_one()) {
    raise(ErrorCode::NotPointed, "corner coefficient is missing or differs from 1");
  }
  PointedForm p;
  p.a1 = -m.e1;
  p.a2 = -m.e2;
  for (const auto& [e, c] : f.terms()) p.coeffs.emplace(std::make_pair(e.e1 - m.e1, e.e2 - m.e2), c);
  return p;
}

LaurentPoly lp_from_pointed(const PointedForm& p) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [pq, c] : p.coeffs) {
    terms.emplace_back(Monomial2{pq.first - p.a1, pq.second - p.a2}, c);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

bool lp_is_positive(const LaurentPoly& f) {
  bool positive = !f.is_zero();
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_constant()) {
      raise(ErrorCode::SymbolicModeUnsupported, "positivity needs integer coefficients");
    }
    if (sgn(c.constant_term()) < 0) positive = false;
  }
  return positive;
}

}  // namespace gcg
