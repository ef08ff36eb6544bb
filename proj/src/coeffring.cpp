#include "gcg/coeffring.hpp"

#include <algorithm>
#include <sstream>

#include "gcg/error.hpp"

namespace gcg {

namespace {

GeneratorId make_generator(Family family, int t, int d, const char* name) {
  if (t < 1 || t > d - 1) {
    raise(ErrorCode::InvalidArgument, std::string(name) + " index " + std::to_string(t) +
                                          " outside [1, " + std::to_string(d - 1) + "]");
  }
  return GeneratorId{family, static_cast<std::uint32_t>(std::min(t, d - t))};
}

void multiply_monomials_into(const Exponents& a, const Exponents& b, Exponents& out) {
  out.clear();
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
}

Exponents multiply_monomials(const Exponents& a, const Exponents& b) {
  Exponents out;
  out.reserve(a.size() + b.size());
  multiply_monomials_into(a, b, out);
  return out;
}

// Returns false when b does not divide a.
bool divide_monomials(const Exponents& a, const Exponents& b, Exponents& out) {
  out.clear();
  auto j = b.begin();
  for (const auto& [g, e] : a) {
    if (j != b.end() && j->first < g) return false;
    if (j != b.end() && j->first == g) {
      if (j->second > e) return false;
      if (j->second < e) out.emplace_back(g, e - j->second);
      ++j;
    } else {
      out.emplace_back(g, e);
    }
  }
  return j == b.end();
}

struct MonomialLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return compare_monomials(a, b) < 0;
  }
};

using TermMap = std::map<Exponents, mpz_class, MonomialLess>;

TermMap to_map(const CoeffPoly& a) {
  TermMap map;
  for (auto& t : a.terms()) map.emplace(std::move(t.mono), std::move(t.coeff));
  return map;
}

}  // namespace

GeneratorId make_rho(int t, int d1) { return make_generator(Family::Rho, t, d1, "rho"); }
GeneratorId make_varrho(int t, int d2) { return make_generator(Family::Varrho, t, d2, "varrho"); }

std::string generator_name(GeneratorId g) {
  return (g.family == Family::Rho ? "rho" : "vrho") + std::to_string(g.index);
}

std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (const auto& p : e) d += p.second;
  return d;
}

std::strong_ordering compare_monomials(const Exponents& a, const Exponents& b) {
  if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first != j->first) {
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  if (i != a.end()) return std::strong_ordering::greater;
  if (j != b.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

CoeffPoly CoeffPoly::generator(GeneratorId g, std::uint32_t power) {
  CoeffPoly p;
  if (power == 0) {
    p.constant_ = 1;
  } else {
    p.terms_.push_back({Exponents{{g, power}}, mpz_class(1)});
  }
  return p;
}

CoeffPoly CoeffPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return compare_monomials(x.mono, y.mono) < 0;
  });
  CoeffPoly p;
  for (auto& t : terms) {
    if (t.mono.empty()) {
      p.constant_ += t.coeff;
      continue;
    }
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::vector<CoeffPoly::Term> CoeffPoly::terms() const {
  std::vector<Term> out;
  out.reserve(term_count());
  if (sgn(constant_) != 0) out.push_back({Exponents{}, constant_});
  out.insert(out.end(), terms_.begin(), terms_.end());
  return out;
}

CoeffPoly::Term CoeffPoly::leading_term() const {
  if (!terms_.empty()) return terms_.back();
  return {Exponents{}, constant_};
}

void CoeffPoly::add_terms(const std::vector<Term>& other, int sign) {
  if (other.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.size());
  auto i = terms_.begin();
  auto j = other.begin();
  while (i != terms_.end() || j != other.end()) {
    std::strong_ordering c = std::strong_ordering::less;
    if (i == terms_.end()) {
      c = std::strong_ordering::greater;
    } else if (j != other.end()) {
      c = compare_monomials(i->mono, j->mono);
    }
    if (c < 0) {
      merged.push_back(std::move(*i++));
    } else if (c > 0) {
      merged.push_back({j->mono, sign > 0 ? j->coeff : mpz_class(-j->coeff)});
      ++j;
    } else {
      mpz_class s = sign > 0 ? mpz_class(i->coeff + j->coeff) : mpz_class(i->coeff - j->coeff);
      if (sgn(s) != 0) merged.push_back({std::move(i->mono), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& other) {
  constant_ += other.constant_;
  add_terms(other.terms_, 1);
  return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& other) {
  constant_ -= other.constant_;
  add_terms(other.terms_, -1);
  return *this;
}

CoeffPoly CoeffPoly::operator-() const {
  CoeffPoly p = *this;
  p.constant_ = -p.constant_;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

CoeffPoly cf_add(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r = a;
  r += b;
  return r;
}

CoeffPoly cf_sub(const CoeffPoly& a, const CoeffPoly& b) {
  CoeffPoly r = a;
  r -= b;
  return r;
}

CoeffPoly cf_mul(const CoeffPoly& a, const CoeffPoly& b) {
  if (a.is_constant() && b.is_constant()) return CoeffPoly(mpz_class(a.constant_ * b.constant_));
  if (a.is_zero() || b.is_zero()) return CoeffPoly();
  if (b.is_constant()) {
    CoeffPoly r = a;
    r.constant_ *= b.constant_;
    for (auto& t : r.terms_) t.coeff *= b.constant_;
    return r;
  }
  if (a.is_constant()) return cf_mul(b, a);
  CoeffAccumulator acc;
  acc.addmul(a, b);
  return acc.take();
}

void cf_addmul(CoeffPoly& acc, const CoeffPoly& a, const CoeffPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) {
    mpz_addmul(acc.constant_.get_mpz_t(), a.constant_.get_mpz_t(), b.constant_.get_mpz_t());
    return;
  }
  acc += cf_mul(a, b);
}

void cf_submul(CoeffPoly& acc, const CoeffPoly& a, const CoeffPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) {
    mpz_submul(acc.constant_.get_mpz_t(), a.constant_.get_mpz_t(), b.constant_.get_mpz_t());
    return;
  }
  acc -= cf_mul(a, b);
}

CoeffPoly cf_pow(const CoeffPoly& a, unsigned n) {
  CoeffPoly result(1L);
  CoeffPoly base = a;
  while (n > 0) {
    if (n & 1U) result = cf_mul(result, base);
    n >>= 1U;
    if (n > 0) base = cf_mul(base, base);
  }
  return result;
}

CoeffPoly cf_exact_div(const CoeffPoly& a, const CoeffPoly& b) {
  if (b.is_zero()) raise(ErrorCode::InvalidArgument, "division by zero coefficient");
  if (b.is_constant()) {
    const mpz_class& d = b.constant_term();
    std::vector<CoeffPoly::Term> out;
    for (auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.get_mpz_t())) {
        raise(ErrorCode::NotDivisible, "coefficient " + t.coeff.get_str() +
                                           " not divisible by " + d.get_str());
      }
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.get_mpz_t());
      out.push_back(std::move(t));
    }
    return CoeffPoly::from_terms(std::move(out));
  }
  const CoeffPoly::Term lead = b.leading_term();
  const auto divisor = b.terms();
  TermMap rem = to_map(a);
  std::vector<CoeffPoly::Term> quotient;
  Exponents mono;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!divide_monomials(top->first, lead.mono, mono) ||
        !mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) {
      raise(ErrorCode::NotDivisible, "coefficient polynomial is not divisible");
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), top->second.get_mpz_t(), lead.coeff.get_mpz_t());
    for (const auto& t : divisor) {
      auto m = multiply_monomials(mono, t.mono);
      auto [it, inserted] = rem.try_emplace(std::move(m));
      mpz_submul(it->second.get_mpz_t(), q.get_mpz_t(), t.coeff.get_mpz_t());
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.push_back({mono, std::move(q)});
  }
  return CoeffPoly::from_terms(std::move(quotient));
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [g, power] : e) {
    const std::size_t v = (static_cast<std::size_t>(g.family) << 56) ^
                          (static_cast<std::size_t>(g.index) << 24) ^ power;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void CoeffAccumulator::add(const CoeffPoly& a) {
  constant_ += a.constant_;
  for (const auto& t : a.terms_) {
    auto [it, inserted] = terms_.try_emplace(t.mono, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
}

void CoeffAccumulator::addmul(const CoeffPoly& a, const CoeffPoly& b) { accumulate(a, b, false); }
void CoeffAccumulator::submul(const CoeffPoly& a, const CoeffPoly& b) { accumulate(a, b, true); }

void CoeffAccumulator::accumulate(const CoeffPoly& a, const CoeffPoly& b, bool negate) {
  auto update = [negate](mpz_class& target, const mpz_class& x, const mpz_class& y) {
    if (negate) {
      mpz_submul(target.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    } else {
      mpz_addmul(target.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
  };
  auto add_scaled = [&](const std::vector<CoeffPoly::Term>& terms, const mpz_class& scale) {
    if (sgn(scale) == 0) return;
    for (const auto& t : terms) {
      auto it = terms_.find(t.mono);
      if (it == terms_.end()) it = terms_.emplace(t.mono, mpz_class()).first;
      update(it->second, t.coeff, scale);
    }
  };
  update(constant_, a.constant_, b.constant_);
  add_scaled(a.terms_, b.constant_);
  add_scaled(b.terms_, a.constant_);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      multiply_monomials_into(x.mono, y.mono, scratch_);
      auto it = terms_.find(scratch_);
      if (it == terms_.end()) it = terms_.emplace(scratch_, mpz_class()).first;
      update(it->second, x.coeff, y.coeff);
    }
  }
}

CoeffPoly CoeffAccumulator::take() {
  CoeffPoly p;
  p.constant_ = std::move(constant_);
  p.terms_.reserve(terms_.size());
  for (auto& [mono, coeff] : terms_) {
    if (sgn(coeff) != 0) p.terms_.push_back({mono, std::move(coeff)});
  }
  std::sort(p.terms_.begin(), p.terms_.end(), [](const CoeffPoly::Term& x, const CoeffPoly::Term& y) {
    return compare_monomials(x.mono, y.mono) < 0;
  });
  constant_ = 0;
  terms_.clear();
  return p;
}

mpz_class cf_eval(const CoeffPoly& a, const std::map<GeneratorId, mpz_class>& assignment) {
  mpz_class total;
  for (const auto& t : a.terms()) {
    mpz_class v = t.coeff;
    for (const auto& [g, e] : t.mono) {
      auto it = assignment.find(g);
      if (it == assignment.end()) {
        raise(ErrorCode::MissingGenerator, "no value for " + generator_name(g));
      }
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), e);
      v *= p;
    }
    total += v;
  }
  return total;
}

std::string to_string(const CoeffPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : a.terms()) {
    mpz_class c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    if (t.mono.empty()) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    bool first_factor = true;
    for (const auto& [g, e] : t.mono) {
      if (!first_factor) out << "*";
      first_factor = false;
      out << generator_name(g);
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

CoefficientMode CoefficientMode::symbolic(int d1, int d2) {
  if (d1 < 0 || d2 < 0) raise(ErrorCode::InvalidArgument, "degrees must be nonnegative");
  CoefficientMode m;
  m.numeric_ = false;
  m.d1_ = d1;
  m.d2_ = d2;
  for (int t = 0; t <= d1; ++t) m.p1_.push_back(m.rho(t));
  for (int t = 0; t <= d2; ++t) m.p2_.push_back(m.varrho(t));
  return m;
}

CoefficientMode CoefficientMode::numeric(std::vector<mpz_class> p1, std::vector<mpz_class> p2) {
  auto check = [](const std::vector<mpz_class>& p, const char* name) {
    if (p.empty()) raise(ErrorCode::InvalidArgument, std::string(name) + " is empty");
    const std::size_t d = p.size() - 1;
    if (p.front() != 1 || p.back() != 1) {
      raise(ErrorCode::InvalidArgument, std::string(name) + " must be monic with constant term 1");
    }
    for (std::size_t t = 0; t <= d; ++t) {
      if (sgn(p[t]) < 0) raise(ErrorCode::InvalidArgument, std::string(name) + " has a negative coefficient");
      if (p[t] != p[d - t]) raise(ErrorCode::InvalidArgument, std::string(name) + " is not palindromic");
    }
  };
  check(p1, "P1");
  check(p2, "P2");
  CoefficientMode m;
  m.numeric_ = true;
  m.d1_ = static_cast<int>(p1.size()) - 1;
  m.d2_ = static_cast<int>(p2.size()) - 1;
  m.n1_ = std::move(p1);
  m.n2_ = std::move(p2);
  for (const auto& c : m.n1_) m.p1_.emplace_back(c);
  for (const auto& c : m.n2_) m.p2_.emplace_back(c);
  return m;
}

CoefficientMode CoefficientMode::all_ones(int d1, int d2) {
  if (d1 < 0 || d2 < 0) raise(ErrorCode::InvalidArgument, "degrees must be nonnegative");
  return numeric(std::vector<mpz_class>(d1 + 1, 1), std::vector<mpz_class>(d2 + 1, 1));
}

CoeffPoly CoefficientMode::rho(int t) const {
  if (t < 0 || t > d1_) raise(ErrorCode::InvalidArgument, "rho index out of range");
  if (t == 0 || t == d1_) return CoeffPoly(1L);
  if (numeric_) return CoeffPoly(n1_[t]);
  return CoeffPoly::generator(make_rho(t, d1_));
}

CoeffPoly CoefficientMode::varrho(int t) const {
  if (t < 0 || t > d2_) raise(ErrorCode::InvalidArgument, "varrho index out of range");
  if (t == 0 || t == d2_) return CoeffPoly(1L);
  if (numeric_) return CoeffPoly(n2_[t]);
  return CoeffPoly::generator(make_varrho(t, d2_));
}

const std::vector<mpz_class>& CoefficientMode::numeric_p1() const {
  if (!numeric_) raise(ErrorCode::SymbolicModeUnsupported, "integer coefficients need numeric mode");
  return n1_;
}

const std::vector<mpz_class>& CoefficientMode::numeric_p2() const {
  if (!numeric_) raise(ErrorCode::SymbolicModeUnsupported, "integer coefficients need numeric mode");
  return n2_;
}

}  // namespace gcg
