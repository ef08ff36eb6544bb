#include "gcg/serialize.hpp"

#include <sstream>

#include "gcg/error.hpp"

namespace gcg {

namespace {

Json exponent_array(const Exponents& mono, Family family, int d) {
  if (d < 2) return Json();
  std::vector<std::uint32_t> e(static_cast<std::size_t>(d - 1), 0);
  bool any = false;
  for (const auto& [g, power] : mono) {
    if (g.family != family) continue;
    e[g.index - 1] = power;
    any = true;
  }
  return any ? Json(e) : Json();
}

void read_exponents(const Json& arr, Family family, int d, Exponents& out) {
  if (!arr.is_array()) raise(ErrorCode::ParseError, "exponent list must be an array");
  if (static_cast<int>(arr.size()) != std::max(d - 1, 0)) {
    raise(ErrorCode::ParseError, "exponent list must have length " + std::to_string(std::max(d - 1, 0)));
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number_unsigned()) raise(ErrorCode::ParseError, "exponents must be nonnegative integers");
    const auto power = arr[i].get<std::uint32_t>();
    if (power == 0) continue;
    const int t = static_cast<int>(i) + 1;
    out.emplace_back(family == Family::Rho ? make_rho(t, d) : make_varrho(t, d), power);
  }
}

Exponents merge_exponents(Exponents e) {
  std::sort(e.begin(), e.end());
  Exponents out;
  for (const auto& [g, power] : e) {
    if (!out.empty() && out.back().first == g) {
      out.back().second += power;
    } else {
      out.emplace_back(g, power);
    }
  }
  return out;
}

mpz_class read_integer(const Json& n) {
  if (n.is_number_integer()) return mpz_class(std::to_string(n.get<long long>()));
  if (!n.is_string()) raise(ErrorCode::ParseError, "coefficient \"n\" must be a decimal string");
  mpz_class value;
  if (value.set_str(n.get<std::string>(), 10) != 0) raise(ErrorCode::ParseError, "malformed integer in \"n\"");
  return value;
}

std::string exponent_text(const char* name, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return name;
  return std::string(name) + "^" + std::to_string(e);
}

}  // namespace

Json coeff_to_json(const CoeffPoly& c, int d1, int d2) {
  Json out = Json::array();
  for (const auto& t : c.terms()) {
    Json term = Json::object();
    if (Json r = exponent_array(t.mono, Family::Rho, d1); !r.is_null()) term["rho"] = std::move(r);
    if (Json v = exponent_array(t.mono, Family::Varrho, d2); !v.is_null()) term["vrho"] = std::move(v);
    term["n"] = t.coeff.get_str();
    out.push_back(std::move(term));
  }
  return out;
}

CoeffPoly coeff_from_json(const Json& j, int d1, int d2) {
  if (!j.is_array()) raise(ErrorCode::ParseError, "coefficient must be a list of monomials");
  std::vector<CoeffPoly::Term> terms;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("n")) raise(ErrorCode::ParseError, "coefficient monomial needs \"n\"");
    Exponents mono;
    if (term.contains("rho")) read_exponents(term["rho"], Family::Rho, d1, mono);
    if (term.contains("vrho")) read_exponents(term["vrho"], Family::Varrho, d2, mono);
    terms.push_back({merge_exponents(std::move(mono)), read_integer(term["n"])});
  }
  return CoeffPoly::from_terms(std::move(terms));
}

Json laurent_to_json(const LaurentPoly& f, int d1, int d2) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t = Json::object();
    t["e"] = {m.e1, m.e2};
    t["c"] = coeff_to_json(c, d1, d2);
    terms.push_back(std::move(t));
  }
  Json out = Json::object();
  out["terms"] = std::move(terms);
  return out;
}

LaurentPoly laurent_from_json(const Json& j, int d1, int d2) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    raise(ErrorCode::ParseError, "expected an object with a \"terms\" array");
  }
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("e") || !t.contains("c")) raise(ErrorCode::ParseError, "term needs \"e\" and \"c\"");
    const auto& e = t["e"];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      raise(ErrorCode::ParseError, "\"e\" must be a pair of integers");
    }
    terms.emplace_back(Monomial2{e[0].get<std::int64_t>(), e[1].get<std::int64_t>()}, coeff_from_json(t["c"], d1, d2));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly laurent_parse(std::string_view text, int d1, int d2) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    raise(ErrorCode::ParseError, ex.what());
  }
  return laurent_from_json(j, d1, d2);
}

Json pair_to_json(const GradingPair& pair) {
  Json out = Json::object();
  out["s1"] = pair.s1;
  out["s2"] = pair.s2;
  out["m1"] = pair.m1();
  out["m2"] = pair.m2();
  return out;
}

std::string render_laurent_text(const LaurentPoly& f) {
  if (f.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [m, c] : f.terms()) {
    std::string mono = exponent_text("x1", m.e1);
    const std::string second = exponent_text("x2", m.e2);
    if (!mono.empty() && !second.empty()) mono += ' ';
    mono += second;
    if (mono.empty()) mono = "1";
    os << mono << ": " << to_string(c) << '\n';
  }
  return os.str();
}

std::string render_pair_text(const GradingPair& pair) {
  auto list = [](const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out;
  };
  return "s1=" + list(pair.s1) + " s2=" + list(pair.s2) + " m1=" + std::to_string(pair.m1()) +
         " m2=" + std::to_string(pair.m2());
}

}  // namespace gcg
