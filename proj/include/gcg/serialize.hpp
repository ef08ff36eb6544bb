#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "gcg/coeffring.hpp"
#include "gcg/compat.hpp"
#include "gcg/laurent.hpp"

namespace gcg {

using Json = nlohmann::ordered_json;

// A CoeffPoly is a list of {"rho":[...], "vrho":[...], "n":"<integer>"}
// monomials; exponent arrays have length d - 1 and are omitted when zero.
Json coeff_to_json(const CoeffPoly& c, int d1, int d2);
CoeffPoly coeff_from_json(const Json& j, int d1, int d2);

Json laurent_to_json(const LaurentPoly& f, int d1, int d2);
LaurentPoly laurent_from_json(const Json& j, int d1, int d2);
// Parses text as JSON and throws ParseError on malformed input.
LaurentPoly laurent_parse(std::string_view text, int d1, int d2);

Json pair_to_json(const GradingPair& pair);

// One term per line: "x1^e1 x2^e2: <coefficient>".
std::string render_laurent_text(const LaurentPoly& f);
std::string render_pair_text(const GradingPair& pair);

}  // namespace gcg
