#pragma once

// Textual literals shared by the library and the command-line tool:
//   rational      num/den or num              -4/3
//   p-adic approx e:d0,d1,...  or zero        0:1,1,0,1
//   digit stream  e:pre|per    or zero        0:1|1,0
//   Z[1/p]        m*p^k        or 0           3*2^2
//   CF pairs      (e0,a0)(e1,a1)...           (2,1)(1,1)
// Every parser throws Error(ParseError) on malformed text.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schneider/approx.hpp"
#include "schneider/conjugacy.hpp"
#include "schneider/digit_stream.hpp"
#include "schneider/dynamics.hpp"

namespace schneider {

Integer parse_integer(std::string_view text);
std::int64_t parse_int64(std::string_view text);

Rational parse_rational(std::string_view text);

/// Leading zero digits are folded into the valuation; digits must be < p.
PAdicApprox parse_approx(const PrimeContext& ctx, std::string_view text);
std::string format_approx(const PAdicApprox& a);

/// The parsed stream is brought to canonical form.
DigitStream parse_digit_stream(const PrimeContext& ctx, std::string_view text);
std::string format_digit_stream(const DigitStream& s);

/// The base in m*b^k must equal p.
FImage parse_fimage(const PrimeContext& ctx, std::string_view text);
std::string format_fimage(const PrimeContext& ctx, const FImage& y);

std::vector<CFPair> parse_pairs(std::string_view text);
std::string format_pair(const CFPair& pair);
std::string format_pairs(const std::vector<CFPair>& pairs);

/// {"pairs": [[e,a],...], "terminal": "zero" | "minus_p" | {"truncated": "num/den"}}
nlohmann::json expansion_to_json(const CFExpansion& expansion);
/// Throws Error(ParseError) if the document does not match the layout above.
CFExpansion expansion_from_json(const PrimeContext& ctx, const nlohmann::json& doc);

/// {"rational": "num/den"} or {"irrational": true}
nlohmann::json classification_to_json(const PreimageClassification& c);
PreimageClassification classification_from_json(const nlohmann::json& doc);

}  // namespace schneider
