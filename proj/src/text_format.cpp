#include "schneider/text_format.hpp"

#include <cctype>
#include <charconv>

#include "schneider/error.hpp"

namespace schneider {
namespace {

[[noreturn]] void parse_fail(std::string_view what, std::string_view text) {
  throw Error(ErrorKind::ParseError, "invalid " + std::string(what) + ": '" + std::string(text) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

Digit parse_digit(std::string_view text) {
  text = trim(text);
  Digit d = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, d);
  if (text.empty() || ec != std::errc() || ptr != end) parse_fail("digit", text);
  return d;
}

// Empty text is an empty list.
std::vector<Digit> parse_digit_list(std::string_view text) {
  std::vector<Digit> digits;
  if (trim(text).empty()) return digits;
  for (auto part : split(text, ',')) digits.push_back(parse_digit(part));
  return digits;
}

std::string join_digits(const std::vector<Digit>& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) parse_fail("integer", text);
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) parse_fail("integer", text);
  }
  Integer value(std::string(body), 10);
  return text.front() == '-' ? Integer(-value) : value;
}

std::int64_t parse_int64(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) parse_fail("integer", text);
  return value;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) parse_fail("rational (zero denominator)", text);
  return Rational(parse_integer(text.substr(0, slash)), den);
}

PAdicApprox parse_approx(const PrimeContext& ctx, std::string_view text) {
  text = trim(text);
  if (text == "zero") return PAdicApprox::exact_zero();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) parse_fail("p-adic approximation", text);
  const std::int64_t e = parse_int64(text.substr(0, colon));
  try {
    return PAdicApprox::from_digits(ctx, e, parse_digit_list(text.substr(colon + 1)));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, err.what());
  }
}

std::string format_approx(const PAdicApprox& a) {
  if (a.is_exact_zero()) return "zero";
  return std::to_string(a.valuation()) + ":" + join_digits(a.digits());
}

DigitStream parse_digit_stream(const PrimeContext& ctx, std::string_view text) {
  text = trim(text);
  if (text == "zero") return DigitStream::zero();
  const auto colon = text.find(':');
  const auto bar = text.find('|');
  if (colon == std::string_view::npos || bar == std::string_view::npos || bar < colon) {
    parse_fail("digit stream", text);
  }
  DigitStream s;
  s.valuation = parse_int64(text.substr(0, colon));
  s.preperiod = parse_digit_list(text.substr(colon + 1, bar - colon - 1));
  s.period = parse_digit_list(text.substr(bar + 1));
  try {
    return canonicalize(ctx, s);
  } catch (const Error& err) {
    throw Error(ErrorKind::ParseError, std::string(err.what()) + ": '" + std::string(text) + "'");
  }
}

std::string format_digit_stream(const DigitStream& s) {
  if (s.is_zero) return "zero";
  return std::to_string(s.valuation) + ":" + join_digits(s.preperiod) + "|" + join_digits(s.period);
}

FImage parse_fimage(const PrimeContext& ctx, std::string_view text) {
  text = trim(text);
  const auto star = text.find('*');
  if (star == std::string_view::npos) {
    const Integer m = parse_integer(text);
    return FImage(ctx, m, 0);
  }
  const auto caret = text.find('^', star);
  if (caret == std::string_view::npos) parse_fail("Z[1/p] literal", text);
  const Integer base = parse_integer(text.substr(star + 1, caret - star - 1));
  if (base != ctx.p_integer()) {
    throw Error(ErrorKind::ParseError, "base of '" + std::string(text) + "' is not p = " +
                                           std::to_string(ctx.p()));
  }
  return FImage(ctx, parse_integer(text.substr(0, star)), parse_int64(text.substr(caret + 1)));
}

std::string format_fimage(const PrimeContext& ctx, const FImage& y) {
  if (y.is_zero()) return "0";
  return y.mantissa().get_str() + "*" + std::to_string(ctx.p()) + "^" + std::to_string(y.exponent());
}

std::vector<CFPair> parse_pairs(std::string_view text) {
  std::vector<CFPair> pairs;
  std::string_view rest = trim(text);
  while (!rest.empty()) {
    if (rest.front() != '(') parse_fail("continued fraction", text);
    const auto close = rest.find(')');
    if (close == std::string_view::npos) parse_fail("continued fraction", text);
    const auto fields = split(rest.substr(1, close - 1), ',');
    if (fields.size() != 2) parse_fail("continued fraction pair", rest.substr(0, close + 1));
    pairs.push_back(CFPair{parse_int64(fields[0]), parse_digit(fields[1])});
    rest = trim(rest.substr(close + 1));
  }
  return pairs;
}

std::string format_pair(const CFPair& pair) {
  return "(" + std::to_string(pair.e) + "," + std::to_string(pair.a) + ")";
}

std::string format_pairs(const std::vector<CFPair>& pairs) {
  std::string out;
  for (const auto& pair : pairs) out += format_pair(pair);
  return out;
}

nlohmann::json expansion_to_json(const CFExpansion& expansion) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& pair : expansion.pairs) pairs.push_back({pair.e, pair.a});
  nlohmann::json terminal;
  if (expansion.terminal == TerminalKind::Truncated) {
    terminal = {{"truncated", expansion.remainder.to_string()}};
  } else {
    terminal = to_string(expansion.terminal);
  }
  return {{"pairs", pairs}, {"terminal", terminal}};
}

CFExpansion expansion_from_json(const PrimeContext& ctx, const nlohmann::json& doc) {
  try {
    CFExpansion out;
    for (const auto& pair : doc.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2) parse_fail("pair", pair.dump());
      out.pairs.push_back(CFPair{pair[0].get<std::int64_t>(), pair[1].get<Digit>()});
    }
    const auto& terminal = doc.at("terminal");
    if (terminal == "zero") {
      out.terminal = TerminalKind::Zero;
      out.remainder = Rational(0);
    } else if (terminal == "minus_p") {
      out.terminal = TerminalKind::MinusP;
      out.remainder = ctx.minus_p();
    } else {
      out.terminal = TerminalKind::Truncated;
      out.remainder = parse_rational(terminal.at("truncated").get<std::string>());
    }
    return out;
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorKind::ParseError, std::string("expansion document: ") + err.what());
  }
}

nlohmann::json classification_to_json(const PreimageClassification& c) {
  if (const auto* r = std::get_if<RationalPreimage>(&c)) {
    return {{"rational", r->witness.to_string()}};
  }
  return {{"irrational", true}};
}

PreimageClassification classification_from_json(const nlohmann::json& doc) {
  try {
    if (doc.contains("rational")) {
      return RationalPreimage{parse_rational(doc.at("rational").get<std::string>())};
    }
    if (doc.at("irrational").get<bool>()) return IrrationalPreimage{};
  } catch (const nlohmann::json::exception& err) {
    throw Error(ErrorKind::ParseError, std::string("classification document: ") + err.what());
  }
  throw Error(ErrorKind::ParseError, "classification document: " + doc.dump());
}

}  // namespace schneider
