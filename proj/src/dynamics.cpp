#include "schneider/dynamics.hpp"

#include <algorithm>
#include <numeric>

#include "schneider/error.hpp"

namespace schneider {
namespace {

void check_tail(const PrimeContext& ctx, const Rational& tail) {
  if (!valuation(ctx, tail).at_least(1)) {
    throw Error(ErrorKind::InvariantViolation,
                "continued fraction tail " + tail.to_string() + " is not in pZ_p");
  }
}

void check_pair(const PrimeContext& ctx, const CFPair& pair, bool first) {
  if (pair.a == 0 || pair.a >= ctx.p()) {
    throw Error(ErrorKind::InvariantViolation,
                "partial denominator " + std::to_string(pair.a) + " not in {1..p-1}");
  }
  if (!first && pair.e < 1) {
    throw Error(ErrorKind::InvariantViolation,
                "exponent " + std::to_string(pair.e) + " after the first pair must be >= 1");
  }
}

template <typename Step>
OrbitRecord trace_orbit(const Rational& x, std::int64_t steps, Step&& step) {
  OrbitRecord orbit;
  orbit.iterates.push_back(x);
  for (std::int64_t i = 0; i < steps; ++i) {
    const Rational current = orbit.iterates.back();
    auto [pair, next] = step(current);
    if (next == current) break;
    if (pair) orbit.pairs.push_back(*pair);
    orbit.iterates.push_back(std::move(next));
  }
  const Rational& last = orbit.iterates.back();
  orbit.terminated = step(last).second == last;
  return orbit;
}

}  // namespace

std::int64_t CFExpansion::exponent_sum() const {
  return std::accumulate(pairs.begin(), pairs.end(), std::int64_t{0},
                         [](std::int64_t acc, const CFPair& pair) { return acc + pair.e; });
}

std::variant<std::monostate, TauStep> tau_step(const PrimeContext& ctx, const Rational& x) {
  if (x.is_zero()) return std::monostate{};
  const Rational inv_unit = inverse(epsilon(ctx, x));
  const Digit a = floor_p(ctx, inv_unit);
  return TauStep{CFPair{valuation(ctx, x).value(), a},
                 inv_unit - digit_value(a)};
}

Rational tau(const PrimeContext& ctx, const Rational& x) {
  auto step = tau_step(ctx, x);
  if (auto* s = std::get_if<TauStep>(&step)) return s->next;
  return Rational(0);
}

Rational sigma_step(const PrimeContext& ctx, const Rational& x) {
  const Rational unit = epsilon(ctx, x);
  return unit - digit_value(floor_p(ctx, unit));
}

DigitStream sigma_shift_stream([[maybe_unused]] const PrimeContext& ctx, const DigitStream& s) {
  if (s.is_zero) return DigitStream::zero();
  DigitStream out;
  out.preperiod = s.preperiod;
  out.period = s.period;
  // Drop d_0 of the unit part; the remainder starts at p^1.
  if (!out.preperiod.empty()) {
    out.preperiod.erase(out.preperiod.begin());
  } else {
    std::rotate(out.period.begin(), out.period.begin() + 1, out.period.end());
  }
  out.valuation = 1;
  while (true) {
    if (!out.preperiod.empty()) {
      if (out.preperiod.front() != 0) break;
      out.preperiod.erase(out.preperiod.begin());
    } else {
      if (std::all_of(out.period.begin(), out.period.end(), [](Digit d) { return d == 0; })) {
        return DigitStream::zero();
      }
      if (out.period.front() != 0) break;
      std::rotate(out.period.begin(), out.period.begin() + 1, out.period.end());
    }
    ++out.valuation;
  }
  return out;
}

CFExpansion cf_expand(const PrimeContext& ctx, const Rational& x, std::int64_t cap) {
  if (cap < 1) throw Error(ErrorKind::InvariantViolation, "iteration cap must be >= 1");
  const Rational minus_p = ctx.minus_p();
  CFExpansion out;
  Rational current = x;
  for (std::int64_t steps = 0;; ++steps) {
    if (current.is_zero()) {
      out.terminal = TerminalKind::Zero;
      break;
    }
    if (current == minus_p) {
      out.terminal = TerminalKind::MinusP;
      break;
    }
    if (steps == cap) {
      out.terminal = TerminalKind::Truncated;
      break;
    }
    auto step = std::get<TauStep>(tau_step(ctx, current));
    out.pairs.push_back(step.pair);
    current = std::move(step.next);
  }
  out.remainder = std::move(current);
  return out;
}

void validate_pairs(const PrimeContext& ctx, const std::vector<CFPair>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) check_pair(ctx, pairs[i], i == 0);
}

Rational cf_eval_exact(const PrimeContext& ctx, const std::vector<CFPair>& pairs,
                       const Rational& tail) {
  validate_pairs(ctx, pairs);
  check_tail(ctx, tail);
  // Backward recurrence; a + value is a unit at every level, never zero.
  Rational value = tail;
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    value = p_power(ctx, it->e) / (digit_value(it->a) + value);
  }
  return value;
}

Rational convergent(const PrimeContext& ctx, const std::vector<CFPair>& pairs) {
  if (pairs.empty()) throw Error(ErrorKind::EmptyInput, "convergent of an empty prefix");
  return cf_eval_exact(ctx, pairs, Rational(0));
}

PAdicApprox cf_eval_limit(const PrimeContext& ctx, const PairSource& source,
                          std::int64_t precision) {
  std::vector<CFPair> pairs;
  std::int64_t exponent_sum = 0;
  while (true) {
    auto item = source();
    if (auto* end = std::get_if<SourceEnd>(&item)) {
      if (*end == SourceEnd::Exhausted) {
        throw Error(ErrorKind::SourceExhausted,
                    "pair source ended after " + std::to_string(pairs.size()) +
                        " pairs, before precision " + std::to_string(precision) + " was certified");
      }
      if (pairs.empty()) return PAdicApprox::exact_zero();
      return approx_residue(ctx, cf_eval_exact(ctx, pairs, Rational(0)), precision);
    }
    const CFPair& pair = std::get<CFPair>(item);
    check_pair(ctx, pair, pairs.empty());
    pairs.push_back(pair);
    exponent_sum += pair.e;
    // v(limit - P_n) = E_n + v(x_{n+1}) >= E_n + 1.
    if (exponent_sum + 1 >= precision) {
      return approx_residue(ctx, cf_eval_exact(ctx, pairs, Rational(0)), precision);
    }
  }
}

OrbitRecord tau_orbit(const PrimeContext& ctx, const Rational& x, std::int64_t steps) {
  return trace_orbit(x, steps, [&](const Rational& current) {
    auto step = tau_step(ctx, current);
    if (auto* s = std::get_if<TauStep>(&step)) {
      return std::pair{std::optional<CFPair>(s->pair), s->next};
    }
    return std::pair{std::optional<CFPair>(), Rational(0)};
  });
}

OrbitRecord sigma_orbit(const PrimeContext& ctx, const Rational& x, std::int64_t steps) {
  return trace_orbit(x, steps, [&](const Rational& current) {
    std::optional<CFPair> pair;
    if (!current.is_zero()) {
      pair = CFPair{valuation(ctx, current).value(), floor_p(ctx, epsilon(ctx, current))};
    }
    return std::pair{pair, sigma_step(ctx, current)};
  });
}

std::string to_string(TerminalKind kind) {
  switch (kind) {
    case TerminalKind::Zero: return "zero";
    case TerminalKind::MinusP: return "minus_p";
    case TerminalKind::Truncated: return "truncated";
  }
  return "unknown";
}

}  // namespace schneider
