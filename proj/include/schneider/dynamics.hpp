#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "schneider/approx.hpp"
#include "schneider/digit_stream.hpp"
#include "schneider/padic_core.hpp"

namespace schneider {

inline constexpr std::int64_t kDefaultIterationCap = 100000;

/// One partial quotient p^e / (a + ...) of a Schneider continued fraction.
/// a is a nonzero digit; every pair after the first has e >= 1.
struct CFPair {
  std::int64_t e = 0;
  Digit a = 1;

  friend bool operator==(const CFPair&, const CFPair&) = default;
};

enum class TerminalKind { Zero, MinusP, Truncated };

struct CFExpansion {
  std::vector<CFPair> pairs;
  TerminalKind terminal = TerminalKind::Zero;
  /// The last iterate reached: 0, -p, or the residual after the cap.
  Rational remainder;

  bool terminated() const noexcept { return terminal != TerminalKind::Truncated; }
  /// Sum of all exponents e_0 + ... + e_m (0 for no pairs).
  std::int64_t exponent_sum() const;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

struct OrbitRecord {
  /// x_0 = x, x_1 = T(x), ...
  std::vector<Rational> iterates;
  /// The (e, a) data read off each iterate that was stepped from.
  std::vector<CFPair> pairs;
  /// The last iterate is a fixed point of the map.
  bool terminated = false;
};

struct TauStep {
  CFPair pair;
  Rational next;
};

/// Schneider's map: x -> 1/eps(x) - floor_p(1/eps(x)), together with the
/// pair (v(x), floor_p(1/eps(x))). Returns std::monostate for x = 0, which is
/// fixed.
std::variant<std::monostate, TauStep> tau_step(const PrimeContext& ctx, const Rational& x);

/// The full value tau(x), with tau(0) = 0.
Rational tau(const PrimeContext& ctx, const Rational& x);

/// The shift: x -> eps(x) - floor_p(eps(x)).
Rational sigma_step(const PrimeContext& ctx, const Rational& x);

/// sigma on expansion data: drops the leading digit and renormalizes.
DigitStream sigma_shift_stream(const PrimeContext& ctx, const DigitStream& s);

/// Iterates tau until the iterate is exactly 0 or -p, or until cap steps have
/// been taken (terminal Truncated, remainder holds the residual iterate).
CFExpansion cf_expand(const PrimeContext& ctx, const Rational& x,
                      std::int64_t cap = kDefaultIterationCap);

/// Throws Error(InvariantViolation) unless a in {1..p-1} for every pair and
/// e >= 1 for every pair after the first.
void validate_pairs(const PrimeContext& ctx, const std::vector<CFPair>& pairs);

/// p^e0/(a0 + p^e1/(a1 + ... p^en/(an + tail))) evaluated right to left.
/// Requires tail = 0 or v(tail) >= 1. Empty pairs return tail.
Rational cf_eval_exact(const PrimeContext& ctx, const std::vector<CFPair>& pairs,
                       const Rational& tail);

/// The convergent P_n over the given prefix (tail 0).
/// Throws Error(EmptyInput) on an empty prefix.
Rational convergent(const PrimeContext& ctx, const std::vector<CFPair>& pairs);

/// How a pair source reports that it has no more pairs.
enum class SourceEnd {
  /// The continued fraction is finite and ends here (tail 0).
  Terminated,
  /// Nothing more is known about the continued fraction.
  Exhausted,
};

using PairSource = std::function<std::variant<CFPair, SourceEnd>()>;

/// Limit of an infinite continued fraction modulo p^N. Pairs are consumed
/// until e_0 + ... + e_n + 1 >= N, which certifies v(limit - P_n) >= N.
/// Throws Error(SourceExhausted) if the source runs dry first.
PAdicApprox cf_eval_limit(const PrimeContext& ctx, const PairSource& source,
                          std::int64_t precision);

/// Up to `steps` iterates of tau after x, stopping early at a fixed point.
OrbitRecord tau_orbit(const PrimeContext& ctx, const Rational& x, std::int64_t steps);

/// Up to `steps` iterates of sigma after x, stopping early at a fixed point.
/// The pairs are (v(x_n), floor_p(eps(x_n))), the digit data of x.
OrbitRecord sigma_orbit(const PrimeContext& ctx, const Rational& x, std::int64_t steps);

std::string to_string(TerminalKind kind);

}  // namespace schneider
