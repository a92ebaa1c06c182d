#pragma once

#include <cstdint>
#include <vector>

#include "schneider/padic_core.hpp"

namespace schneider {

/// Exact, eventually periodic p-adic expansion of a rational:
///   value = p^valuation * sum_n d_n p^n,
/// with (d_n) = preperiod followed by the period repeated forever.
///
/// Canonical form: the first digit is nonzero, the period is primitive and
/// the preperiod is as short as possible. Zero has its own flag.
struct DigitStream {
  std::int64_t valuation = 0;
  std::vector<Digit> preperiod;
  std::vector<Digit> period;
  bool is_zero = false;

  static DigitStream zero() {
    DigitStream s;
    s.is_zero = true;
    return s;
  }

  /// The n-th digit of the unit part (n >= 0).
  Digit digit(std::size_t n) const;

  friend bool operator==(const DigitStream&, const DigitStream&) = default;
};

/// Long division over Z_p; the period is found when the running numerator
/// repeats.
DigitStream rational_to_digit_stream(const PrimeContext& ctx, const Rational& x);

/// Geometric-series summation of the periodic tail.
Rational digit_stream_to_rational(const PrimeContext& ctx, const DigitStream& s);

bool is_canonical(const PrimeContext& ctx, const DigitStream& s);

/// Brings any well-formed stream (digits < p, nonempty period) to canonical
/// form. Throws Error(InvariantViolation) on malformed input.
DigitStream canonicalize(const PrimeContext& ctx, const DigitStream& s);

}  // namespace schneider
