#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "schneider/prime_context.hpp"
#include "schneider/rational.hpp"

namespace schneider {

using Digit = std::uint64_t;

inline Rational digit_value(Digit d) { return Rational(Integer(static_cast<unsigned long>(d))); }

/// A p-adic valuation: a finite integer, or infinity (only for zero).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(std::int64_t v) { return Valuation(v); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }
  /// Precondition: is_finite().
  std::int64_t value() const { return *value_; }

  /// True iff this valuation is >= n (infinity dominates everything).
  bool at_least(std::int64_t n) const noexcept { return !value_ || *value_ >= n; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

  std::string to_string() const;

 private:
  Valuation() = default;
  explicit Valuation(std::int64_t v) : value_(v) {}

  std::optional<std::int64_t> value_;
};

/// Strips every factor of p from n (n != 0) and returns how many were removed.
std::int64_t remove_prime_factor(const PrimeContext& ctx, Integer& n);

/// sum digits[i] p^i, by splitting in halves so long digit strings cost
/// O(M(n) log n) rather than O(n^2).
Integer digits_to_integer(const PrimeContext& ctx, std::span<const Digit> digits);

/// p^exponent as an exact rational.
Rational p_power(const PrimeContext& ctx, std::int64_t exponent);

Valuation valuation(const PrimeContext& ctx, const Rational& x);

/// |x|_p = p^(-v(x)); zero maps to zero.
Rational abs_p(const PrimeContext& ctx, const Rational& x);

/// The unit part |x|_p * x, with epsilon(0) = 1.
Rational epsilon(const PrimeContext& ctx, const Rational& x);

/// The constant p-adic digit of x, i.e. the unique a in {0, ..., p-1} with
/// |x - a|_p < 1. Computed as numerator * denominator^-1 mod p.
/// Throws Error(NotIntegral) when v(x) < 0.
Digit floor_p(const PrimeContext& ctx, const Rational& x);

/// True iff the denominator of x is a power of p, i.e. x lies in Z[1/p].
bool has_p_power_denominator(const PrimeContext& ctx, const Rational& x);

}  // namespace schneider
