#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schneider/padic_core.hpp"

namespace schneider {

/// A p-adic number known modulo p^N.
///
/// Represents the residue class { y : v(y - p^e * sum d_i p^i) >= e + k }
/// where e is the valuation, (d_0, ..., d_{k-1}) the known unit digits and
/// N = e + k the absolute precision. Canonical values have d_0 != 0, so e is
/// the true valuation of every member of the class. A value that is only
/// known to be 0 mod p^N has k = 0 and e = N; it is distinct from the exact
/// zero, which carries no precision at all.
class PAdicApprox {
 public:
  static PAdicApprox exact_zero();
  /// The class 0 mod p^precision.
  static PAdicApprox zero_mod(std::int64_t precision);
  /// Builds p^valuation * sum digits[i] p^i known to valuation + digits.size()
  /// places. Leading zero digits are absorbed into the valuation. Throws
  /// Error(InvariantViolation) if a digit is >= p.
  static PAdicApprox from_digits(const PrimeContext& ctx, std::int64_t valuation,
                                 std::vector<Digit> digits);

  bool is_exact_zero() const noexcept { return exact_zero_; }
  /// Known only to be divisible by p^N.
  bool is_precision_zero() const noexcept { return !exact_zero_ && digits_.empty(); }

  /// For a precision zero this is N, a lower bound. Zero for the exact zero.
  std::int64_t valuation() const noexcept { return valuation_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  std::size_t digit_count() const noexcept { return digits_.size(); }
  /// e + k; empty for the exact zero, whose precision is unbounded.
  std::optional<std::int64_t> absolute_precision() const;

  friend bool operator==(const PAdicApprox&, const PAdicApprox&) = default;

 private:
  PAdicApprox() = default;

  std::int64_t valuation_ = 0;
  std::vector<Digit> digits_;
  bool exact_zero_ = false;
};

/// Truncation of x to absolute precision N. Zero maps to the exact zero.
/// Throws Error(PrecisionTooLow) if x != 0 and N <= v(x).
PAdicApprox approx_from_rational(const PrimeContext& ctx, const Rational& x,
                                 std::int64_t precision);

/// The residue class of x modulo p^N. Unlike approx_from_rational this never
/// throws on low precision: when v(x) >= N (including x = 0) the result is
/// zero_mod(N).
PAdicApprox approx_residue(const PrimeContext& ctx, const Rational& x, std::int64_t precision);

/// p^e * sum d_i p^i, the canonical representative in Z[1/p].
Rational approx_truncation_value(const PrimeContext& ctx, const PAdicApprox& a);

/// True iff x lies in the residue class a.
bool approx_contains(const PrimeContext& ctx, const PAdicApprox& a, const Rational& x);

/// Sum at absolute precision min(N_a, N_b). Total cancellation yields a
/// precision zero.
PAdicApprox approx_add(const PrimeContext& ctx, const PAdicApprox& a, const PAdicApprox& b);

/// Product; valuations add, relative precision is min(k_a, k_b).
PAdicApprox approx_mul(const PrimeContext& ctx, const PAdicApprox& a, const PAdicApprox& b);

/// Inverse; valuation negated, relative precision k_a kept.
/// Throws Error(DivisionByZero) for the exact zero and
/// Error(PrecisionExhausted) when no digit of a is known.
PAdicApprox approx_inv(const PrimeContext& ctx, const PAdicApprox& a);

}  // namespace schneider
