#include "schneider/approx.hpp"

#include <algorithm>
#include <string>

#include "schneider/error.hpp"

namespace schneider {
namespace {

// Digits of the p-adic unit n/den modulo p^count.
std::vector<Digit> unit_digits(const PrimeContext& ctx, const Rational& unit,
                               std::int64_t count) {
  const Integer& p = ctx.p_integer();
  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(count));
  Integer residue;
  mpz_invert(residue.get_mpz_t(), unit.denominator().get_mpz_t(), modulus.get_mpz_t());
  residue *= unit.numerator();
  mpz_fdiv_r(residue.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());

  std::vector<Digit> digits;
  digits.reserve(static_cast<std::size_t>(count));
  Integer digit;
  for (std::int64_t i = 0; i < count; ++i) {
    mpz_fdiv_qr(residue.get_mpz_t(), digit.get_mpz_t(), residue.get_mpz_t(), p.get_mpz_t());
    digits.push_back(static_cast<Digit>(digit.get_ui()));
  }
  return digits;
}

}  // namespace

PAdicApprox PAdicApprox::exact_zero() {
  PAdicApprox a;
  a.exact_zero_ = true;
  return a;
}

PAdicApprox PAdicApprox::zero_mod(std::int64_t precision) {
  PAdicApprox a;
  a.valuation_ = precision;
  return a;
}

PAdicApprox PAdicApprox::from_digits(const PrimeContext& ctx, std::int64_t valuation,
                                     std::vector<Digit> digits) {
  for (Digit d : digits) {
    if (d >= ctx.p()) {
      throw Error(ErrorKind::InvariantViolation,
                  "digit " + std::to_string(d) + " out of range for p = " + std::to_string(ctx.p()));
    }
  }
  const auto first_nonzero = std::find_if(digits.begin(), digits.end(), [](Digit d) { return d != 0; });
  const auto leading_zeros = first_nonzero - digits.begin();
  PAdicApprox a;
  a.valuation_ = valuation + leading_zeros;
  digits.erase(digits.begin(), first_nonzero);
  a.digits_ = std::move(digits);
  return a;
}

std::optional<std::int64_t> PAdicApprox::absolute_precision() const {
  if (exact_zero_) return std::nullopt;
  return valuation_ + static_cast<std::int64_t>(digits_.size());
}

PAdicApprox approx_residue(const PrimeContext& ctx, const Rational& x, std::int64_t precision) {
  const Valuation v = valuation(ctx, x);
  if (v.at_least(precision)) return PAdicApprox::zero_mod(precision);
  const std::int64_t e = v.value();
  return PAdicApprox::from_digits(ctx, e, unit_digits(ctx, x * p_power(ctx, -e), precision - e));
}

PAdicApprox approx_from_rational(const PrimeContext& ctx, const Rational& x,
                                 std::int64_t precision) {
  if (x.is_zero()) return PAdicApprox::exact_zero();
  if (valuation(ctx, x).value() >= precision) {
    throw Error(ErrorKind::PrecisionTooLow,
                "precision " + std::to_string(precision) + " does not exceed v(" + x.to_string() +
                    ") = " + valuation(ctx, x).to_string());
  }
  return approx_residue(ctx, x, precision);
}

Rational approx_truncation_value(const PrimeContext& ctx, const PAdicApprox& a) {
  if (a.digit_count() == 0) return Rational(0);
  return Rational(digits_to_integer(ctx, a.digits())) * p_power(ctx, a.valuation());
}

bool approx_contains(const PrimeContext& ctx, const PAdicApprox& a, const Rational& x) {
  if (a.is_exact_zero()) return x.is_zero();
  return valuation(ctx, x - approx_truncation_value(ctx, a)).at_least(*a.absolute_precision());
}

PAdicApprox approx_add(const PrimeContext& ctx, const PAdicApprox& a, const PAdicApprox& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const std::int64_t precision = std::min(*a.absolute_precision(), *b.absolute_precision());
  return approx_residue(
      ctx, approx_truncation_value(ctx, a) + approx_truncation_value(ctx, b), precision);
}

PAdicApprox approx_mul(const PrimeContext& ctx, const PAdicApprox& a, const PAdicApprox& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return PAdicApprox::exact_zero();
  const std::int64_t e = a.valuation() + b.valuation();
  const auto k = static_cast<std::int64_t>(std::min(a.digit_count(), b.digit_count()));
  if (k == 0) return PAdicApprox::zero_mod(e);
  return approx_residue(
      ctx, approx_truncation_value(ctx, a) * approx_truncation_value(ctx, b), e + k);
}

PAdicApprox approx_inv(const PrimeContext& ctx, const PAdicApprox& a) {
  if (a.is_exact_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of exact zero");
  if (a.digit_count() == 0) {
    throw Error(ErrorKind::PrecisionExhausted,
                "inverse of a value known only to be 0 mod p^" + std::to_string(a.valuation()));
  }
  const auto k = static_cast<std::int64_t>(a.digit_count());
  return approx_residue(ctx, inverse(approx_truncation_value(ctx, a)), -a.valuation() + k);
}

}  // namespace schneider
