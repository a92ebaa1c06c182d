#include "schneider/padic_core.hpp"

#include "schneider/error.hpp"

namespace schneider {

std::string Valuation::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

std::int64_t remove_prime_factor(const PrimeContext& ctx, Integer& n) {
  // mpz_remove divides out every factor in one call and returns the count.
  return static_cast<std::int64_t>(
      mpz_remove(n.get_mpz_t(), n.get_mpz_t(), ctx.p_integer().get_mpz_t()));
}

Integer digits_to_integer(const PrimeContext& ctx, std::span<const Digit> digits) {
  constexpr std::size_t kHornerCutoff = 64;
  if (digits.size() <= kHornerCutoff) {
    const unsigned long p = ctx.p();
    const unsigned long limit = ~0UL / p;
    Integer value = 0;
    auto it = digits.rbegin();
    while (it != digits.rend()) {
      unsigned long word = 0;
      unsigned long scale = 1;
      for (; it != digits.rend() && scale <= limit; ++it) {
        word = word * p + *it;
        scale *= p;
      }
      mpz_mul_ui(value.get_mpz_t(), value.get_mpz_t(), scale);
      mpz_add_ui(value.get_mpz_t(), value.get_mpz_t(), word);
    }
    return value;
  }
  const std::size_t half = digits.size() / 2;
  Integer high = digits_to_integer(ctx, digits.subspan(half));
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), ctx.p_integer().get_mpz_t(), half);
  return digits_to_integer(ctx, digits.first(half)) + high * scale;
}

Rational p_power(const PrimeContext& ctx, std::int64_t exponent) {
  return power(ctx.p_integer(), exponent);
}

Valuation valuation(const PrimeContext& ctx, const Rational& x) {
  if (x.is_zero()) return Valuation::infinity();
  Integer num = x.numerator();
  Integer den = x.denominator();
  // At most one of these is nonzero since the fraction is reduced.
  return Valuation::finite(remove_prime_factor(ctx, num) - remove_prime_factor(ctx, den));
}

Rational abs_p(const PrimeContext& ctx, const Rational& x) {
  if (x.is_zero()) return Rational(0);
  return p_power(ctx, -valuation(ctx, x).value());
}

Rational epsilon(const PrimeContext& ctx, const Rational& x) {
  if (x.is_zero()) return Rational(1);
  return abs_p(ctx, x) * x;
}

Digit floor_p(const PrimeContext& ctx, const Rational& x) {
  const Integer& p = ctx.p_integer();
  Integer den_mod = x.denominator() % p;
  if (den_mod == 0) {
    throw Error(ErrorKind::NotIntegral,
                "floor_p needs v(x) >= 0, got " + x.to_string());
  }
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t());
  Integer digit;
  mpz_mul(digit.get_mpz_t(), x.numerator().get_mpz_t(), inv.get_mpz_t());
  mpz_fdiv_r(digit.get_mpz_t(), digit.get_mpz_t(), p.get_mpz_t());
  return static_cast<Digit>(digit.get_ui());
}

bool has_p_power_denominator(const PrimeContext& ctx, const Rational& x) {
  Integer den = x.denominator();
  remove_prime_factor(ctx, den);
  return den == 1;
}

}  // namespace schneider
