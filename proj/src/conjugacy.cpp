#include "schneider/conjugacy.hpp"

#include "schneider/error.hpp"

namespace schneider {
namespace {

Integer integer_p_power(const PrimeContext& ctx, std::int64_t exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), ctx.p_integer().get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

// Pairs reading off the nonzero base-p digits of r >= 0, with digit i placed
// at absolute position i + shift.
std::vector<CFPair> pairs_from_digits(const PrimeContext& ctx, Integer r, std::int64_t shift) {
  std::vector<CFPair> pairs;
  std::int64_t previous = 0;
  Integer digit;
  for (std::int64_t position = shift; r != 0; ++position) {
    mpz_fdiv_qr(r.get_mpz_t(), digit.get_mpz_t(), r.get_mpz_t(), ctx.p_integer().get_mpz_t());
    if (digit == 0) continue;
    const std::int64_t e = pairs.empty() ? position : position - previous;
    pairs.push_back(CFPair{e, static_cast<Digit>(digit.get_ui())});
    previous = position;
  }
  return pairs;
}

}  // namespace

FImage::FImage(const PrimeContext& ctx, Integer mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  exponent_ += remove_prime_factor(ctx, mantissa_);
}

FImage FImage::from_rational(const PrimeContext& ctx, const Rational& x) {
  if (!has_p_power_denominator(ctx, x)) {
    throw Error(ErrorKind::NotDyadic, x.to_string() + " is not in Z[1/" + std::to_string(ctx.p()) + "]");
  }
  Integer den = x.denominator();
  const std::int64_t den_exponent = remove_prime_factor(ctx, den);
  return FImage(ctx, x.numerator(), -den_exponent);
}

Rational FImage::value(const PrimeContext& ctx) const {
  return Rational(mantissa_) * p_power(ctx, exponent_);
}

OrbitNotTerminated::OrbitNotTerminated(CFExpansion expansion)
    : Error(ErrorKind::OrbitNotTerminated,
            "orbit did not reach 0 or -p within " + std::to_string(expansion.pairs.size()) +
                " steps (residual " + expansion.remainder.to_string() + "); raise the cap"),
      expansion_(std::move(expansion)) {}

FRationalResult f_rational(const PrimeContext& ctx, const Rational& x, std::int64_t cap) {
  CFExpansion expansion = cf_expand(ctx, x, cap);
  if (!expansion.terminated()) throw OrbitNotTerminated(std::move(expansion));
  if (expansion.pairs.empty()) {
    return {FImage::from_rational(ctx, expansion.remainder), std::move(expansion)};
  }
  // Accumulate relative to E_0 so the mantissa stays an integer.
  const std::int64_t base = expansion.pairs.front().e;
  Integer mantissa = 0;
  std::int64_t offset = 0;
  for (std::size_t i = 0; i < expansion.pairs.size(); ++i) {
    if (i > 0) offset += expansion.pairs[i].e;
    mantissa += Integer(static_cast<unsigned long>(expansion.pairs[i].a)) * integer_p_power(ctx, offset);
  }
  if (expansion.terminal == TerminalKind::MinusP) {
    mantissa -= integer_p_power(ctx, offset + 1);
  }
  return {FImage(ctx, std::move(mantissa), base), std::move(expansion)};
}

PAdicApprox f_approx(const PrimeContext& ctx, const PAdicApprox& a, std::int64_t cap) {
  if (a.is_exact_zero() || a.is_precision_zero()) return a;
  const Rational image = f_rational(ctx, approx_truncation_value(ctx, a), cap).image.value(ctx);
  return approx_from_rational(ctx, image, *a.absolute_precision());
}

PreimageData preimage_pairs(const PrimeContext& ctx, const FImage& y) {
  if (y.is_zero()) return {{}, Rational(0)};
  if (y.mantissa() > 0) return {pairs_from_digits(ctx, y.mantissa(), y.exponent()), Rational(0)};

  // m = r - p^K with 0 <= r < p^K and a nonzero digit of r at K - 1.
  const Integer& m = y.mantissa();
  const Integer magnitude = -m;
  std::int64_t top = 0;
  Integer bound = 1;
  while (bound < magnitude) {
    bound *= ctx.p_integer();
    ++top;
  }
  Integer r = m + bound;
  const auto digit_below_top = [&] {
    if (top == 0) return Integer(0);
    Integer q = r / integer_p_power(ctx, top - 1);
    return Integer(q % ctx.p_integer());
  };
  if (digit_below_top() == 0) {
    bound *= ctx.p_integer();
    ++top;
    r = m + bound;
  }
  return {pairs_from_digits(ctx, r, y.exponent()), ctx.minus_p()};
}

Rational f_inverse_dyadic(const PrimeContext& ctx, const FImage& y) {
  const PreimageData data = preimage_pairs(ctx, y);
  Rational x = cf_eval_exact(ctx, data.pairs, data.tail);
  const auto cap = static_cast<std::int64_t>(data.pairs.size()) + 2;
  const FImage check = f_rational(ctx, x, cap).image;
  if (!(check == y)) {
    throw Error(ErrorKind::InvariantViolation,
                "inverse construction failed: f(" + x.to_string() + ") = " +
                    check.value(ctx).to_string() + ", expected " + y.value(ctx).to_string());
  }
  return x;
}

PAdicApprox f_inverse_approx(const PrimeContext& ctx, const PAdicApprox& y) {
  if (y.is_exact_zero() || y.is_precision_zero()) return y;
  const FImage truncated = FImage::from_rational(ctx, approx_truncation_value(ctx, y));
  return approx_from_rational(ctx, f_inverse_dyadic(ctx, truncated), *y.absolute_precision());
}

PreimageClassification classify_preimage(const PrimeContext& ctx, const Rational& y) {
  if (!has_p_power_denominator(ctx, y)) return IrrationalPreimage{};
  return RationalPreimage{f_inverse_dyadic(ctx, FImage::from_rational(ctx, y))};
}

bool check_one_step_identity(const PrimeContext& ctx, std::int64_t e, Digit a,
                             const Rational& x, std::int64_t cap) {
  if (a == 0 || a >= ctx.p()) {
    throw Error(ErrorKind::InvariantViolation, "digit " + std::to_string(a) + " not in {1..p-1}");
  }
  if (!valuation(ctx, x).at_least(1)) {
    throw Error(ErrorKind::InvariantViolation, x.to_string() + " is not in pZ_p");
  }
  const Rational scale = p_power(ctx, e);
  const Rational lhs = f_rational(ctx, scale / (x + digit_value(a)), cap).image.value(ctx);
  const Rational rhs = scale * (f_rational(ctx, x, cap).image.value(ctx) + digit_value(a));
  return lhs == rhs;
}

}  // namespace schneider
