#include "schneider/digit_stream.hpp"

#include <algorithm>
#include <optional>

#include "schneider/error.hpp"

namespace schneider {
namespace {

bool is_primitive(const std::vector<Digit>& period) {
  const std::size_t q = period.size();
  for (std::size_t d = 1; d < q; ++d) {
    if (q % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < q && repeats; ++i) repeats = period[i] == period[i - d];
    if (repeats) return false;
  }
  return true;
}

// The unit part is state/den with p not dividing den. Each step emits the
// digit state * den^-1 mod p and replaces state by (state - digit * den) / p.
// The tail state/den has a purely periodic expansion iff -den <= state <= 0,
// and that interval is closed under the step, so the preperiod ends at the
// first state inside it and the period closes when that state recurs.
template <typename Int, typename Step>
void split_expansion(Int state, const Int& den, Step&& step, DigitStream& s) {
  const Int low = -den;
  while (state > 0 || state < low) s.preperiod.push_back(step(state));
  const Int start = state;
  do {
    s.period.push_back(step(state));
  } while (state != start);
}

// Division-free arithmetic by a fixed small prime: residues through a
// precomputed 128-bit reciprocal, exact quotients through the inverse of p
// modulo 2^64.
class SmallPrime {
 public:
  SmallPrime(std::uint64_t p, std::int64_t den) : p_(p), reciprocal_(~u128{0} / p + 1) {
    std::uint64_t inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    p_inverse_ = inv;
    Integer den_inv;
    mpz_invert(den_inv.get_mpz_t(), Integer(static_cast<long>(mod(den))).get_mpz_t(),
               Integer(static_cast<unsigned long>(p)).get_mpz_t());
    den_inv_ = den_inv.get_ui();
    den_ = den;
  }

  std::uint64_t mod(std::int64_t x) const {
    const std::uint64_t r = reduce(static_cast<std::uint64_t>(x < 0 ? -x : x));
    return x < 0 && r != 0 ? p_ - r : r;
  }

  // Emits the next digit of state/den and advances state.
  Digit step(std::int64_t& state) const {
    const std::uint64_t digit = reduce(mod(state) * den_inv_);
    const std::int64_t rest = state - static_cast<std::int64_t>(digit) * den_;
    state = p_ == 2 ? rest >> 1 : static_cast<std::int64_t>(static_cast<std::uint64_t>(rest) * p_inverse_);
    return digit;
  }

 private:
  __extension__ typedef unsigned __int128 u128;

  std::uint64_t reduce(std::uint64_t a) const {
    const u128 low = reciprocal_ * a;
    const u128 high_part = (low >> 64) * p_;
    const u128 low_part = (low & ~std::uint64_t{0}) * p_;
    return static_cast<std::uint64_t>((high_part + (low_part >> 64)) >> 64);
  }

  std::uint64_t p_;
  u128 reciprocal_;
  std::uint64_t p_inverse_ = 1;
  std::uint64_t den_inv_ = 0;
  std::int64_t den_ = 1;
};

void expand_small(std::int64_t num, std::int64_t den, std::uint64_t p, DigitStream& s) {
  const SmallPrime prime(p, den);
  split_expansion(num, den, [&](std::int64_t& state) { return prime.step(state); }, s);
}

void expand_big(const Integer& num, const Integer& den, const Integer& p, DigitStream& s) {
  Integer den_inv;
  const Integer den_mod = den % p;
  mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t());
  Integer digit;
  split_expansion(num, den, [&](Integer& state) {
    mpz_mul(digit.get_mpz_t(), state.get_mpz_t(), den_inv.get_mpz_t());
    mpz_fdiv_r(digit.get_mpz_t(), digit.get_mpz_t(), p.get_mpz_t());
    mpz_submul(state.get_mpz_t(), digit.get_mpz_t(), den.get_mpz_t());
    mpz_divexact(state.get_mpz_t(), state.get_mpz_t(), p.get_mpz_t());
    return static_cast<Digit>(digit.get_ui());
  }, s);
}


// Wang's rational reconstruction: the n/d with |n|, d <= sqrt(M/2) and
// n = d * residue mod M, if one exists.
std::optional<Rational> reconstruct(const Integer& residue, const Integer& modulus) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(modulus / 2).get_mpz_t());
  Integer r0 = modulus, r1 = residue, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return t1 < 0 ? Rational(Integer(-r1), Integer(-t1)) : Rational(r1, t1);
}

bool expands_to_small(std::int64_t state, std::int64_t den, std::uint64_t p,
                      const DigitStream& s) {
  const SmallPrime prime(p, den);
  for (const Digit d : s.preperiod) {
    if (prime.step(state) != d) return false;
  }
  const std::int64_t start = state;
  for (const Digit d : s.period) {
    if (prime.step(state) != d) return false;
  }
  return state == start && start <= 0 && start >= -den;
}

// True iff the unit n/d expands to the digits of s, which must be canonical.
// Only preperiod + period steps are taken, so a wrong candidate costs no more
// than the stream itself.
bool expands_to(const PrimeContext& ctx, const Rational& unit, const DigitStream& s) {
  Integer state = unit.numerator();
  const Integer& den = unit.denominator();
  const Integer& p = ctx.p_integer();
  if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) return false;
  constexpr std::uint64_t kSmallPrime = 1ULL << 31;
  constexpr long kSmallOperand = 1L << 31;
  if (ctx.p() < kSmallPrime && mpz_cmpabs_ui(state.get_mpz_t(), kSmallOperand) < 0 &&
      mpz_cmp_ui(den.get_mpz_t(), kSmallOperand) < 0) {
    return expands_to_small(state.get_si(), den.get_si(), ctx.p(), s);
  }
  Integer den_inv;
  const Integer den_mod = den % p;
  mpz_invert(den_inv.get_mpz_t(), den_mod.get_mpz_t(), p.get_mpz_t());
  Integer digit;
  Integer start;
  const std::size_t total = s.preperiod.size() + s.period.size();
  for (std::size_t i = 0; i < total; ++i) {
    if (i == s.preperiod.size()) start = state;
    mpz_mul(digit.get_mpz_t(), state.get_mpz_t(), den_inv.get_mpz_t());
    mpz_fdiv_r(digit.get_mpz_t(), digit.get_mpz_t(), p.get_mpz_t());
    if (digit.get_ui() != s.digit(i)) return false;
    mpz_submul(state.get_mpz_t(), digit.get_mpz_t(), den.get_mpz_t());
    mpz_divexact(state.get_mpz_t(), state.get_mpz_t(), p.get_mpz_t());
  }
  return state == start && start <= 0 && start >= -den;
}

std::optional<Rational> reconstruct_unit(const PrimeContext& ctx, const DigitStream& s) {
  const std::size_t total = s.preperiod.size() + 2 * s.period.size();
  for (std::size_t count = 16; count < total; count *= 2) {
    std::vector<Digit> low(count);
    for (std::size_t i = 0; i < count; ++i) low[i] = s.digit(i);
    Integer modulus;
    mpz_pow_ui(modulus.get_mpz_t(), ctx.p_integer().get_mpz_t(), count);
    const auto candidate = reconstruct(digits_to_integer(ctx, low), modulus);
    if (candidate && expands_to(ctx, *candidate, s)) return candidate;
  }
  return std::nullopt;
}

}  // namespace

Digit DigitStream::digit(std::size_t n) const {
  if (is_zero) return 0;
  if (n < preperiod.size()) return preperiod[n];
  return period[(n - preperiod.size()) % period.size()];
}

DigitStream rational_to_digit_stream(const PrimeContext& ctx, const Rational& x) {
  if (x.is_zero()) return DigitStream::zero();
  Integer num = x.numerator();
  Integer den = x.denominator();
  DigitStream s;
  s.valuation = remove_prime_factor(ctx, num) - remove_prime_factor(ctx, den);

  // |state| never exceeds max(|num|, den), so these bounds keep
  // digit * den and the state inside int64.
  constexpr std::uint64_t kSmallPrime = 1ULL << 31;
  constexpr long kSmallOperand = 1L << 31;
  if (ctx.p() < kSmallPrime && mpz_cmpabs_ui(num.get_mpz_t(), kSmallOperand) < 0 &&
      mpz_cmp_ui(den.get_mpz_t(), kSmallOperand) < 0) {
    expand_small(num.get_si(), den.get_si(), ctx.p(), s);
  } else {
    expand_big(num, den, ctx.p_integer(), s);
  }
  return s;
}

Rational digit_stream_to_rational(const PrimeContext& ctx, const DigitStream& s) {
  if (s.is_zero) return Rational(0);
  if (s.period.empty()) {
    throw Error(ErrorKind::InvariantViolation, "digit stream with an empty period");
  }
  if (is_canonical(ctx, s)) {
    if (const auto unit = reconstruct_unit(ctx, s)) return *unit * p_power(ctx, s.valuation);
  }
  // unit = A + p^L * B / (1 - p^q) with A, B the preperiod and period values.
  const Integer& p = ctx.p_integer();
  Integer shift;
  mpz_pow_ui(shift.get_mpz_t(), p.get_mpz_t(), s.preperiod.size());
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), p.get_mpz_t(), s.period.size());
  den = 1 - den;
  const Integer num = digits_to_integer(ctx, s.preperiod) * den +
                      shift * digits_to_integer(ctx, s.period);
  const Rational unit(num, den);
  return unit * p_power(ctx, s.valuation);
}

bool is_canonical(const PrimeContext& ctx, const DigitStream& s) {
  if (s.is_zero) return s.valuation == 0 && s.preperiod.empty() && s.period.empty();
  if (s.period.empty()) return false;
  const auto below_p = [&](Digit d) { return d < ctx.p(); };
  if (!std::all_of(s.preperiod.begin(), s.preperiod.end(), below_p) ||
      !std::all_of(s.period.begin(), s.period.end(), below_p)) {
    return false;
  }
  if (s.digit(0) == 0) return false;
  if (!is_primitive(s.period)) return false;
  // A shorter preperiod exists iff its last digit matches the period's last.
  return s.preperiod.empty() || s.preperiod.back() != s.period.back();
}

DigitStream canonicalize(const PrimeContext& ctx, const DigitStream& s) {
  if (s.is_zero) return DigitStream::zero();
  const auto too_big = [&](Digit d) { return d >= ctx.p(); };
  if (s.period.empty() || std::any_of(s.preperiod.begin(), s.preperiod.end(), too_big) ||
      std::any_of(s.period.begin(), s.period.end(), too_big)) {
    throw Error(ErrorKind::InvariantViolation, "malformed digit stream");
  }
  return rational_to_digit_stream(ctx, digit_stream_to_rational(ctx, s));
}

}  // namespace schneider
