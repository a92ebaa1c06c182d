#include "schneider/sampling.hpp"

namespace schneider {

std::int64_t RationalSampler::uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational RationalSampler::rational() {
  return Rational(Integer(static_cast<long>(uniform(-height_, height_))),
                  Integer(static_cast<long>(uniform(1, height_))));
}

Rational RationalSampler::nonzero_rational() {
  while (true) {
    Rational x = rational();
    if (!x.is_zero()) return x;
  }
}

Rational RationalSampler::in_p_zp(const PrimeContext& ctx) {
  while (true) {
    const Rational x = nonzero_rational();
    const Valuation v = valuation(ctx, x);
    return x * p_power(ctx, uniform(1, 3) - v.value());
  }
}

FImage RationalSampler::dyadic(const PrimeContext& ctx) {
  while (true) {
    const std::int64_t m = uniform(-height_, height_);
    if (m == 0) continue;
    return FImage(ctx, Integer(static_cast<long>(m)), uniform(-6, 6));
  }
}

}  // namespace schneider
