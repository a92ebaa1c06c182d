#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "schneider/conjugacy.hpp"
#include "schneider/padic_core.hpp"

namespace schneider {

inline constexpr std::array<std::uint64_t, 6> kSamplePrimes{2, 3, 5, 7, 11, 101};
inline constexpr std::int64_t kSampleHeight = 1000000;

/// Deterministic random rationals for property checks: numerators uniform in
/// [-H, H], denominators uniform in [1, H].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, std::int64_t height = kSampleHeight)
      : rng_(seed), height_(height) {}

  Rational rational();
  Rational nonzero_rational();
  /// A nonzero element of pZ_p: p^j * n/d with 1 <= j <= 3 and p not dividing d.
  Rational in_p_zp(const PrimeContext& ctx);
  /// A nonzero element m * p^k of Z[1/p], k in [-6, 6], mantissa of either sign.
  FImage dyadic(const PrimeContext& ctx);
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 rng_;
  std::int64_t height_;
};

}  // namespace schneider
