#pragma once

#include <cstdint>

#include "schneider/rational.hpp"

namespace schneider {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n) noexcept;

/// The fixed prime p every p-adic operation is relative to.
class PrimeContext {
 public:
  /// Throws Error(InvalidPrime) unless p is a prime.
  explicit PrimeContext(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  const Integer& p_integer() const noexcept { return p_big_; }
  Rational minus_p() const { return Rational(Integer(-p_big_)); }

  friend bool operator==(const PrimeContext& lhs, const PrimeContext& rhs) {
    return lhs.p_ == rhs.p_;
  }

 private:
  std::uint64_t p_;
  Integer p_big_;
};

}  // namespace schneider
