#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "schneider/approx.hpp"
#include "schneider/dynamics.hpp"
#include "schneider/error.hpp"

namespace schneider {

/// An element mantissa * p^exponent of Z[1/p]; canonical when the mantissa
/// is coprime to p (zero is 0 * p^0).
class FImage {
 public:
  FImage() = default;
  FImage(const PrimeContext& ctx, Integer mantissa, std::int64_t exponent);

  /// Throws Error(NotDyadic) unless the denominator of x is a power of p.
  static FImage from_rational(const PrimeContext& ctx, const Rational& x);

  const Integer& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  bool is_zero() const { return mantissa_ == 0; }

  Rational value(const PrimeContext& ctx) const;

  friend bool operator==(const FImage& lhs, const FImage& rhs) {
    return lhs.exponent_ == rhs.exponent_ && lhs.mantissa_ == rhs.mantissa_;
  }

 private:
  Integer mantissa_;
  std::int64_t exponent_ = 0;
};

/// Raised when an orbit does not reach 0 or -p within the iteration cap.
/// Carries the truncated expansion so the caller can retry with a larger cap.
class OrbitNotTerminated : public Error {
 public:
  explicit OrbitNotTerminated(CFExpansion expansion);

  const CFExpansion& expansion() const noexcept { return expansion_; }

 private:
  CFExpansion expansion_;
};

struct FRationalResult {
  FImage image;
  CFExpansion expansion;
};

/// f(x) = sum a_i p^(E_i) + t p^(E_m) over the expansion of x, where
/// E_i = e_0 + ... + e_i and t in {0, -p} is the terminal iterate.
/// Throws OrbitNotTerminated if the cap is reached.
FRationalResult f_rational(const PrimeContext& ctx, const Rational& x,
                           std::int64_t cap = kDefaultIterationCap);

/// f on a residue class: evaluates f exactly on the truncation and reduces
/// at the input precision. Sound because f is an isometry.
PAdicApprox f_approx(const PrimeContext& ctx, const PAdicApprox& a,
                     std::int64_t cap = kDefaultIterationCap);

/// The rational preimage of y in Z[1/p]. The result is checked against
/// f_rational and a mismatch throws Error(InvariantViolation).
Rational f_inverse_dyadic(const PrimeContext& ctx, const FImage& y);

/// Continued fraction data whose value maps to y: the pairs and the tail
/// (0 or -p).
struct PreimageData {
  std::vector<CFPair> pairs;
  Rational tail;
};
PreimageData preimage_pairs(const PrimeContext& ctx, const FImage& y);

/// f^-1 on a residue class, via the exact inverse of its truncation.
PAdicApprox f_inverse_approx(const PrimeContext& ctx, const PAdicApprox& y);

struct RationalPreimage {
  Rational witness;
};
struct IrrationalPreimage {};
using PreimageClassification = std::variant<RationalPreimage, IrrationalPreimage>;

/// x is rational iff f(x) lies in Z[1/p]; decides which side y = f(x) is on.
PreimageClassification classify_preimage(const PrimeContext& ctx, const Rational& y);

/// Checks f(p^e / (x + a)) == p^e (f(x) + a) exactly.
/// Requires a in {1..p-1} and x = 0 or v(x) >= 1, else throws
/// Error(InvariantViolation).
bool check_one_step_identity(const PrimeContext& ctx, std::int64_t e, Digit a,
                             const Rational& x, std::int64_t cap = kDefaultIterationCap);

}  // namespace schneider
