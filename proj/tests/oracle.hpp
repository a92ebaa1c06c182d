#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's p-adic code; only gmpxx arithmetic is shared.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

/// v_p by repeated trial division; nullopt for zero.
inline std::optional<std::int64_t> valuation(std::uint64_t p, const mpq_class& x) {
  if (x == 0) return std::nullopt;
  mpz_class num = x.get_num();
  mpz_class den = x.get_den();
  const mpz_class pz(static_cast<unsigned long>(p));
  std::int64_t v = 0;
  while (num % pz == 0) {
    num /= pz;
    ++v;
  }
  while (den % pz == 0) {
    den /= pz;
    --v;
  }
  return v;
}

inline bool valuation_at_least(std::uint64_t p, const mpq_class& x, std::int64_t n) {
  const auto v = valuation(p, x);
  return !v || *v >= n;
}

inline mpq_class p_pow(std::uint64_t p, std::int64_t k) {
  mpq_class out = 1;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out *= static_cast<unsigned long>(p);
  return k < 0 ? mpq_class(1 / out) : out;
}

inline mpq_class unit_part(std::uint64_t p, const mpq_class& x) {
  if (x == 0) return 1;
  return x / p_pow(p, *valuation(p, x));
}

/// The digit a in {0..p-1} with v(x - a) >= 1, found by exhaustion.
inline std::uint64_t floor_digit(std::uint64_t p, const mpq_class& x) {
  for (std::uint64_t a = 0; a < p; ++a) {
    if (valuation_at_least(p, mpq_class(x - static_cast<unsigned long>(a)), 1)) return a;
  }
  return p;  // not integral
}

/// First `count` digits of the unit part of x by peeling one digit at a time.
inline std::vector<std::uint64_t> unit_digits(std::uint64_t p, const mpq_class& x, std::int64_t count) {
  std::vector<std::uint64_t> digits;
  mpq_class rest = unit_part(p, x);
  for (std::int64_t i = 0; i < count; ++i) {
    const std::uint64_t d = floor_digit(p, rest);
    digits.push_back(d);
    rest = (rest - static_cast<unsigned long>(d)) / static_cast<unsigned long>(p);
  }
  return digits;
}

/// Schneider's map written straight from its definition.
inline mpq_class tau(std::uint64_t p, const mpq_class& x) {
  const mpq_class w = 1 / unit_part(p, x);
  return w - static_cast<unsigned long>(floor_digit(p, w));
}

inline mpq_class sigma(std::uint64_t p, const mpq_class& x) {
  const mpq_class u = unit_part(p, x);
  return u - static_cast<unsigned long>(floor_digit(p, u));
}

/// Partial sum of the defining series of f,
///   sum_n floor(1/eps(x_n)) prod_{m<=n} x_m / eps(x_m),  x_n = tau^n(x),
/// continued until every further term is divisible by p^precision.
/// Keeps iterating through the fixed point -p, whose terms never vanish.
inline mpq_class f_series(std::uint64_t p, const mpq_class& x, std::int64_t precision) {
  mpq_class sum = 0;
  mpq_class product = 1;
  mpq_class current = x;
  for (int guard = 0; guard < 100000; ++guard) {
    if (current == 0) return sum;
    product *= current / unit_part(p, current);
    if (valuation_at_least(p, product, precision)) return sum;
    sum += product * static_cast<unsigned long>(floor_digit(p, mpq_class(1 / unit_part(p, current))));
    current = tau(p, current);
  }
  return sum;
}

}  // namespace oracle
