#include "schneider/rational.hpp"

#include "schneider/error.hpp"

namespace schneider {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational inverse(const Rational& x) { return Rational(1) / x; }

Rational power(const Integer& base, std::int64_t exponent) {
  Integer magnitude;
  const auto abs_exp = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(magnitude.get_mpz_t(), base.get_mpz_t(), abs_exp);
  if (exponent >= 0) return Rational(magnitude);
  return Rational(Integer(1), magnitude);
}

}  // namespace schneider
