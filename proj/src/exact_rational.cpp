#include "crucible/exact_rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <utility>

namespace crucible {

ExactRational::ExactRational(long long value) : num_(value), den_(1) {}

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw InvalidDomain("rational with zero denominator");
  normalize();
}

void ExactRational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_.is_zero()) den_ = 1;
}

real ExactRational::to_real() const {
  // Divide in a float type wider than real so the result is correctly
  // rounded once more on conversion.
  using wide = boost::multiprecision::cpp_bin_float_quad;
  return static_cast<real>(wide(num_) / wide(den_));
}

std::string ExactRational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

ExactRational ExactRational::operator-() const {
  ExactRational r = *this;
  r.num_ = -r.num_;
  return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) { return *this += -rhs; }

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.num_.is_zero()) throw InvalidDomain("division by zero rational");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

}  // namespace crucible
