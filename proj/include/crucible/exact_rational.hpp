#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <ostream>
#include <string>

#include "crucible/types.hpp"

namespace crucible {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational kept in lowest terms with a positive
// denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long long value);  // NOLINT(google-explicit-constructor)
  ExactRational(BigInt numerator, BigInt denominator);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  real to_real() const;
  std::string str() const;
  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }

  ExactRational operator-() const;
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned k);

}  // namespace crucible
