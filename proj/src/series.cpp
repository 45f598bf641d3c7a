#include "crucible/series.hpp"

#include <cmath>

namespace crucible {
namespace {

constexpr std::uint64_t kMaxTerms = 200'000'000;

void check_order(int n) {
  if (n < 2) throw InvalidOrder("series needs order n >= 2, got " + std::to_string(n));
}

void check_tolerance(real tol) {
  if (!(tol > 0)) throw InvalidDomain("series tolerance must be positive");
}

// Terms t(j) = (scale*j + offset)^-n for j = first..last, decreasing in j.
// The remainder beyond `last` lies between the integrals of t over
// (last+1, inf) and (last, inf):
//   ((scale*(last+1) + offset)^(1-n)) / (scale*(n-1))  and
//   ((scale*last + offset)^(1-n)) / (scale*(n-1)).
struct Family {
  int n;
  real scale;
  real offset;

  real term(std::uint64_t j) const {
    return std::pow(scale * static_cast<real>(j) + offset, static_cast<real>(-n));
  }
  real lower_tail(std::uint64_t last) const {
    const real b = scale * static_cast<real>(last + 1) + offset;
    return std::pow(b, static_cast<real>(1 - n)) / (scale * (n - 1));
  }
  // upper_tail - lower_tail without cancellation.
  real width(std::uint64_t last) const {
    const real a = scale * static_cast<real>(last) + offset;
    const real b = a + scale;
    return std::pow(b, static_cast<real>(1 - n)) *
           std::expm1((n - 1) * std::log1p(scale / a)) / (scale * (n - 1));
  }
};

SeriesResult sum_family(const Family& fam, std::uint64_t first, real tol) {
  // width(last) ~ (scale*last)^-n; start from that estimate and step up.
  const real guess = std::pow(tol, real{-1} / fam.n) / fam.scale;
  std::uint64_t last = first;
  if (guess > static_cast<real>(first)) {
    if (guess > static_cast<real>(kMaxTerms)) {
      throw NonConvergence("series tolerance needs more than " + std::to_string(kMaxTerms) +
                           " terms");
    }
    last = static_cast<std::uint64_t>(guess);
  }
  while (last > first && fam.width(last - 1) <= tol) --last;
  while (fam.width(last) > tol) {
    if (last - first + 1 >= kMaxTerms) {
      throw NonConvergence("series tolerance needs more than " + std::to_string(kMaxTerms) +
                           " terms");
    }
    last += 1 + last / 64;
  }

  // Smallest terms first.
  real sum = 0;
  for (std::uint64_t j = last + 1; j-- > first;) sum += fam.term(j);
  return {sum + fam.lower_tail(last), fam.width(last), last - first + 1};
}

}  // namespace

SeriesResult zeta_series(int n, real tol) {
  check_order(n);
  check_tolerance(tol);
  return sum_family(Family{n, 1, 0}, 1, tol);
}

SeriesResult lambda_series(int n, real tol) {
  check_order(n);
  check_tolerance(tol);
  return sum_family(Family{n, 2, 1}, 0, tol);
}

real zeta_from_lambda(int n, real tol) {
  check_order(n);
  check_tolerance(tol);
  const real p = std::ldexp(real{1}, n);
  const real factor = p / (p - 1);
  return factor * lambda_series(n, tol / factor).value;
}

ExactRational log_power_moment(int k, int q) {
  if (k < 0 || q < 0) throw InvalidDomain("log-power moment needs k >= 0 and q >= 0");
  BigInt den = boost::multiprecision::pow(BigInt(2 * q + 1), static_cast<unsigned>(k + 1));
  BigInt num = factorial(static_cast<unsigned>(k));
  if (k % 2 == 1) num = -num;
  return {std::move(num), std::move(den)};
}

}  // namespace crucible
