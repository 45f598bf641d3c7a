#pragma once

// Reference sums for zeta(n) and the odd-denominator series
// lambda(n) = sum_{q>=0} (2q+1)^-n, with certified integral-test enclosures.

#include <cstdint>

#include "crucible/exact_rational.hpp"
#include "crucible/types.hpp"

namespace crucible {

// value <= true sum <= value + tail_bound. value is the partial sum of the
// first terms_used terms plus the integral-test lower bound on the rest;
// tail_bound is the width between the lower and upper integral bounds.
struct SeriesResult {
  real value = 0;
  real tail_bound = 0;
  std::uint64_t terms_used = 0;
};

SeriesResult zeta_series(int n, real tol);
SeriesResult lambda_series(int n, real tol);

// zeta(n) = 2^n / (2^n - 1) * lambda(n).
real zeta_from_lambda(int n, real tol);

// Exact value of the integral over (0, 1) of ln^k(z) z^(2q):
// (-1)^k k! / (2q+1)^(k+1), for k, q >= 0.
ExactRational log_power_moment(int k, int q);

}  // namespace crucible
