#pragma once

// Randomized quasi-Monte Carlo estimates of the box integrals
//   int_box 1 / (1 - prod x_i)     (plain)
//   int_box 1 / (1 - prod x_i^2)   (squared)
// over boxes 0 < x_i < a_i whose edges multiply to 1.
//
// A base-2 Sobol point set is replicated under independent random digital
// shifts; the replicate means are i.i.d. unbiased estimates of the clipped
// integral, so their spread gives the standard error. The singular corner is
// tamed by clipping the product at 1 - epsilon.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "crucible/hyperbolic_map.hpp"
#include "crucible/report.hpp"
#include "crucible/types.hpp"

namespace crucible {

enum class IntegrandKind { plain, squared };

struct QmcEstimate {
  real value = 0;
  real stat_error = 0;     // standard error of the replicate mean
  std::uint64_t points = 0;  // total integrand evaluations, all replicates
  real clip_epsilon = 0;
  real clip_bias = 0;      // bound on (true integral - clipped integral) >= 0
  std::uint64_t seed = 0;
};

inline constexpr int kShiftReplicates = 8;
inline constexpr int kMaxCubeDimension = 8;
inline constexpr real kDefaultClipEpsilon = 1e-9L;
inline constexpr std::uint64_t kDefaultQmcSeed = 20240601;
inline constexpr std::uint64_t kMinQmcPoints = 1u << 10;

// 2^20 points per replicate for n <= 4, 2^22 above.
std::uint64_t default_qmc_points(int n);

// Upper bound on the mass removed by clipping. With y = -ln prod x_i the
// image of the uniform box measure is Gamma(n, 1) (for every box whose edges
// multiply to 1), and 1 - e^-y >= y e^-y gives
//   plain:   y0^(n-1) / ((n-1) (n-1)!),            y0 = -ln(1 - eps)
//   squared: e^y0 y0^(n-1) / (2 (n-1) (n-1)!),     y0 = -ln(1 - eps) / 2.
real clip_bias_bound(int n, IntegrandKind kind, real clip_epsilon);

// points is the Sobol point count per shifted replicate.
QmcEstimate qmc_cube(int n, IntegrandKind kind, const BoxSpec& box, std::uint64_t points,
                     real clip_epsilon = kDefaultClipEpsilon,
                     std::uint64_t seed = kDefaultQmcSeed);

// Same estimator for an arbitrary integrand over the box.
QmcEstimate qmc_box_integral(const BoxSpec& box,
                             const std::function<real(std::span<const real>)>& f,
                             std::uint64_t points, std::uint64_t seed = kDefaultQmcSeed);

// 2^n / (2^n - 1) times the squared unit-cube estimate; error and bias are
// scaled by the same factor.
QmcEstimate zeta_from_cube(int n, std::uint64_t points, std::uint64_t seed = kDefaultQmcSeed,
                           real clip_epsilon = kDefaultClipEpsilon);

// Squared-integrand estimates over every box, checked against the odd series
// lambda(n) and pairwise against each other at 3 standard errors plus the
// clip bias. Box k uses seed + k.
VerificationReport invariance_check(int n, const std::vector<BoxSpec>& boxes,
                                    std::uint64_t points, std::uint64_t seed = kDefaultQmcSeed,
                                    real sigmas = 3);

}  // namespace crucible
