#include "crucible/cube_integrals.hpp"

#include <boost/random/sobol.hpp>
#include <cmath>
#include <random>
#include <string>

#include "crucible/parallel.hpp"
#include "crucible/series.hpp"

namespace crucible {
namespace {

void check_dimension(int n) {
  if (n < 2) throw InvalidDomain("cube integrals need n >= 2");
  if (n > kMaxCubeDimension) {
    throw DimensionTooLarge("cube integrals support n <= " + std::to_string(kMaxCubeDimension) +
                            ", got " + std::to_string(n));
  }
}

void check_points(std::uint64_t points) {
  if (points < kMinQmcPoints) {
    throw InvalidDomain("QMC needs at least " + std::to_string(kMinQmcPoints) +
                        " points per replicate");
  }
}

void check_epsilon(real eps) {
  if (!(eps > 0 && eps <= 1e-3L)) throw BadEpsilon("clip epsilon must lie in (0, 1e-3]");
}

real factorial_real(int k) {
  real f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// One 64-bit digital shift per coordinate and replicate, drawn in order from
// a fixed-seed mt19937_64 so every run sees the same shifts.
std::vector<std::vector<std::uint64_t>> draw_shifts(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::uint64_t>> shifts(kShiftReplicates, std::vector<std::uint64_t>(dim));
  for (auto& replicate : shifts) {
    for (auto& s : replicate) s = rng();
  }
  return shifts;
}

// Midpoint of the 2^-53 cell holding the shifted integer coordinate, so the
// result is strictly inside (0, 1).
real to_unit(std::uint64_t v) {
  return (static_cast<real>(v >> 11) + 0.5L) * std::ldexp(real{1}, -53);
}

// Replicate means are reduced serially within each replicate, so the result
// does not depend on how replicates are spread over threads.
template <typename Eval>
QmcEstimate estimate(const BoxSpec& box, std::uint64_t points, std::uint64_t seed,
                     const Eval& eval) {
  check_points(points);
  const std::size_t dim = box.dimension();
  const auto shifts = draw_shifts(dim, seed);
  std::vector<real> means(kShiftReplicates);

  parallel_for(kShiftReplicates, [&](std::size_t r) {
    boost::random::sobol engine(static_cast<unsigned>(dim));
    std::vector<real> x(dim);
    real sum = 0;
    for (std::uint64_t p = 0; p < points; ++p) {
      for (std::size_t d = 0; d < dim; ++d) {
        x[d] = box.edge(d) * to_unit(engine() ^ shifts[r][d]);
      }
      sum += eval(std::span<const real>(x));
    }
    means[r] = sum / static_cast<real>(points);
  });

  real mean = 0;
  for (real m : means) mean += m;
  mean /= kShiftReplicates;
  real ss = 0;
  for (real m : means) ss += (m - mean) * (m - mean);
  const real sd = std::sqrt(ss / (kShiftReplicates - 1));

  const real volume = box.volume();
  QmcEstimate out;
  out.value = volume * mean;
  out.stat_error = volume * sd / std::sqrt(static_cast<real>(kShiftReplicates));
  out.points = points * kShiftReplicates;
  out.seed = seed;
  return out;
}

std::string box_label(const BoxSpec& box) {
  std::string s = "(";
  const auto free = box.free_edges();
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (i) s += ",";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6Lg", free[i]);
    s += buf;
  }
  return s + ")";
}

}  // namespace

std::uint64_t default_qmc_points(int n) {
  check_dimension(n);
  return n <= 4 ? (std::uint64_t{1} << 20) : (std::uint64_t{1} << 22);
}

real clip_bias_bound(int n, IntegrandKind kind, real clip_epsilon) {
  check_dimension(n);
  check_epsilon(clip_epsilon);
  const real denom = (n - 1) * factorial_real(n - 1);
  if (kind == IntegrandKind::plain) {
    const real y0 = -std::log1p(-clip_epsilon);
    return std::pow(y0, static_cast<real>(n - 1)) / denom;
  }
  const real y0 = -std::log1p(-clip_epsilon) / 2;
  return std::exp(y0) * std::pow(y0, static_cast<real>(n - 1)) / (2 * denom);
}

QmcEstimate qmc_cube(int n, IntegrandKind kind, const BoxSpec& box, std::uint64_t points,
                     real clip_epsilon, std::uint64_t seed) {
  check_dimension(n);
  check_epsilon(clip_epsilon);
  if (box.dimension() != static_cast<std::size_t>(n)) {
    throw InvalidDomain("box dimension does not match n");
  }
  // Sample w in the unit cube and set x_i = a_i (1 - w_i^2). The Jacobian
  // prod 2 a_i w_i vanishes at the corner to order n while 1 - prod x_i^2
  // vanishes to order 2, so the transformed integrand is bounded. Clipping
  // is applied to 1 - P exactly as in x space.
  const BoxSpec unit = BoxSpec::unit(static_cast<std::size_t>(n));
  const std::vector<real> edges = box.edges();
  const bool squared = kind == IntegrandKind::squared;
  QmcEstimate out = estimate(unit, points, seed, [&](std::span<const real> w) {
    // q = 1 - prod (1 - w_i^2) accumulated as q += t (1 - q): every term is
    // non-negative, so there is no cancellation near the corner.
    real jacobian = 1;
    real q = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      jacobian *= 2 * edges[i] * w[i];
      const real t = w[i] * w[i];
      q += t * (1 - q);
    }
    const real one_minus_p = squared ? q * (2 - q) : q;
    return jacobian / std::max(one_minus_p, clip_epsilon);
  });
  out.clip_epsilon = clip_epsilon;
  out.clip_bias = clip_bias_bound(n, kind, clip_epsilon);
  return out;
}

QmcEstimate qmc_box_integral(const BoxSpec& box,
                             const std::function<real(std::span<const real>)>& f,
                             std::uint64_t points, std::uint64_t seed) {
  check_dimension(static_cast<int>(box.dimension()));
  return estimate(box, points, seed, f);
}

QmcEstimate zeta_from_cube(int n, std::uint64_t points, std::uint64_t seed, real clip_epsilon) {
  QmcEstimate e =
      qmc_cube(n, IntegrandKind::squared, BoxSpec::unit(static_cast<std::size_t>(n)), points,
               clip_epsilon, seed);
  const real p = std::ldexp(real{1}, n);
  const real factor = p / (p - 1);
  e.value *= factor;
  e.stat_error *= factor;
  e.clip_bias *= factor;
  return e;
}

VerificationReport invariance_check(int n, const std::vector<BoxSpec>& boxes,
                                    std::uint64_t points, std::uint64_t seed, real sigmas) {
  check_dimension(n);
  if (boxes.empty()) throw InvalidDomain("invariance check needs at least one box");
  std::vector<QmcEstimate> estimates;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    estimates.push_back(
        qmc_cube(n, IntegrandKind::squared, boxes[k], points, kDefaultClipEpsilon, seed + k));
  }

  const real oracle = lambda_series(n, 1e-14L).value;
  const std::string prefix = "invariance.n" + std::to_string(n);
  VerificationReport report;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const auto& e = estimates[k];
    auto entry = numeric_entry(prefix + ".box" + std::to_string(k + 1) + ".vs_series",
                               "Lemma 1 I_n" + box_label(boxes[k]), oracle, e.value,
                               sigmas * e.stat_error + e.clip_bias, e.seed);
    report.add(std::move(entry));
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      const auto& a = estimates[i];
      const auto& b = estimates[j];
      const real sigma = std::hypot(a.stat_error, b.stat_error);
      report.add(numeric_entry(
          prefix + ".box" + std::to_string(i + 1) + "_vs_box" + std::to_string(j + 1),
          "Lemma 1 I_n" + box_label(boxes[i]) + " = I_n" + box_label(boxes[j]), a.value, b.value,
          sigmas * sigma + std::max(a.clip_bias, b.clip_bias), seed + i));
    }
  }
  return report;
}

}  // namespace crucible
