#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "crucible/cube_integrals.hpp"
#include "crucible/quadrature.hpp"
#include "crucible/series.hpp"

using namespace crucible;

namespace {

constexpr std::uint64_t kPoints = 1u << 14;
constexpr real kApery = 1.2020569031595942853997381615114L;

bool within(const QmcEstimate& e, real truth) {
  return std::fabs(e.value - truth) <= 3 * e.stat_error + e.clip_bias;
}

// Mass removed by clipping 1/(1 - xy) at 1/eps on the unit square, by 1-D
// quadrature over the strip x in (1 - eps, 1) after the inner integral in y.
real plain_clip_mass_n2(real eps) {
  const real c = 1 - eps;
  const EndpointIntegrand g = [eps, c](const Abscissa& p) {
    const real x = p.x;
    return (std::log(eps) - std::log(p.from_upper)) / x - p.from_lower / (x * eps);
  };
  return integrate_finite(g, {c, 1}, eps * 1e-6L).value;
}

}  // namespace

TEST_CASE("unit square, both integrands") {
  const BoxSpec unit = BoxSpec::unit(2);
  const auto sq = qmc_cube(2, IntegrandKind::squared, unit, kPoints);
  CHECK(within(sq, pi * pi / 8));
  CHECK(sq.points == kPoints * kShiftReplicates);
  CHECK(sq.stat_error > 0);
  CHECK(sq.clip_epsilon == kDefaultClipEpsilon);

  const auto plain = qmc_cube(2, IntegrandKind::plain, unit, kPoints);
  CHECK(within(plain, pi * pi / 6));
}

TEST_CASE("unit cube, plain integrand gives zeta(3)") {
  const auto e = qmc_cube(3, IntegrandKind::plain, BoxSpec::unit(3), kPoints);
  CHECK(within(e, kApery));
}

TEST_CASE("zeta from the squared integrand") {
  const auto z2 = zeta_from_cube(2, kPoints);
  CHECK(within(z2, pi * pi / 6));
  const auto z4 = zeta_from_cube(4, kPoints);
  CHECK(within(z4, std::pow(pi, 4) / 90));
  const auto z5 = zeta_from_cube(5, kPoints);
  CHECK(within(z5, zeta_series(5, 1e-13L).value));
}

TEST_CASE("clip bias bound covers the exact clipped mass") {
  const real eps = 1e-6L;
  const real mass = plain_clip_mass_n2(eps);
  const real bound = clip_bias_bound(2, IntegrandKind::plain, eps);
  // By hand: t = 1 - x gives int_0^eps ln(eps/t) - 1 + t/eps dt = eps/2.
  CHECK(std::fabs(mass - eps / 2) <= 1e-4L * eps);
  CHECK(mass <= bound);
  CHECK(bound <= 2.001L * mass);
  // The squared integrand clips a smaller region.
  CHECK(clip_bias_bound(2, IntegrandKind::squared, eps) > 0);
  CHECK(clip_bias_bound(3, IntegrandKind::plain, 1e-9L) < 1e-15L);
}

TEST_CASE("box volume is one") {
  for (const auto& box : {BoxSpec({2}), BoxSpec({0.5L, 3}), BoxSpec({1, 1, 1})}) {
    const auto v = qmc_box_integral(box, [](std::span<const real>) { return real{1}; }, 1024);
    CHECK(std::fabs(v.value - 1) <= 1e-12L);
  }
}

TEST_CASE("stat error falls as points quadruple") {
  const int seeds = 6;
  real previous = std::numeric_limits<real>::infinity();
  for (std::uint64_t points : {1u << 10, 1u << 12, 1u << 14}) {
    real mean = 0;
    for (int s = 0; s < seeds; ++s) {
      mean += qmc_cube(3, IntegrandKind::squared, BoxSpec::unit(3), points, kDefaultClipEpsilon,
                       100 + s)
                  .stat_error;
    }
    mean /= seeds;
    CHECK(mean <= previous);
    previous = mean;
  }
}

TEST_CASE("fixed seed is reproducible for any worker count") {
  const BoxSpec box({2, 0.5L});
  setenv("ZETA_CRUCIBLE_THREADS", "1", 1);
  const auto a = qmc_cube(3, IntegrandKind::squared, box, 4096, kDefaultClipEpsilon, 99);
  setenv("ZETA_CRUCIBLE_THREADS", "4", 1);
  const auto b = qmc_cube(3, IntegrandKind::squared, box, 4096, kDefaultClipEpsilon, 99);
  unsetenv("ZETA_CRUCIBLE_THREADS");
  CHECK(a.value == b.value);
  CHECK(a.stat_error == b.stat_error);
  const auto c = qmc_cube(3, IntegrandKind::squared, box, 4096, kDefaultClipEpsilon, 100);
  CHECK(a.value != c.value);
}

TEST_CASE("independent seeds are calibrated at three sigma") {
  // With 8 replicates the standardized error is Student-t with 7 degrees of
  // freedom; P(|t| > 3) is about 2%, so 2 misses out of 20 is already rare.
  int misses = 0;
  for (int s = 0; s < 20; ++s) {
    const auto e = qmc_cube(2, IntegrandKind::squared, BoxSpec::unit(2), 4096,
                            kDefaultClipEpsilon, 500 + s);
    if (!within(e, pi * pi / 8)) ++misses;
  }
  CHECK(misses <= 2);
}

TEST_CASE("invariance over boxes") {
  const auto r2 = invariance_check(2, {BoxSpec({0.5L}), BoxSpec({1}), BoxSpec({2})}, kPoints);
  CHECK(r2.all_passed());
  CHECK(r2.entries().size() == 6);
  const auto r3 = invariance_check(3, {BoxSpec({1, 1}), BoxSpec({2, 0.5L})}, kPoints);
  CHECK(r3.all_passed());
  const auto r1 = invariance_check(2, {BoxSpec({1})}, kPoints);
  REQUIRE(r1.entries().size() == 1);
  CHECK(r1.all_passed());
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(qmc_cube(9, IntegrandKind::plain, BoxSpec::unit(9), kPoints), DimensionTooLarge);
  CHECK_THROWS_AS(zeta_from_cube(12, kPoints), DimensionTooLarge);
  CHECK_THROWS_AS(qmc_cube(2, IntegrandKind::plain, BoxSpec::unit(2), kPoints, 0), BadEpsilon);
  CHECK_THROWS_AS(qmc_cube(2, IntegrandKind::plain, BoxSpec::unit(2), kPoints, 1e-2L), BadEpsilon);
  CHECK_THROWS_AS(qmc_cube(3, IntegrandKind::plain, BoxSpec::unit(2), kPoints), InvalidDomain);
  CHECK_THROWS_AS(qmc_cube(2, IntegrandKind::plain, BoxSpec::unit(2), 16), InvalidDomain);
  CHECK(default_qmc_points(4) == (1u << 20));
  CHECK(default_qmc_points(5) == (1u << 22));
}
