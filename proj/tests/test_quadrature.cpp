#include <doctest.h>

#include <cmath>
#include <vector>

#include "crucible/quadrature.hpp"
#include "crucible/series.hpp"

using namespace crucible;

namespace {

// Independent oracle: int_0^1 (-ln z)^k z^{2q} dz = k! / (2q+1)^{k+1}.
real log_moment_oracle(int k, int q) {
  real v = 1;
  for (int i = 2; i <= k; ++i) v *= i;
  return (k % 2 ? -v : v) / std::pow(static_cast<real>(2 * q + 1), k + 1);
}

}  // namespace

TEST_CASE("log z on (0,1)") {
  const auto r = integrate_finite([](real z) { return std::log(z); }, {0, 1}, 1e-12L);
  CHECK(std::fabs(r.value + 1) <= 1e-12L);
  CHECK(r.error_estimate >= 0);
  CHECK(r.evaluations >= 1);
}

TEST_CASE("log moments match the exact rational and the closed form") {
  for (int k = 0; k <= 8; ++k) {
    for (int q = 0; q <= 5; ++q) {
      const auto f = [k, q](real z) { return std::pow(std::log(z), k) * std::pow(z, 2 * q); };
      const real exact = log_power_moment(k, q).to_real();
      CHECK(std::fabs(exact - log_moment_oracle(k, q)) <= 1e-18L * std::fabs(exact));
      const auto r = integrate_finite(f, {0, 1}, 1e-12L * std::fabs(exact));
      INFO("k=" << k << " q=" << q);
      CHECK(std::fabs(r.value - exact) <= 1e-10L * std::fabs(exact));
    }
  }
  const auto r = integrate_finite([](real z) { return std::pow(std::log(z), 2) * z * z; }, {0, 1},
                                  1e-13L);
  CHECK(std::fabs(r.value - 2.0L / 27) <= 1e-12L);
}

TEST_CASE("polynomials up to degree 10") {
  for (int deg = 0; deg <= 10; ++deg) {
    // p(x) = sum_j (j+1) x^j on (-1.5, 2)
    const auto p = [deg](real x) {
      real s = 0;
      for (int j = deg; j >= 0; --j) s = s * x + (j + 1);
      return s;
    };
    real exact = 0;
    for (int j = 0; j <= deg; ++j) {
      exact += (j + 1) * (std::pow(2.0L, j + 1) - std::pow(-1.5L, j + 1)) / (j + 1);
    }
    const auto r = integrate_finite(p, {-1.5L, 2, false, false}, 1e-14L);
    INFO("degree " << deg);
    CHECK(std::fabs(r.value - exact) <= 1e-13L * std::fabs(exact));
  }
}

TEST_CASE("refinement differences shrink for a smooth integrand") {
  const auto h = refinement_history([](real x) { return std::exp(x) * std::cos(x); },
                                    {0, 2, false, false}, 6);
  REQUIRE(h.size() == 7);
  // Once the differences reach roundoff they only jitter.
  const real floor = 64 * epsilon * std::fabs(h.back().value);
  for (std::size_t i = 2; i < h.size(); ++i) {
    if (h[i - 1].difference > floor) CHECK(h[i].difference <= h[i - 1].difference);
    CHECK(h[i].difference <= std::max(h[i - 1].difference, floor));
    CHECK(h[i].evaluations > h[i - 1].evaluations);
  }
  const real exact = (std::exp(2.0L) * (std::cos(2.0L) + std::sin(2.0L)) - 1) / 2;
  CHECK(std::fabs(h.back().value - exact) <= 1e-15L);
}

TEST_CASE("results are bit-identical across calls") {
  const auto f = [](real x) { return std::sqrt(x) * std::log1p(x); };
  const auto a = integrate_finite(f, {0, 3}, 1e-12L);
  const auto b = integrate_finite(f, {0, 3}, 1e-12L);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("node tables") {
  CHECK(nodes_at_level(0) % 2 == 1);
  for (int l = 1; l <= kMaxQuadLevel; ++l) CHECK(nodes_at_level(l) > nodes_at_level(l - 1));
  CHECK(nodes_at_level(kMaxQuadLevel + 1) == 0);
}

TEST_CASE("endpoint distances are exact near the upper end") {
  // 1/sqrt(1 - x) written through the distance to the upper endpoint.
  const EndpointIntegrand f = [](const Abscissa& p) { return 1 / std::sqrt(p.from_upper); };
  const auto r = integrate_finite(f, {0, 1}, 1e-12L);
  CHECK(std::fabs(r.value - 2) <= 1e-12L);
}

TEST_CASE("semi-infinite examples") {
  SUBCASE("1/(1+u^2) falls back to the folded tail") {
    const auto r = integrate_semi_infinite([](real u) { return 1 / (1 + u * u); }, 1e-12L);
    CHECK(std::fabs(r.value - pi / 2) <= 1e-12L);
  }
  SUBCASE("2x/sinh(2x)") {
    const auto f = [](real x) { return x == 0 ? real{1} : 2 * x / std::sinh(2 * x); };
    const auto r = integrate_semi_infinite(f, 1e-12L);
    CHECK(std::fabs(r.value - pi * pi / 8) <= 1e-11L);
  }
  SUBCASE("ln coth x with a supplied majorant") {
    const auto f = [](real x) { return std::log(1 / std::tanh(x)); };
    const TailBound tail = [](real t) { return std::exp(-2 * t) / (1 - std::exp(-2 * t)); };
    const auto r = integrate_semi_infinite(f, 1e-12L, tail);
    CHECK(std::fabs(r.value - pi * pi / 8) <= 1e-11L);
  }
  SUBCASE("exponential decay is certified without a majorant") {
    const auto r = integrate_semi_infinite([](real x) { return std::exp(-x); }, 1e-12L);
    CHECK(std::fabs(r.value - 1) <= 1e-12L);
  }
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(integrate_finite([](real x) { return x; }, {1, 0}, 1e-10L), InvalidDomain);
  CHECK_THROWS_AS(integrate_finite([](real x) { return x; }, {0, 1}, 0), InvalidDomain);
  // 1/x is not integrable: the level sums never settle.
  CHECK_THROWS_AS(integrate_finite([](real x) { return 1 / x; }, {0, 1}, 1e-10L),
                  NonConvergence);
  // A non-finite value next to an endpoint declared regular.
  CHECK_THROWS_AS(
      integrate_finite([](real x) { return 1 / (1 - x); }, {0, 1, false, false}, 1e-10L),
      InvalidDomain);
  // f ~ 2/x at infinity: neither truncation nor the folded map can bound it.
  CHECK_THROWS_AS(
      integrate_semi_infinite([](real x) { return 1 / std::sqrt(x * (1 + x)) + 1 / (1 + x); },
                              1e-10L),
      TailUnbounded);
}
