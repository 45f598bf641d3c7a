#include <doctest.h>

#include <cmath>
#include <random>

#include "crucible/hyperbolic_map.hpp"

using namespace crucible;

namespace {

HyperCoords random_u(std::mt19937_64& rng, int n, real hi) {
  std::uniform_real_distribution<double> dist(1e-6, static_cast<double>(hi));
  HyperCoords u;
  for (int i = 0; i < n; ++i) u.u.push_back(dist(rng));
  return u;
}

real max_abs_diff(const std::vector<real>& a, const std::vector<real>& b) {
  real m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("origin maps to origin with identity Jacobian") {
  for (int n = 2; n <= 6; ++n) {
    const HyperCoords u{std::vector<real>(n, 0)};
    const auto x = forward_map(u);
    for (real xi : x.x) CHECK(xi == 0);
    CHECK(jacobian_matrix(u).isApprox(RealMatrix::Identity(n, n)));
    CHECK(jacobian_det_closed_form(u) == 1);
  }
}

TEST_CASE("symmetric point gives tanh") {
  const auto x = forward_map({{1, 1}});
  CHECK(std::fabs(x.x[0] - std::tanh(1.0L)) <= 1e-18L);
  CHECK(std::fabs(x.x[1] - 0.76159415595576488812L) <= 1e-18L);
}

TEST_CASE("2x2 determinant by the direct formula") {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 50; ++s) {
    const auto u = random_u(rng, 2, 3);
    const RealMatrix m = jacobian_matrix(u);
    const real direct = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const real t0 = std::tanh(u.u[0]), t1 = std::tanh(u.u[1]);
    CHECK(std::fabs(direct - (1 - t0 * t0 * t1 * t1)) <= 1e-17L);
  }
}

TEST_CASE("Jacobian matches central differences entrywise") {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 6; ++n) {
    for (int s = 0; s < 20; ++s) {
      const auto u = random_u(rng, n, 3);
      const RealMatrix exact = jacobian_matrix(u);
      const RealMatrix fd = central_difference_jacobian(u, 1e-5L);
      CHECK((exact - fd).cwiseAbs().maxCoeff() <= 1e-6L);
    }
  }
}

TEST_CASE("closed-form determinant against LU") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 6; ++n) {
    for (int s = 0; s < 100; ++s) {
      const auto u = random_u(rng, n, 3);
      const real closed = jacobian_det_closed_form(u);
      const real lu = lu_determinant(jacobian_matrix(u));
      CHECK(closed > 0);
      CHECK(closed <= 1);
      CHECK(std::fabs(lu - closed) <= 1e-12L * std::max<real>(1, std::fabs(closed)));
      // 1 - prod tanh^2 = 1 - prod x^2, written out without the library.
      real px = 1;
      for (real xi : forward_map(u).x) px *= xi * xi;
      CHECK(std::fabs((1 - px) - closed) <= 1e-12L);
    }
  }
}

TEST_CASE("determinant decays at large arguments") {
  // tanh(40) rounds to 1, but the complement 3 * 4 e^-80 is still resolved.
  const real d = jacobian_det_closed_form({{40, 40, 40}});
  CHECK(std::fabs(d - 12 * std::exp(-80.0L)) <= 1e-15L * d);
  CHECK(jacobian_det_closed_form({{600, 600}}) > 0);
}

TEST_CASE("inverse for n = 3") {
  SUBCASE("(0.5, 0.5, 0.5)") {
    const CubeCoords x{{0.5L, 0.5L, 0.5L}};
    CHECK(max_abs_diff(forward_map(inverse_map_n3(x)).x, x.x) <= 1e-12L);
  }
  SUBCASE("origin") {
    const auto u = inverse_map_n3({{0, 0, 0}});
    for (real ui : u.u) CHECK(ui == 0);
  }
  SUBCASE("product of squares one part in 1e12 below 1") {
    const real xi = std::pow(1 - 1e-12L, 1.0L / 6);
    const CubeCoords x{{xi, xi, xi}};
    const auto u = inverse_map_n3(x);
    for (real ui : u.u) {
      CHECK(std::isfinite(ui));
      CHECK(ui > 5);
    }
    CHECK(max_abs_diff(forward_map(u).x, x.x) <= 1e-6L);
  }
  SUBCASE("roundtrip from u") {
    std::mt19937_64 rng(14);
    real worst = 0;
    for (int s = 0; s < 10000; ++s) {
      const auto u = random_u(rng, 3, 2);
      worst = std::max(worst, max_abs_diff(inverse_map_n3(forward_map(u)).u, u.u));
    }
    CHECK(worst <= 1e-10L);
  }
  CHECK_THROWS_AS(inverse_map_n3({{1, 1, 1}}), SingularPoint);
  CHECK_THROWS_AS(inverse_map_n3({{2, 1, 0.75L}}), SingularPoint);
}

TEST_CASE("region membership") {
  const BoxSpec unit2 = BoxSpec::unit(2);
  CHECK(gamma_region_contains({{0.5L, 0.5L}}, unit2));
  CHECK(std::fabs(std::asinh(std::cosh(0.5L)) - 0.96881L) < 1e-5L);
  CHECK_FALSE(gamma_region_contains({{0.97L, 0.5L}}, unit2));
  CHECK_FALSE(gamma_region_contains({{0, 0.5L}}, unit2));
  CHECK_FALSE(gamma_region_contains({{-0.1L, 0.5L}}, unit2));

  std::mt19937_64 rng(15);
  for (int n = 2; n <= 4; ++n) {
    std::vector<real> free;
    for (int i = 0; i + 1 < n; ++i) free.push_back(0.5L + i);
    const BoxSpec box(free);
    int disagreements = 0;
    for (int s = 0; s < 10000; ++s) {
      const auto u = random_u(rng, n, 2);
      const auto x = forward_map(u).x;
      bool inside = true;
      for (int i = 0; i < n; ++i) inside = inside && x[i] < box.edge(i);
      if (inside != gamma_region_contains(u, box)) ++disagreements;
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("box derives its last edge") {
  const BoxSpec box({2, 0.25L});
  CHECK(box.dimension() == 3);
  CHECK(std::fabs(box.edge(2) - 2) <= 1e-18L);
  CHECK(std::fabs(box.volume() - 1) <= 1e-18L);
  CHECK_THROWS(BoxSpec({-1}));
}

TEST_CASE("overflow guard") {
  CHECK_THROWS_AS(forward_map({{701, 1}}), Overflow);
  CHECK_THROWS_AS(jacobian_matrix({{1, 800}}), Overflow);
  CHECK_NOTHROW(forward_map({{699, 699}}));
}
