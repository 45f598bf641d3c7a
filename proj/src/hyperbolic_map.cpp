#include "crucible/hyperbolic_map.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <string>

namespace crucible {
namespace {

void check_coords(const HyperCoords& u) {
  if (u.dimension() < 2) throw InvalidDomain("hyperbolic map needs n >= 2");
  for (real v : u.u) {
    if (!std::isfinite(v)) throw InvalidDomain("non-finite hyperbolic coordinate");
    if (std::fabs(v) > kMaxHyperbolicArgument) {
      throw Overflow("hyperbolic coordinate " + std::to_string(static_cast<double>(v)) +
                     " exceeds the overflow guard");
    }
  }
}

std::size_t next(std::size_t i, std::size_t n) { return (i + 1) % n; }

}  // namespace

BoxSpec::BoxSpec(std::vector<real> free_edges) : edges_(std::move(free_edges)) {
  if (edges_.empty()) throw InvalidDomain("box needs at least one free edge (n >= 2)");
  real product = 1;
  for (real a : edges_) {
    if (!(a > 0) || !std::isfinite(a)) throw InvalidDomain("box edges must be positive and finite");
    product *= a;
  }
  edges_.push_back(1 / product);
}

BoxSpec BoxSpec::unit(std::size_t n) {
  if (n < 2) throw InvalidDomain("box needs n >= 2");
  return BoxSpec(std::vector<real>(n - 1, real{1}));
}

real BoxSpec::volume() const {
  return std::accumulate(edges_.begin(), edges_.end(), real{1}, std::multiplies<>());
}

CubeCoords forward_map(const HyperCoords& u) {
  check_coords(u);
  const std::size_t n = u.dimension();
  CubeCoords x{std::vector<real>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    x.x[i] = std::sinh(u.u[i]) / std::cosh(u.u[next(i, n)]);
  }
  return x;
}

RealMatrix jacobian_matrix(const HyperCoords& u) {
  check_coords(u);
  const std::size_t n = u.dimension();
  RealMatrix a = RealMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = next(i, n);
    const real cj = std::cosh(u.u[j]);
    const auto r = static_cast<Eigen::Index>(i);
    const auto c = static_cast<Eigen::Index>(j);
    a(r, r) = std::cosh(u.u[i]) / cj;
    a(r, c) = -std::sinh(u.u[i]) * std::sinh(u.u[j]) / (cj * cj);
  }
  return a;
}

real jacobian_det_closed_form(const HyperCoords& u) {
  check_coords(u);
  // 1 - prod tanh^2 = -expm1(sum log tanh^2), which keeps relative accuracy
  // when every tanh is close to 1. log tanh v = log(1 - e) - log1p(e) with
  // e = exp(-2v); the tiny logs stay exact where tanh itself rounds to 1.
  real log_product = 0;
  for (real v : u.u) {
    if (v == 0) return 1;
    const real e = std::exp(-2 * std::fabs(v));
    const real log_one_minus = e < 0.5L ? std::log1p(-e) : std::log(-std::expm1(-2 * std::fabs(v)));
    log_product += 2 * (log_one_minus - std::log1p(e));
  }
  return -std::expm1(log_product);
}

HyperCoords inverse_map_n3(const CubeCoords& x) {
  if (x.dimension() != 3) throw InvalidDomain("closed-form inverse exists only for n = 3");
  for (real v : x.x) {
    if (!(v >= 0) || !std::isfinite(v)) throw InvalidDomain("cube coordinates must be >= 0");
  }
  const real x1 = x.x[0] * x.x[0];
  const real x2 = x.x[1] * x.x[1];
  const real x3 = x.x[2] * x.x[2];
  const real denominator = 1 - x1 * x2 * x3;
  if (!(denominator > 0)) {
    throw SingularPoint("inverse map undefined where x_1^2 x_2^2 x_3^2 >= 1");
  }
  const std::array<real, 3> sq{x1, x2, x3};
  HyperCoords u{std::vector<real>(3)};
  for (std::size_t i = 0; i < 3; ++i) {
    const real after = sq[(i + 1) % 3];
    const real before = sq[(i + 2) % 3];
    u.u[i] = std::asinh(x.x[i] * std::sqrt((1 + after + before * after) / denominator));
  }
  return u;
}

bool gamma_region_contains(const HyperCoords& u, const BoxSpec& box) {
  check_coords(u);
  const std::size_t n = u.dimension();
  if (box.dimension() != n) throw InvalidDomain("box and coordinates differ in dimension");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(u.u[i] > 0)) return false;
    if (!(u.u[i] < std::asinh(box.edge(i) * std::cosh(u.u[next(i, n)])))) return false;
  }
  return true;
}

bool cube_region_contains(const CubeCoords& x, const BoxSpec& box) {
  if (box.dimension() != x.dimension()) {
    throw InvalidDomain("box and coordinates differ in dimension");
  }
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (!(x.x[i] > 0 && x.x[i] < box.edge(i))) return false;
  }
  return true;
}

real lu_determinant(const RealMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidDomain("determinant of a non-square matrix");
  return Eigen::PartialPivLU<RealMatrix>(m).determinant();
}

RealMatrix central_difference_jacobian(const HyperCoords& u, real h) {
  check_coords(u);
  if (!(h > 0)) throw InvalidDomain("finite-difference step must be positive");
  const std::size_t n = u.dimension();
  RealMatrix j(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t c = 0; c < n; ++c) {
    HyperCoords plus = u;
    HyperCoords minus = u;
    plus.u[c] += h;
    minus.u[c] -= h;
    const CubeCoords fp = forward_map(plus);
    const CubeCoords fm = forward_map(minus);
    for (std::size_t r = 0; r < n; ++r) {
      j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (fp.x[r] - fm.x[r]) / (2 * h);
    }
  }
  return j;
}

}  // namespace crucible
