#pragma once

// The hyperbolic substitution x_i = sinh(u_i) / cosh(u_{i+1}) with cyclic
// indices (u_{n+1} = u_1). It maps the region
//   0 < u_i < arcsinh(a_i cosh(u_{i+1}))
// one-to-one onto the box 0 < x_i < a_i (edge product 1) and turns the
// integrand 1 / (1 - prod x_i^2) into exactly 1: the Jacobian determinant is
// 1 - prod tanh^2(u_i), which equals 1 - prod x_i^2.

#include <Eigen/Dense>
#include <vector>

#include "crucible/types.hpp"

namespace crucible {

using RealMatrix = Eigen::Matrix<real, Eigen::Dynamic, Eigen::Dynamic>;

// Largest |u_i| accepted; sinh and cosh overflow not far beyond in double.
inline constexpr real kMaxHyperbolicArgument = 700;

struct HyperCoords {
  std::vector<real> u;
  std::size_t dimension() const { return u.size(); }
};

struct CubeCoords {
  std::vector<real> x;
  std::size_t dimension() const { return x.size(); }
};

// Box edges a_1..a_n where the caller chooses a_1..a_{n-1} and
// a_n = 1 / (a_1 ... a_{n-1}).
class BoxSpec {
 public:
  explicit BoxSpec(std::vector<real> free_edges);
  static BoxSpec unit(std::size_t n);

  std::size_t dimension() const { return edges_.size(); }
  real edge(std::size_t i) const { return edges_.at(i); }
  const std::vector<real>& edges() const { return edges_; }
  std::vector<real> free_edges() const { return {edges_.begin(), edges_.end() - 1}; }
  real volume() const;

 private:
  std::vector<real> edges_;
};

CubeCoords forward_map(const HyperCoords& u);

// Row i holds d x_i / d u_i on the diagonal and d x_i / d u_{i+1} in the
// next column, wrapping to column 0 on the last row.
RealMatrix jacobian_matrix(const HyperCoords& u);

// 1 - prod tanh^2(u_i).
real jacobian_det_closed_form(const HyperCoords& u);

// Inverse for n = 3:
//   u_i = arcsinh(x_i sqrt((1 + x_{i+1}^2 + x_{i-1}^2 x_{i+1}^2) / (1 - x_1^2 x_2^2 x_3^2))).
HyperCoords inverse_map_n3(const CubeCoords& x);

bool gamma_region_contains(const HyperCoords& u, const BoxSpec& box);
bool cube_region_contains(const CubeCoords& x, const BoxSpec& box);

// Dense partial-pivoting LU determinant; independent of the closed form.
real lu_determinant(const RealMatrix& m);

// Central-difference Jacobian of forward_map with step h.
RealMatrix central_difference_jacobian(const HyperCoords& u, real h);

}  // namespace crucible
