#pragma once

// Numerical reproduction of the hyperbolic-substitution evaluation of
// zeta(2) and of the single-integral formula for zeta(n).
//
// After the substitution the two-dimensional integral I_2(a) becomes the area
// of the region 0 < v < arcsinh(cosh(u)/a) minus the part below
// arcosh(sinh(u)/a):
//   I_2(a) = int_0^{arcsinh a} arcsinh(cosh u / a) du
//          + int_{arcsinh a}^inf [arcsinh(cosh u / a) - arcosh(sinh u / a)] du,
// which is pi^2/8 for every a > 0.

#include <optional>
#include <string>
#include <vector>

#include "crucible/quadrature.hpp"
#include "crucible/types.hpp"

namespace crucible {

// arcsinh and arcosh through their logarithmic forms, switched to
// ln(2x) expansions for large arguments.
real asinh_log(real x);
real acosh_log(real x);

// arcsinh(cosh(u)/a) - arcosh(sinh(u)/a) for u >= arcsinh(a), evaluated as the
// log of a ratio rescaled by e^-u. offset = u - arcsinh(a) is taken exactly.
real i2_second_integrand(real a, real offset);

QuadResult i2_first_piece(real a, real tol);
QuadResult i2_second_piece(real a, real tol);
QuadResult i2_two_piece(real a, real tol);

// arcsinh(a) * arcsinh(sqrt(1/a^2 + 1)): the rectangle under the increasing
// first-piece integrand's right endpoint value.
real first_piece_rectangle_bound(real a);

// int_0^inf ln^(n-1)(coth x) dx via z = tanh x:
// int_0^1 (-ln z)^(n-1) / (1 - z^2) dz.
QuadResult log_coth_power_integral(int n, real tol);

// x ln(coth x), the integration-by-parts boundary term.
real log_coth_boundary_term(real x);

// int_0^inf 2x / sinh(2x) dx. Also integrates (1/2) int_0^inf u / sinh(u) du
// and throws NonConvergence if the two disagree by more than 1e-12.
QuadResult x_over_sinh_integral(real tol);
QuadResult half_u_over_sinh_integral(real tol);

// F(alpha) = (1/2) int_0^inf arctanh(alpha tanh x) / sinh x dx, alpha in [0, 1].
QuadResult feynman_F(real alpha, real tol);

// f(alpha) = F'(alpha) = pi / (4 sqrt(1 - alpha^2)), alpha in [0, 1).
real feynman_f(real alpha);

// int_0^1 f(alpha) d alpha, singular at alpha = 1.
QuadResult feynman_f_integral(real tol);

// int_0^inf du / (1 + u^2) = arctan(inf) - arctan(0) = pi/2.
QuadResult arctan_closing_integral(real tol);

// zeta(n) = 2^n / ((2^n - 1) (n-1)!) int_0^inf ln^(n-1)(coth x) dx; the
// error estimate is scaled by the same factor. tol is absolute on zeta(n).
QuadResult zeta_from_log_coth(int n, real tol);

struct PipelineStep {
  std::string label;
  std::optional<real> claimed;  // empty: the claim is a limit equal to 0
  real computed = 0;
  real tolerance = 0;
  bool passed = false;
  std::string note;
};

// Every stage of the zeta(2) derivation in order, each compared with the
// value the derivation asserts. Failures (including numerical errors) become
// failed steps rather than exceptions.
std::vector<PipelineStep> run_zeta2_pipeline(real tol);

}  // namespace crucible
