#pragma once

// One-dimensional quadrature built on the tanh-sinh (double-exponential)
// transform. Nodes cluster doubly-exponentially at both endpoints, so
// integrable endpoint singularities such as powers of ln(z) at z -> 0+
// converge without integrand-specific treatment.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "crucible/types.hpp"

namespace crucible {

struct QuadResult {
  real value = 0;
  real error_estimate = 0;  // absolute, >= 0
  std::size_t evaluations = 0;
  int levels = 0;
};

// Interval description for integrate_finite. A flagged endpoint may carry an
// integrable singularity: non-finite samples next to it are dropped when their
// weighted contribution is provably negligible. At an unflagged endpoint a
// non-finite sample is an error.
struct EndpointSpec {
  real lower = 0;
  real upper = 1;
  bool lower_singular = true;
  bool upper_singular = true;
};

// Sample point handed to endpoint-aware integrands. from_lower = x - lower and
// from_upper = upper - x; the one measured from the nearer endpoint is exact,
// which lets the integrand form differences like 1 - x near x = 1 without
// cancellation.
struct Abscissa {
  real x;
  real from_lower;
  real from_upper;
};

using Integrand = std::function<real(real)>;
using EndpointIntegrand = std::function<real(const Abscissa&)>;

// Bound on the tail integral of |f| over (T, infinity) as a function of T.
using TailBound = std::function<real(real)>;

struct QuadOptions {
  int min_level = 3;
  int max_level = 12;
};

inline constexpr int kMaxQuadLevel = 12;
inline constexpr real kMaxTruncation = 750;

QuadResult integrate_finite(const Integrand& f, const EndpointSpec& spec,
                            real tol, const QuadOptions& options = {});
QuadResult integrate_finite(const EndpointIntegrand& f,
                            const EndpointSpec& spec, real tol,
                            const QuadOptions& options = {});

// Integral over (0, infinity). The range is truncated at the first T in
// 1, 2, 4, ..., 750 whose tail is below tol/2, certified either by the
// supplied tail bound or by an exponential-decay fit of f beyond T. If no
// such T exists the tail (1, infinity) is folded onto (0, 1] with x = 1/s.
QuadResult integrate_semi_infinite(const Integrand& f, real tol,
                                   const std::optional<TailBound>& tail_bound = {},
                                   const QuadOptions& options = {});

struct LevelEstimate {
  int level;
  real value;
  real difference;  // |value - previous level value|; infinity at level 0
  std::size_t evaluations;
};

// Every refinement level up to max_level, without a stopping test.
std::vector<LevelEstimate> refinement_history(const Integrand& f,
                                              const EndpointSpec& spec,
                                              int max_level);

// Number of tanh-sinh nodes (both halves plus centre) added at a level.
std::size_t nodes_at_level(int level);

}  // namespace crucible
