#include "crucible/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <sstream>

namespace crucible {
namespace {

// Standardized node on [-1, 1] for t > 0: the abscissae are +-(1 - gap).
struct Node {
  real gap;
  real weight;
};

// Smallest endpoint gap kept in the tables; beyond it the weights are far
// below anything representable in a sum of order one.
constexpr real kMinGap = std::numeric_limits<real>::min();

Node make_node(real t) {
  const real u = pi / 2 * std::sinh(t);
  const real e = std::exp(-2 * u);
  const real gap = 2 * e / (1 + e);
  const real weight = pi / 2 * std::cosh(t) * 4 * e / ((1 + e) * (1 + e));
  return {gap, weight};
}

// Level 0 holds t = 1, 2, 3, ...; level l >= 1 holds the odd multiples of
// 2^-l. The centre t = 0 is handled separately.
std::vector<Node> build_level(int level) {
  std::vector<Node> nodes;
  const real h = std::ldexp(real{1}, -level);
  const long step = level == 0 ? 1 : 2;
  for (long j = 1;; j += step) {
    const Node n = make_node(static_cast<real>(j) * h);
    if (!(n.gap >= kMinGap) || n.weight == 0) break;
    nodes.push_back(n);
  }
  return nodes;
}

const std::vector<Node>& level_nodes(int level) {
  static std::array<std::once_flag, kMaxQuadLevel + 1> once;
  static std::array<std::vector<Node>, kMaxQuadLevel + 1> tables;
  std::call_once(once[level], [level] { tables[level] = build_level(level); });
  return tables[level];
}

void check_tolerance(real tol) {
  if (!(tol > 0)) throw InvalidDomain("quadrature tolerance must be positive");
}

void check_options(const QuadOptions& options) {
  if (options.min_level < 1 || options.max_level > kMaxQuadLevel ||
      options.min_level > options.max_level) {
    throw InvalidDomain("quadrature level bounds out of range");
  }
}

class Sampler {
 public:
  Sampler(const EndpointIntegrand& f, const EndpointSpec& spec, real tol)
      : f_(f), spec_(spec), half_(0.5L * (spec.upper - spec.lower)), tol_(tol) {}

  real half() const { return half_; }
  std::size_t evaluations() const { return evaluations_; }

  real centre() {
    const real mid = spec_.lower + half_;
    const real v = eval({mid, half_, half_});
    if (!std::isfinite(v)) {
      throw NonConvergence("integrand is not finite at the interval midpoint");
    }
    return v;
  }

  // Sum of both abscissae for a node; step is the level spacing h and is
  // only used to weigh the drop rule for non-finite samples.
  real pair(const Node& n, real h, real& abs_sum) {
    const real d = half_ * n.gap;
    const real left = side(d, true, n.weight, h);
    const real right = side(d, false, n.weight, h);
    abs_sum += n.weight * (std::fabs(left) + std::fabs(right));
    return left + right;
  }

 private:
  Abscissa at(real d, bool lower_side) const {
    const real width = spec_.upper - spec_.lower;
    if (lower_side) return {spec_.lower + d, d, width - d};
    return {spec_.upper - d, width - d, d};
  }

  real eval(const Abscissa& p) {
    ++evaluations_;
    return f_(p);
  }

  real side(real d, bool lower_side, real weight, real h) {
    const real v = eval(at(d, lower_side));
    if (std::isfinite(v)) return v;
    const bool singular = lower_side ? spec_.lower_singular : spec_.upper_singular;
    if (!singular) {
      throw InvalidDomain("integrand is not finite next to a regular endpoint");
    }
    // An integrable singularity grows slower than 1/gap, so |f| at this node
    // is at most |f(d')| * d'/d for a finite sample further inward at d'.
    real inner = d;
    for (int i = 0; i < 64; ++i) {
      inner *= 2;
      if (inner >= half_) break;
      const real w = eval(at(inner, lower_side));
      if (std::isfinite(w)) {
        const real bound = std::fabs(w) * inner / d;
        if (h * half_ * weight * bound < tol_ / 100) return 0;
        break;
      }
    }
    std::ostringstream msg;
    msg << "integrand is not finite at distance " << static_cast<double>(d)
        << " from an endpoint and the sample cannot be neglected";
    throw NonConvergence(msg.str());
  }

  const EndpointIntegrand& f_;
  const EndpointSpec& spec_;
  real half_;
  real tol_;
  std::size_t evaluations_ = 0;
};

struct Refinement {
  real sum = 0;      // centre + weighted node sums, before scaling by h*half
  real abs_sum = 0;  // same with |f|, for the roundoff floor
};

// Adds the nodes of one level into the running sums.
void add_level(Sampler& s, int level, Refinement& r) {
  const real h = std::ldexp(real{1}, -level);
  for (const Node& n : level_nodes(level)) r.sum += n.weight * s.pair(n, h, r.abs_sum);
}

void check_spec(const EndpointSpec& spec) {
  if (!std::isfinite(spec.lower) || !std::isfinite(spec.upper)) {
    throw InvalidDomain("integrate_finite needs finite bounds");
  }
  if (!(spec.lower < spec.upper)) {
    throw InvalidDomain("integration bounds out of order");
  }
}

EndpointIntegrand lift(const Integrand& f) {
  return [&f](const Abscissa& p) { return f(p.x); };
}

// Bound on the tail of |f| beyond t from an exponential fit through samples
// at t, t+1, t+2, t+3. Empty when the samples do not decay geometrically.
std::optional<real> exponential_tail_estimate(const Integrand& f, real t) {
  std::array<real, 4> v{};
  for (int k = 0; k < 4; ++k) {
    v[k] = std::fabs(f(t + k));
    if (!std::isfinite(v[k])) return std::nullopt;
  }
  if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0) return real{0};
  real rho = 0;
  for (int k = 0; k < 3; ++k) {
    if (v[k] == 0) return std::nullopt;
    rho = std::max(rho, v[k + 1] / v[k]);
  }
  if (!(rho < 1)) return std::nullopt;
  if (rho == 0) return real{0};
  const real rate = -std::log(rho);
  return 4 * v[0] / rate;
}

}  // namespace

std::size_t nodes_at_level(int level) {
  if (level < 0 || level > kMaxQuadLevel) return 0;
  return 2 * level_nodes(level).size() + (level == 0 ? 1 : 0);
}

QuadResult integrate_finite(const EndpointIntegrand& f, const EndpointSpec& spec,
                            real tol, const QuadOptions& options) {
  check_spec(spec);
  check_tolerance(tol);
  check_options(options);

  Sampler sampler(f, spec, tol);
  Refinement r;
  r.sum = pi / 2 * sampler.centre();
  r.abs_sum = std::fabs(r.sum);
  add_level(sampler, 0, r);
  real previous = sampler.half() * r.sum;

  real difference = std::numeric_limits<real>::infinity();
  for (int level = 1; level <= options.max_level; ++level) {
    add_level(sampler, level, r);
    const real h = std::ldexp(real{1}, -level);
    const real value = h * sampler.half() * r.sum;
    difference = std::fabs(value - previous);
    previous = value;
    const real floor = 64 * epsilon * h * sampler.half() * r.abs_sum;
    if (level >= options.min_level && (difference <= tol || difference <= floor)) {
      return {value, difference, sampler.evaluations(), level};
    }
  }
  std::ostringstream msg;
  msg << "tanh-sinh quadrature did not converge: error estimate "
      << static_cast<double>(difference) << " > tolerance "
      << static_cast<double>(tol) << " after level " << options.max_level;
  throw NonConvergence(msg.str());
}

QuadResult integrate_finite(const Integrand& f, const EndpointSpec& spec, real tol,
                            const QuadOptions& options) {
  return integrate_finite(lift(f), spec, tol, options);
}

QuadResult integrate_semi_infinite(const Integrand& f, real tol,
                                   const std::optional<TailBound>& tail_bound,
                                   const QuadOptions& options) {
  check_tolerance(tol);

  for (real t = 1;; t = std::min(2 * t, kMaxTruncation)) {
    std::optional<real> tail;
    if (tail_bound) {
      tail = (*tail_bound)(t);
    } else {
      tail = exponential_tail_estimate(f, t);
    }
    if (tail && *tail >= 0 && *tail < tol / 2) {
      QuadResult head = integrate_finite(f, EndpointSpec{0, t, true, false}, tol / 2, options);
      head.error_estimate += *tail;
      return head;
    }
    if (t >= kMaxTruncation) break;
  }

  // Algebraic tail: integral over (1, inf) of f(x) equals integral over
  // (0, 1) of f(1/s)/s^2.
  QuadResult head = integrate_finite(f, EndpointSpec{0, 1, true, false}, tol / 2, options);
  const Integrand folded = [&f](real s) {
    const real x = 1 / s;
    return f(x) * x * x;
  };
  QuadResult tail;
  try {
    tail = integrate_finite(folded, EndpointSpec{0, 1, true, false}, tol / 2, options);
  } catch (const NumericalError& e) {
    throw TailUnbounded(std::string("tail beyond the truncation cap could not be bounded: ") +
                        e.what());
  }
  return {head.value + tail.value, head.error_estimate + tail.error_estimate,
          head.evaluations + tail.evaluations, std::max(head.levels, tail.levels)};
}

std::vector<LevelEstimate> refinement_history(const Integrand& f, const EndpointSpec& spec,
                                              int max_level) {
  check_spec(spec);
  if (max_level < 0 || max_level > kMaxQuadLevel) {
    throw InvalidDomain("refinement level out of range");
  }
  const EndpointIntegrand lifted = lift(f);
  Sampler sampler(lifted, spec, std::numeric_limits<real>::max());
  Refinement r;
  r.sum = pi / 2 * sampler.centre();
  add_level(sampler, 0, r);
  std::vector<LevelEstimate> history;
  real previous = sampler.half() * r.sum;
  history.push_back({0, previous, std::numeric_limits<real>::infinity(), sampler.evaluations()});
  for (int level = 1; level <= max_level; ++level) {
    add_level(sampler, level, r);
    const real value = std::ldexp(real{1}, -level) * sampler.half() * r.sum;
    history.push_back({level, value, std::fabs(value - previous), sampler.evaluations()});
    previous = value;
  }
  return history;
}

}  // namespace crucible
