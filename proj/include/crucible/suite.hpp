#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "crucible/cube_integrals.hpp"
#include "crucible/report.hpp"
#include "crucible/types.hpp"

namespace crucible {

enum class Suite { series, bernoulli, cube, jacobian, pipeline, theorem5 };

// Fixed report order.
inline constexpr Suite kAllSuites[] = {Suite::series,   Suite::bernoulli, Suite::cube,
                                       Suite::jacobian, Suite::pipeline,  Suite::theorem5};

std::string suite_name(Suite s);
Suite parse_suite(const std::string& name);  // throws ConfigError

// Reference tolerance; --tol scales every per-suite default by tol / this.
inline constexpr real kReferenceTolerance = 1e-8L;

struct SuiteConfig {
  std::set<Suite> suites{std::begin(kAllSuites), std::end(kAllSuites)};
  real tol = kReferenceTolerance;
  std::uint64_t qmc_points = 0;  // 0: per-dimension default
  std::uint64_t qmc_seed = kDefaultQmcSeed;
  int n_max = 10;
};

void validate(const SuiteConfig& config);  // throws ConfigError

VerificationReport run_suite(const SuiteConfig& config);

// Per-suite pieces, exposed for the focused CLI commands and tests.
VerificationReport jacobian_check(int n, int samples, std::uint64_t seed, real scale = 1);

enum class ZetaMethod { series, bernoulli_even, integral, cube };
ZetaMethod parse_zeta_method(const std::string& name);  // throws ConfigError

struct ZetaValue {
  real value = 0;
  real error_bound = 0;
};

// Throws MethodMismatch for bernoulli-even with odd n.
ZetaValue zeta_command(int n, ZetaMethod method, real tol);

}  // namespace crucible
