#include "crucible/suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "crucible/bernoulli.hpp"
#include "crucible/hyperbolic_map.hpp"
#include "crucible/parallel.hpp"
#include "crucible/series.hpp"
#include "crucible/zeta2_pipeline.hpp"

namespace crucible {
namespace {

// Per-suite tolerances at the reference --tol.
constexpr real kSeriesTol = 1e-12L;
constexpr real kJacobianTol = 1e-12L;
constexpr real kFiniteDifferenceTol = 1e-5L;
constexpr real kRoundtripTol = 1e-10L;
constexpr real kTheoremTol = 1e-9L;
constexpr real kMomentTol = 1e-10L;
constexpr real kQmcSigmas = 3;

// Series evaluated well inside the comparison tolerances.
constexpr real kOracleSeriesTol = 1e-13L;

constexpr real kFiniteDifferenceStep = 1e-5L;

using Clock = std::chrono::steady_clock;

// Runs make_entry and stamps its wall time.
void timed(VerificationReport& report, const std::function<ReportEntry()>& make_entry) {
  const auto start = Clock::now();
  ReportEntry e = make_entry();
  e.runtime_ms = std::chrono::duration<real, std::milli>(Clock::now() - start).count();
  report.add(std::move(e));
}

std::string num(int n) { return std::to_string(n); }

// Uniform in (0, scale) from the top 53 bits of a 64-bit draw.
real uniform(std::mt19937_64& rng, real scale) {
  return (static_cast<real>(rng() >> 11) + 0.5L) * std::ldexp(real{1}, -53) * scale;
}

real factorial_real(int k) {
  real f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

VerificationReport series_suite(const SuiteConfig& c, real scale) {
  VerificationReport r;
  for (int n = 2; n <= c.n_max; ++n) {
    const std::string id = "series.n" + num(n);
    timed(r, [&] {
      const real value = zeta_series(n, kOracleSeriesTol).value;
      if (n % 2 == 0) {
        return numeric_entry(id + ".zeta_vs_closed_form", "zeta(n) series = Bernoulli closed form",
                             zeta_even_closed_form(n / 2), value, kSeriesTol * scale);
      }
      return numeric_entry(id + ".zeta_vs_odd_series", "zeta(n) series = 2^n/(2^n-1) lambda(n)",
                           zeta_from_lambda(n, kOracleSeriesTol), value, kSeriesTol * scale);
    });
    timed(r, [&] {
      const real zeta = zeta_series(n, kOracleSeriesTol).value;
      const real lambda = lambda_series(n, kOracleSeriesTol).value;
      return numeric_entry(id + ".lambda_identity", "lambda(n) = (1 - 2^-n) zeta(n)",
                           (1 - std::ldexp(real{1}, -n)) * zeta, lambda, kSeriesTol * scale);
    });
    timed(r, [&] {
      const real coarse_tol = 1e-8L;
      const SeriesResult coarse = zeta_series(n, coarse_tol);
      const SeriesResult fine = zeta_series(n, coarse_tol / 100);
      const real below = std::max<real>(0, coarse.value - fine.value);
      const real above = std::max<real>(0, fine.value - (coarse.value + coarse.tail_bound));
      // The fine lower bound may sit below the coarse one by rounding only.
      return text_entry(id + ".bracket", "zeta(n) series enclosure",
                        "refined sum inside [value, value + tail_bound]", fine.value,
                        std::max(below, above), 64 * epsilon);
    });
  }
  return r;
}

VerificationReport bernoulli_suite(const SuiteConfig&, real scale) {
  VerificationReport r;
  constexpr int kTableSize = 40;
  const BernoulliTable table = bernoulli_table(kTableSize);
  timed(r, [&] {
    return text_entry("bernoulli.b0", "Bernoulli numbers", "B_0 = 1", table[0].to_real(),
                      table[0] == ExactRational(1) ? 0 : 1, 0);
  });
  timed(r, [&] {
    return text_entry("bernoulli.b1", "Bernoulli numbers", "B_1 = -1/2", table[1].to_real(),
                      table[1] == ExactRational(-1) / ExactRational(2) ? 0 : 1, 0);
  });
  timed(r, [&] {
    int nonzero = 0;
    for (int j = 3; j <= kTableSize; j += 2) nonzero += table[j].is_zero() ? 0 : 1;
    return text_entry("bernoulli.odd_vanish", "Bernoulli numbers",
                      "B_j = 0 for odd j >= 3 up to j = 40", nonzero, nonzero, 0);
  });
  timed(r, [&] {
    int wrong = 0;
    for (int k = 1; 2 * k <= kTableSize; ++k) {
      const int sign = (k % 2 == 1 ? 1 : -1) * table[2 * k].sign();
      wrong += sign > 0 ? 0 : 1;
    }
    return text_entry("bernoulli.sign_alternation", "zeta(2k) closed form",
                      "(-1)^(k-1) B_2k > 0 for k = 1..20", wrong, wrong, 0);
  });
  for (int k = 1; k <= 10; ++k) {
    timed(r, [&] {
      const real closed = zeta_even_closed_form(k);
      const real series = zeta_series(2 * k, kOracleSeriesTol).value;
      return numeric_entry("bernoulli.closed_vs_series.k" + num(k),
                           "zeta(2k) = (-1)^(k-1) 2^(2k-1) B_2k pi^2k / (2k)!", closed, series,
                           kSeriesTol * scale * closed);
    });
  }
  return r;
}

VerificationReport cube_suite(const SuiteConfig& c, real scale) {
  VerificationReport r;
  auto points_for = [&](int n) { return c.qmc_points ? c.qmc_points : default_qmc_points(n); };
  for (int n = 2; n <= std::min(5, c.n_max); ++n) {
    timed(r, [&] {
      const QmcEstimate e = zeta_from_cube(n, points_for(n), c.qmc_seed);
      return numeric_entry("cube.zeta.n" + num(n), "zeta(n) = 2^n/(2^n-1) cube integral",
                           zeta_series(n, kOracleSeriesTol).value, e.value,
                           kQmcSigmas * scale * e.stat_error + e.clip_bias, c.qmc_seed);
    });
  }
  const std::vector<std::vector<BoxSpec>> families = {
      {BoxSpec({0.5L}), BoxSpec({1.0L}), BoxSpec({2.0L})},
      {BoxSpec({1.0L, 1.0L}), BoxSpec({2.0L, 0.5L}), BoxSpec({0.5L, 3.0L})}};
  for (const auto& boxes : families) {
    const int n = static_cast<int>(boxes.front().dimension());
    const auto start = Clock::now();
    VerificationReport part =
        invariance_check(n, boxes, points_for(n), c.qmc_seed, kQmcSigmas * scale);
    const real ms = std::chrono::duration<real, std::milli>(Clock::now() - start).count();
    for (ReportEntry e : part.entries()) {
      e.runtime_ms = ms / static_cast<real>(part.entries().size());
      r.add(std::move(e));
    }
  }
  return r;
}

VerificationReport pipeline_suite(const SuiteConfig& c, real) {
  VerificationReport r;
  const auto start = Clock::now();
  const std::vector<PipelineStep> steps = run_zeta2_pipeline(c.tol);
  const real ms = std::chrono::duration<real, std::milli>(Clock::now() - start).count();
  int index = 0;
  for (const PipelineStep& s : steps) {
    char id[32];
    std::snprintf(id, sizeof id, "pipeline.step%02d", ++index);
    const std::string anchor = "zeta(2) derivation: " + s.label;
    ReportEntry e;
    if (s.claimed) {
      e = numeric_entry(id, anchor, *s.claimed, s.computed, s.tolerance);
    } else {
      e = text_entry(id, anchor, "limit 0", s.computed, std::fabs(s.computed), s.tolerance);
    }
    e.passed = s.passed;
    if (!s.note.empty()) e.paper_anchor += " [" + s.note + "]";
    e.runtime_ms = ms / static_cast<real>(steps.size());
    r.add(std::move(e));
  }
  return r;
}

VerificationReport theorem5_suite(const SuiteConfig& c, real scale) {
  VerificationReport r;
  for (int k = 0; k <= 8; ++k) {
    timed(r, [&] {
      real worst = 0;
      for (int q = 0; q <= 5; ++q) {
        const real exact = log_power_moment(k, q).to_real();
        const QuadResult quad = integrate_finite(
            [k, q](real z) {
              return std::pow(std::log(z), static_cast<real>(k)) *
                     std::pow(z, static_cast<real>(2 * q));
            },
            EndpointSpec{0, 1, true, false}, std::fabs(exact) * 1e-13L);
        worst = std::max(worst, std::fabs(quad.value - exact) / std::fabs(exact));
      }
      return text_entry("lemma4.k" + num(k), "Lemma 4",
                        "int_0^1 ln^k(z) z^2q dz = (-1)^k k!/(2q+1)^(k+1), q = 0..5 (relative)",
                        worst, worst, kMomentTol * scale);
    });
  }
  for (int n = 2; n <= c.n_max; ++n) {
    timed(r, [&] {
      const real lhs = log_coth_power_integral(n, kOracleSeriesTol * factorial_real(n - 1)).value /
                       factorial_real(n - 1);
      return numeric_entry("theorem5.n" + num(n), "Theorem 5",
                           lambda_series(n, kOracleSeriesTol).value, lhs, kTheoremTol * scale);
    });
    timed(r, [&] {
      return numeric_entry("corollary6.n" + num(n), "Corollary 6",
                           zeta_series(n, kOracleSeriesTol).value,
                           zeta_from_log_coth(n, kOracleSeriesTol).value, kTheoremTol * scale);
    });
    if (n % 2 == 0) {
      timed(r, [&] {
        return numeric_entry("corollary6.closed_form.n" + num(n),
                             "Corollary 6 vs zeta(2k) closed form", zeta_even_closed_form(n / 2),
                             zeta_from_log_coth(n, kOracleSeriesTol).value, kTheoremTol * scale);
      });
    }
  }
  return r;
}

VerificationReport jacobian_suite(const SuiteConfig& c, real scale) {
  VerificationReport r;
  for (int n = 2; n <= 6; ++n) r.append(jacobian_check(n, 100, c.qmc_seed, scale));
  return r;
}

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::series: return "series";
    case Suite::bernoulli: return "bernoulli";
    case Suite::cube: return "cube";
    case Suite::jacobian: return "jacobian";
    case Suite::pipeline: return "pipeline";
    case Suite::theorem5: return "theorem5";
  }
  return "unknown";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : kAllSuites) {
    if (suite_name(s) == name) return s;
  }
  throw ConfigError("unknown suite '" + name +
                    "' (expected series, bernoulli, jacobian, cube, pipeline, theorem5)");
}

void validate(const SuiteConfig& c) {
  if (c.suites.empty()) throw ConfigError("no suites selected");
  if (!(c.tol > 0)) throw ConfigError("--tol must be positive");
  if (c.n_max < 2 || c.n_max > 10) throw ConfigError("--nmax must lie in [2, 10]");
  if (c.qmc_points != 0) {
    if ((c.qmc_points & (c.qmc_points - 1)) != 0) {
      throw ConfigError("--qmc-points must be a power of 2");
    }
    if (c.qmc_points < kMinQmcPoints) throw ConfigError("--qmc-points must be at least 2^10");
  }
}

VerificationReport jacobian_check(int n, int samples, std::uint64_t seed, real scale) {
  if (n < 2 || n > 8) throw ConfigError("jacobian check supports n in [2, 8]");
  if (samples < 1) throw ConfigError("jacobian check needs at least one sample");
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
  const std::string id = "jacobian.n" + num(n);
  auto draw = [&](real width) {
    HyperCoords u{std::vector<real>(static_cast<std::size_t>(n))};
    for (auto& v : u.u) v = uniform(rng, width);
    return u;
  };
  VerificationReport r;

  std::vector<HyperCoords> sample;
  for (int i = 0; i < samples; ++i) sample.push_back(draw(3));

  timed(r, [&] {
    real worst = 0;
    for (const auto& u : sample) {
      const real closed = jacobian_det_closed_form(u);
      worst = std::max(worst, std::fabs(lu_determinant(jacobian_matrix(u)) - closed) / closed);
    }
    return text_entry(id + ".det_lu", "Lemma 2 det",
                      "det A (LU) = 1 - prod tanh^2(u_i), relative", worst, worst,
                      kJacobianTol * scale, seed);
  });
  timed(r, [&] {
    real worst = 0;
    for (const auto& u : sample) {
      const real closed = jacobian_det_closed_form(u);
      const real fd = lu_determinant(central_difference_jacobian(u, kFiniteDifferenceStep));
      worst = std::max(worst, std::fabs(fd - closed) / closed);
    }
    return text_entry(id + ".det_fd", "Lemma 2 det",
                      "det of central-difference Jacobian = 1 - prod tanh^2(u_i), relative", worst,
                      worst, kFiniteDifferenceTol * scale, seed);
  });
  timed(r, [&] {
    real worst = 0;
    for (const auto& u : sample) {
      const CubeCoords x = forward_map(u);
      real p = 1;
      for (real v : x.x) p *= v * v;
      worst = std::max(worst, std::fabs((1 - p) - jacobian_det_closed_form(u)));
    }
    return text_entry(id + ".integrand", "Lemma 2 integrand (denominator printed without squares)",
                      "1 - prod x_i^2 = 1 - prod tanh^2(u_i)", worst, worst, kJacobianTol * scale,
                      seed);
  });
  timed(r, [&] {
    const int region_samples = std::max(10000, 100 * samples);
    int mismatches = 0;
    for (int i = 0; i < region_samples; ++i) {
      std::vector<real> free(static_cast<std::size_t>(n - 1));
      for (auto& a : free) a = std::exp(uniform(rng, 2 * std::log(real{4})) - std::log(real{4}));
      const BoxSpec box(free);
      const HyperCoords u = draw(3);
      if (gamma_region_contains(u, box) != cube_region_contains(forward_map(u), box)) ++mismatches;
    }
    return text_entry(id + ".region", "Lemma 2 region",
                      "u in Gamma_n(a) iff forward_map(u) in Phi_n(a)", mismatches, mismatches, 0,
                      seed);
  });
  if (n == 3) {
    timed(r, [&] {
      real worst = 0;
      for (int i = 0; i < 10000; ++i) {
        const HyperCoords u = draw(2);
        const HyperCoords back = inverse_map_n3(forward_map(u));
        for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, std::fabs(back.u[k] - u.u[k]));
      }
      return text_entry(id + ".roundtrip", "Lemma 2 inverse (n=3)",
                        "inverse_map(forward_map(u)) = u", worst, worst, kRoundtripTol * scale,
                        seed);
    });
  }
  return r;
}

VerificationReport run_suite(const SuiteConfig& config) {
  validate(config);
  const real scale = config.tol / kReferenceTolerance;
  std::vector<Suite> enabled;
  for (Suite s : kAllSuites) {
    if (config.suites.count(s)) enabled.push_back(s);
  }
  std::vector<VerificationReport> parts(enabled.size());
  parallel_for(enabled.size(), [&](std::size_t i) {
    switch (enabled[i]) {
      case Suite::series: parts[i] = series_suite(config, scale); break;
      case Suite::bernoulli: parts[i] = bernoulli_suite(config, scale); break;
      case Suite::cube: parts[i] = cube_suite(config, scale); break;
      case Suite::jacobian: parts[i] = jacobian_suite(config, scale); break;
      case Suite::pipeline: parts[i] = pipeline_suite(config, scale); break;
      case Suite::theorem5: parts[i] = theorem5_suite(config, scale); break;
    }
  });
  VerificationReport report;
  for (const auto& p : parts) report.append(p);
  return report;
}

ZetaMethod parse_zeta_method(const std::string& name) {
  static const std::map<std::string, ZetaMethod> methods = {
      {"series", ZetaMethod::series},
      {"bernoulli-even", ZetaMethod::bernoulli_even},
      {"integral", ZetaMethod::integral},
      {"cube", ZetaMethod::cube}};
  const auto it = methods.find(name);
  if (it == methods.end()) {
    throw ConfigError("unknown method '" + name + "' (expected series, bernoulli-even, integral, cube)");
  }
  return it->second;
}

ZetaValue zeta_command(int n, ZetaMethod method, real tol) {
  if (n < 2) throw InvalidOrder("zeta(n) needs n >= 2");
  if (!(tol > 0)) throw ConfigError("--tol must be positive");
  switch (method) {
    case ZetaMethod::series: {
      const SeriesResult s = zeta_series(n, tol);
      return {s.value, s.tail_bound};
    }
    case ZetaMethod::bernoulli_even: {
      if (n % 2 != 0) {
        throw MethodMismatch("bernoulli-even needs an even n, got " + std::to_string(n));
      }
      const real v = zeta_even_closed_form(n / 2);
      return {v, 16 * epsilon * v};
    }
    case ZetaMethod::integral: {
      const QuadResult q = zeta_from_log_coth(n, tol);
      return {q.value, q.error_estimate};
    }
    case ZetaMethod::cube: {
      const QmcEstimate e = zeta_from_cube(n, default_qmc_points(n));
      return {e.value, kQmcSigmas * e.stat_error + e.clip_bias};
    }
  }
  throw ConfigError("unhandled zeta method");
}

}  // namespace crucible
