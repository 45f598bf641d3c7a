#include "crucible/bernoulli.hpp"

namespace crucible {

BernoulliTable bernoulli_table(int m) {
  if (m < 0) throw InvalidDomain("Bernoulli table size must be non-negative");
  BernoulliTable table;
  table.values.reserve(static_cast<std::size_t>(m) + 1);
  table.values.emplace_back(1);
  for (int i = 1; i <= m; ++i) {
    const auto top = static_cast<unsigned>(i + 1);
    ExactRational acc;
    for (int j = 0; j < i; ++j) {
      acc += ExactRational(binomial(top, static_cast<unsigned>(j)), 1) * table.values[j];
    }
    table.values.push_back(-acc / ExactRational(BigInt(top), 1));
  }
  return table;
}

ExactRational zeta_even_coefficient(int k) {
  if (k < 1) throw InvalidOrder("even zeta closed form needs k >= 1");
  const BernoulliTable table = bernoulli_table(2 * k);
  BigInt power = BigInt(1) << (2 * k - 1);
  if (k % 2 == 0) power = -power;
  return ExactRational(std::move(power), factorial(static_cast<unsigned>(2 * k))) *
         table[static_cast<std::size_t>(2 * k)];
}

real zeta_even_closed_form(int k) {
  const real coefficient = zeta_even_coefficient(k).to_real();
  // pi^(2k) by repeated squaring of pi^2.
  real result = 1;
  real base = pi * pi;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return coefficient * result;
}

}  // namespace crucible
