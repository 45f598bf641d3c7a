#pragma once

#include <vector>

#include "crucible/exact_rational.hpp"
#include "crucible/types.hpp"

namespace crucible {

// B_0 .. B_m with the B_1 = -1/2 convention.
struct BernoulliTable {
  std::vector<ExactRational> values;

  const ExactRational& operator[](std::size_t j) const { return values.at(j); }
  std::size_t size() const { return values.size(); }
};

// Solves sum_{j=0}^{m} C(m+1, j) B_j = 0 for B_m, one index at a time.
BernoulliTable bernoulli_table(int m);

// (-1)^(k-1) 2^(2k-1) B_2k / (2k)! as an exact rational.
ExactRational zeta_even_coefficient(int k);

// zeta(2k) = zeta_even_coefficient(k) * pi^(2k).
real zeta_even_closed_form(int k);

}  // namespace crucible
