#pragma once

#include <cstddef>
#include <vector>

#include "bfre/tnorm.hpp"

namespace bfre {

using Matrix = std::vector<std::vector<double>>;

// minimize c.x subject to, for every row i,
//   max_j max{ T(a_plus[i][j], x_j), T(a_minus[i][j], 1 - x_j) } = b[i],
// with x in [0,1]^n.
struct Problem {
  TNorm tnorm;
  Matrix a_plus;
  Matrix a_minus;
  std::vector<double> b;
  std::vector<double> c;

  std::size_t rows() const { return b.size(); }
  std::size_t cols() const { return c.size(); }
};

// Checks shapes, that every coefficient lies in [0,1] and that c >= 0.
// Throws Error(DimensionMismatch | DomainError | NegativeCost).
void validate(const Problem& p);

double objective(const std::vector<double>& c, const std::vector<double>& x);

}  // namespace bfre
