#include "bfre/problem.hpp"

#include <cmath>
#include <string>

#include "bfre/errors.hpp"

namespace bfre {

namespace {

void check_matrix(const Matrix& a, std::size_t m, std::size_t n, const char* name) {
  if (a.size() != m)
    throw Error(Errc::DimensionMismatch,
                std::string(name) + " has " + std::to_string(a.size()) +
                    " rows, expected " + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n)
      throw Error(Errc::DimensionMismatch,
                  std::string(name) + " row " + std::to_string(i + 1) + " has " +
                      std::to_string(a[i].size()) + " entries, expected " +
                      std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (!(a[i][j] >= 0.0 && a[i][j] <= 1.0))
        throw Error(Errc::DomainError, std::string(name) + "[" + std::to_string(i + 1) +
                                           "][" + std::to_string(j + 1) +
                                           "] out of [0,1]");
  }
}

}  // namespace

void validate(const Problem& p) {
  const std::size_t m = p.rows(), n = p.cols();
  if (m == 0 || n == 0)
    throw Error(Errc::DimensionMismatch, "problem needs at least one row and column");
  check_matrix(p.a_plus, m, n, "a_plus");
  check_matrix(p.a_minus, m, n, "a_minus");
  for (std::size_t i = 0; i < m; ++i)
    if (!(p.b[i] >= 0.0 && p.b[i] <= 1.0))
      throw Error(Errc::DomainError, "b[" + std::to_string(i + 1) + "] out of [0,1]");
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(p.c[j]))
      throw Error(Errc::DomainError, "c[" + std::to_string(j + 1) + "] is not finite");
    if (p.c[j] < 0.0)
      throw Error(Errc::NegativeCost, "c[" + std::to_string(j + 1) + "] is negative");
  }
}

double objective(const std::vector<double>& c, const std::vector<double>& x) {
  double z = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) z += c[j] * x[j];
  return z;
}

}  // namespace bfre
