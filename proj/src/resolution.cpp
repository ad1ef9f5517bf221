#include "bfre/resolution.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "bfre/errors.hpp"

namespace bfre {

CellSets bipolar_cell(const TNorm& t, double a_plus, double a_minus, double b) {
  const double e = eps();
  if (b <= e) {
    // b = 0: every x in the range solves the cell, so S and I coincide.
    const double up = solve_u(t, a_plus, b);
    const double um = solve_u(t, a_minus, b);
    const SetForm range = SetForm::interval(1.0 - um, up);
    return {range, range};
  }
  const bool plus = a_plus >= b - e;
  const bool minus = a_minus >= b - e;
  if (!plus && !minus) return {SetForm::empty(), SetForm::interval(0.0, 1.0)};
  if (plus && !minus) {
    const double up = solve_u(t, a_plus, b);
    return {SetForm::point(up), SetForm::interval(0.0, up)};
  }
  if (minus && !plus) {
    const double lo = 1.0 - solve_u(t, a_minus, b);
    return {SetForm::point(lo), SetForm::interval(lo, 1.0)};
  }
  const double lo = 1.0 - solve_u(t, a_minus, b);
  const double hi = solve_u(t, a_plus, b);
  if (lo > hi + e) return {SetForm::empty(), SetForm::empty()};
  return {SetForm::two_points(lo, hi), SetForm::interval(lo, hi)};
}

void rebuild_supports(ResolutionTables& t) {
  const std::size_t m = t.s_prime.size();
  const std::size_t n = t.col_interval.size();
  t.row_support.assign(m, {});
  t.col_support.assign(n, {});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!t.s_prime[i][j].is_empty()) {
        t.row_support[i].push_back(j);
        t.col_support[j].push_back(i);
      }
}

ResolutionTables build_tables(const Problem& p) {
  validate(p);
  const std::size_t m = p.rows(), n = p.cols();
  ResolutionTables t;
  t.rhs = p.b;
  t.s.assign(m, std::vector<SetForm>(n));
  t.i.assign(m, std::vector<SetForm>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto cell = bipolar_cell(p.tnorm, p.a_plus[i][j], p.a_minus[i][j], p.b[i]);
      t.s[i][j] = cell.s;
      t.i[i][j] = cell.i;
    }
  t.col_interval.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double lo = 0.0, hi = 1.0;
    bool empty = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.i[i][j].is_empty()) {
        empty = true;
        break;
      }
      lo = std::max(lo, t.i[i][j].lo());
      hi = std::min(hi, t.i[i][j].hi());
    }
    t.col_interval[j] = empty ? SetForm::empty() : SetForm::interval(lo, hi);
  }
  t.s_prime.assign(m, std::vector<SetForm>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.s_prime[i][j] = intersect(t.s[i][j], t.col_interval[j]);
  rebuild_supports(t);
  return t;
}

FeasibilityReport check_feasibility(const ResolutionTables& t) {
  for (std::size_t j = 0; j < t.cols(); ++j)
    if (t.col_interval[j].is_empty())
      return {FeasibilityReport::Reason::EmptyColumn, j};
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (t.row_support[i].empty())
      return {FeasibilityReport::Reason::UnsatisfiableRow, i};
  return {};
}

double residual(const Problem& p, const std::vector<double>& x) {
  if (x.size() != p.cols())
    throw Error(Errc::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                             " coordinates, expected " +
                                             std::to_string(p.cols()));
  for (double v : x)
    if (!(v >= 0.0 && v <= 1.0))
      throw Error(Errc::DomainError, "point leaves the unit box");
  double worst = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < p.cols(); ++j)
      lhs = std::max({lhs, p.tnorm(p.a_plus[i][j], x[j]),
                      p.tnorm(p.a_minus[i][j], 1.0 - x[j])});
    worst = std::max(worst, std::abs(lhs - p.b[i]));
  }
  return worst;
}

bool is_feasible_point(const Problem& p, const std::vector<double>& x) {
  const bool direct = residual(p, x) <= eps();
  assert(direct == satisfies_table_criterion(build_tables(p), x));
  return direct;
}

bool satisfies_table_criterion(const ResolutionTables& t, const std::vector<double>& x) {
  if (x.size() != t.cols())
    throw Error(Errc::DimensionMismatch, "point length does not match the tables");
  for (std::size_t j = 0; j < t.cols(); ++j)
    if (!t.col_interval[j].contains(x[j])) return false;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    bool hit = false;
    for (std::size_t j : t.row_support[i])
      if (t.s_prime[i][j].contains(x[j])) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace bfre
