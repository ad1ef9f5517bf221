#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bfre/problem.hpp"
#include "bfre/set_form.hpp"
#include "bfre/tnorm.hpp"

namespace bfre {

using SetTable = std::vector<std::vector<SetForm>>;
using IndexList = std::vector<std::size_t>;

// Solution set S and feasible range I of a single cell
//   max{ T(a_plus, x), T(a_minus, 1 - x) } = b   (S), resp.  <= b   (I).
struct CellSets {
  SetForm s;
  SetForm i;
};

CellSets bipolar_cell(const TNorm& t, double a_plus, double a_minus, double b);

// All per-cell and per-column sets of a problem. Indices are 0-based.
struct ResolutionTables {
  std::vector<double> rhs;  // b
  SetTable s;               // S_ij
  SetTable i;               // I_ij
  std::vector<SetForm> col_interval;  // I_j, the intersection of column j of I
  SetTable s_prime;         // S_ij restricted to I_j
  std::vector<IndexList> row_support;  // columns j with S'_ij non-empty
  std::vector<IndexList> col_support;  // rows i with S'_ij non-empty

  std::size_t rows() const { return rhs.size(); }
  std::size_t cols() const { return col_interval.size(); }
  double lower(std::size_t j) const { return col_interval[j].lo(); }
  double upper(std::size_t j) const { return col_interval[j].hi(); }
};

ResolutionTables build_tables(const Problem& p);
void rebuild_supports(ResolutionTables& t);

// Necessary conditions for a non-empty solution set: every column range I_j
// is non-empty and every row has a column with a non-empty S'_ij. The first
// failure (columns checked first, lowest index) is reported.
struct FeasibilityReport {
  enum class Reason { None, EmptyColumn, UnsatisfiableRow };
  Reason reason = Reason::None;
  std::size_t index = 0;
  bool ok() const { return reason == Reason::None; }
};

FeasibilityReport check_feasibility(const ResolutionTables& t);

// Evaluates the equations directly. Throws Error(DomainError) if x leaves the
// unit box and Error(DimensionMismatch) on a length mismatch.
bool is_feasible_point(const Problem& p, const std::vector<double>& x);

// Membership through the tables: x_j in I_j for all j and every row has a
// column with x_j in S'_ij. Equivalent to is_feasible_point.
bool satisfies_table_criterion(const ResolutionTables& t, const std::vector<double>& x);

// Largest left-hand side deviation max_i |lhs_i(x) - b_i|.
double residual(const Problem& p, const std::vector<double>& x);

}  // namespace bfre
