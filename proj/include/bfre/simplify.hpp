#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bfre/resolution.hpp"

namespace bfre {

enum class Mode {
  // Reductions that leave the solution set unchanged.
  FeasibilityPreserving,
  // Additionally drops rows and columns that cannot change the optimum.
  OptimalityPreserving,
};

enum class Rule {
  ZeroRhsRow,        // b_i = 0
  SingletonColumn,   // I_j = {k}
  DominatedRow,      // another row's S' cells are contained in this row's
  ForcedAssignment,  // row with a single usable cell {k}
  TwoPointRow,       // row holding a two-point S' cell
  LowerBoundColumn,  // L_j lies in every non-empty S' cell of column j
  FreeColumn,        // column no row can use
  DominatedColumn,   // column covered by another column
};

std::string_view rule_name(Rule r);

// Column `removed` was dropped because column `by` can serve every row it
// serves. Part 'a': `by` sits at its lower bound. Part 'b': `by` sits at its
// upper bound at a smaller cost increase.
struct ColumnCover {
  std::size_t removed;
  std::size_t by;
  char part;
};

// One reduction. All indices refer to the original problem (0-based).
struct LedgerStep {
  Rule rule;
  IndexList removed_rows;
  IndexList removed_cols;
  std::vector<std::pair<std::size_t, double>> fixed;
  std::optional<std::size_t> witness;  // dominating row or forcing row
  std::vector<ColumnCover> covers;
  std::uint64_t bound_before = 0;
  std::uint64_t bound_after = 0;
};

struct Ledger {
  std::uint64_t initial_bound = 1;
  std::vector<LedgerStep> steps;

  // initial_bound followed by every bound_after that differs from the
  // previous entry.
  std::vector<std::uint64_t> bound_chain() const;
};

// Human readable, 1-based, e.g.
// "singleton-column: fixed x10=0.6, removed column 10 and rows {7,9}, |E| bound 864"
std::string describe(const LedgerStep& step);

struct ReducedProblem {
  ResolutionTables tables;  // surviving rows and columns only
  std::vector<double> costs;
  IndexList row_map;  // reduced row -> original row
  IndexList col_map;  // reduced column -> original column
  std::map<std::size_t, double> fixed;  // original column -> value
  std::size_t original_cols = 0;
  // Set once every row holding a two-point cell is gone; the search may then
  // restrict itself to the reduced branching domain.
  bool two_point_free = false;
  // A surviving row that lost every usable column, which proves the
  // problem has no solution.
  std::optional<std::size_t> dead_row;

  std::vector<double> lift(const std::vector<double>& reduced_x) const;
};

// Mutable view of a problem under reduction. Rows and columns are only ever
// switched off; cell sets and the column ranges I_j stay as computed for the
// full problem.
class ReductionState {
 public:
  ReductionState(ResolutionTables tables, std::vector<double> costs);

  const ResolutionTables& tables() const { return tables_; }
  const std::vector<double>& costs() const { return costs_; }
  bool row_alive(std::size_t i) const { return row_alive_[i]; }
  bool col_alive(std::size_t j) const { return col_alive_[j]; }
  IndexList alive_rows() const;
  IndexList alive_cols() const;
  IndexList row_support(std::size_t i) const;
  IndexList col_support(std::size_t j) const;
  const std::map<std::size_t, double>& fixed() const { return fixed_; }
  std::optional<std::size_t> dead_row() const;

  // Product of |row_support(i)| over surviving rows, saturating.
  std::uint64_t bound() const;

  void remove_row(std::size_t i);
  void fix_column(std::size_t j, double value);

  ReducedProblem extract(bool two_point_free) const;

 private:
  ResolutionTables tables_;
  std::vector<double> costs_;
  std::vector<bool> row_alive_;
  std::vector<bool> col_alive_;
  std::map<std::size_t, double> fixed_;
};

// One pass of each rule over the current state, in ascending index order.
// Every candidate is checked against the state as it is when the scan reaches
// it. Each pass returns the steps it recorded.
std::vector<LedgerStep> apply_zero_rhs_rows(ReductionState& s);
std::vector<LedgerStep> apply_singleton_columns(ReductionState& s);
std::vector<LedgerStep> apply_dominated_rows(ReductionState& s);
std::vector<LedgerStep> apply_forced_assignments(ReductionState& s);
std::vector<LedgerStep> apply_two_point_rows(ReductionState& s);
std::vector<LedgerStep> apply_lower_bound_columns(ReductionState& s);
std::vector<LedgerStep> apply_free_columns(ReductionState& s);
// Needs every surviving non-empty cell to be a single point; throws
// Error(PreconditionViolated) otherwise. Records one step for the pass.
std::vector<LedgerStep> apply_dominated_columns(ReductionState& s);

struct SimplifyOptions {
  Mode mode = Mode::OptimalityPreserving;
  // By default the rules run once each, in order. When set, the whole sweep
  // repeats until it changes nothing.
  bool repeat_until_stable = false;
};

struct SimplifyResult {
  ReducedProblem reduced;
  Ledger ledger;
};

// Rule order: zero-rhs rows, singleton columns, dominated rows, then for
// OptimalityPreserving: forced assignments, two-point rows, lower-bound
// columns, free columns, dominated columns. Requires tables that pass
// check_feasibility.
SimplifyResult simplify(const ResolutionTables& tables, const std::vector<double>& costs,
                        SimplifyOptions options = {});

}  // namespace bfre
