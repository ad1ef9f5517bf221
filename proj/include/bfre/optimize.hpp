#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfre/problem.hpp"
#include "bfre/resolution.hpp"
#include "bfre/simplify.hpp"

namespace bfre {

// e(i) = column chosen to satisfy row i; a prefix covers rows 0..size()-1.
using AssignmentFunction = std::vector<std::size_t>;

// Columns row `prefix.size()` may take next. A column qualifies when it is in
// the row's support and either unused so far or compatible with the running
// intersection of the cells already assigned to it. With `restrict_to_reuse`,
// if some qualifying column is already used, only the smallest such column is
// offered. An empty result means the prefix cannot be extended.
IndexList next_columns(const AssignmentFunction& prefix, const ResolutionTables& t,
                       bool restrict_to_reuse);

// Every column's chosen cells have a non-empty common intersection.
bool is_admissible(const AssignmentFunction& e, const ResolutionTables& t);

// Per column: the intersection of the cells assigned to it, or I_j if the
// column is unused. Throws Error(NotAdmissible).
std::vector<SetForm> feasible_box(const AssignmentFunction& e, const ResolutionTables& t);

// The cheapest point of feasible_box: its smallest element in every column.
std::vector<double> candidate_point(const AssignmentFunction& e, const ResolutionTables& t);

struct TraceEntry {
  enum class Action { Expand, Prune, Incumbent, DeadEnd };
  std::size_t node = 0;
  AssignmentFunction picks;
  std::vector<double> x;
  double objective = 0.0;
  Action action = Action::Expand;
};

std::string to_string(TraceEntry::Action a);

struct SearchOptions {
  // Branch only over the reduced domain of next_columns; valid once no row
  // holds a two-point or interval cell.
  bool restrict_to_reuse = true;
  std::uint64_t node_cap = 10'000'000;
  bool record_trace = false;
};

struct SearchStats {
  std::uint64_t nodes_created = 0;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t nodes_pruned = 0;
  std::uint64_t complete_candidates = 0;
};

struct SearchResult {
  std::optional<AssignmentFunction> best;
  std::vector<double> x;  // candidate point of `best`
  double objective = 0.0;
  std::vector<TraceEntry> trace;
  SearchStats stats;
};

// Branch and bound over assignment prefixes. A node's bound is the cost of
// its candidate point, which never decreases along a branch. After a node is
// expanded the search continues with its cheapest child; once a dive ends it
// jumps to the cheapest open node anywhere in the tree. Ties go to the deeper
// node, then to the lexicographically smaller assignment. A node is pruned
// when its cost is not below the incumbent. Throws Error(SearchCapExceeded).
SearchResult branch_and_bound(const ResolutionTables& t, const std::vector<double>& costs,
                              const SearchOptions& options = {});

enum class Status { Optimal, Infeasible };

struct Infeasibility {
  enum class Reason { EmptyColumn, UnsatisfiableRow, ExhaustedSearch };
  Reason reason;
  std::size_t index = 0;  // offending column or row, 0-based
};

std::string to_string(Infeasibility::Reason r);

struct SolveOptions {
  Mode mode = Mode::OptimalityPreserving;
  bool repeat_until_stable = false;
  std::uint64_t node_cap = 10'000'000;
  bool record_trace = false;
};

struct Solution {
  Status status = Status::Infeasible;
  std::optional<Infeasibility> why;
  std::vector<double> x;
  double objective = 0.0;
  ResolutionTables tables;
  Ledger ledger;
  ReducedProblem reduced;
  SearchResult search;
  // Set when the reduced search result did not verify and the solver fell
  // back to a search over the feasibility-preserving reduction.
  bool used_fallback = false;
};

Solution solve(const Problem& p, const SolveOptions& options = {});

// The solution set as a union of boxes, one per admissible function of the
// feasibility-preserving reduction, lifted to the original columns.
struct Decomposition {
  std::vector<std::vector<SetForm>> boxes;
  std::vector<AssignmentFunction> picks;  // reduced row -> original column
  IndexList rows;  // original index of each reduced row
  bool feasible_conditions = false;
};

// Throws Error(EnumerationCapExceeded) when the product of the reduced row
// supports exceeds `cap`.
Decomposition enumerate_feasible_decomposition(const Problem& p, std::uint64_t cap = 1'000'000);

}  // namespace bfre
