#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bfre/problem.hpp"
#include "bfre/resolution.hpp"

namespace bfre::oracle {

// Reference computations that share only the t-norm and table layer with the
// solver. They enumerate instead of searching and are meant for small inputs.

using Assignment = std::vector<std::size_t>;

// Every element of the product of the row supports whose per-column
// intersections are all non-empty. Throws Error(EnumerationCapExceeded) when
// the product exceeds `cap`.
std::vector<Assignment> all_admissible(const ResolutionTables& t, std::uint64_t cap = 1'000'000);

struct BruteForce {
  bool feasible = false;
  std::vector<double> x;
  double objective = 0.0;
  std::uint64_t admissible = 0;
};

// Minimum of c.x over the candidate points of all admissible assignments of
// the unreduced tables.
BruteForce brute_force_optimum(const Problem& p, std::uint64_t cap = 1'000'000);

struct Census {
  std::uint64_t points = 0;
  std::uint64_t feasible = 0;
  std::uint64_t box_mismatches = 0;        // direct evaluation vs. box union
  std::uint64_t criterion_mismatches = 0;  // direct evaluation vs. table criterion
  std::vector<std::vector<double>> examples;  // first few mismatching points
};

// Classifies every point of the regular grid with spacing `step` by direct
// evaluation and compares against the box decomposition and the table
// criterion. Throws Error(EnumerationCapExceeded) when the grid has more than
// `cap` points.
Census grid_census(const Problem& p, double step = 0.05, std::uint64_t cap = 20'000);

struct InstanceShape {
  std::size_t rows = 3;
  std::size_t cols = 3;
  double grid = 0.05;
  // Draw b from a hidden grid point so that the instance has a solution.
  bool planted = true;
  // Chance that a coefficient is zero, to thin out the supports.
  double zero_rate = 0.3;
};

// Coefficients and costs are drawn from the grid {0, grid, ..., 1}.
Problem random_instance(std::mt19937_64& rng, const TNorm& t, const InstanceShape& shape);

struct Agreement {
  bool agree = true;
  bool solver_feasible = false;
  bool oracle_feasible = false;
  double solver_objective = 0.0;
  double oracle_objective = 0.0;
  std::vector<std::string> mismatches;
};

// Runs solve() and the brute force side by side and checks status,
// objective (within `tol`) and that the solver's point is a solution.
Agreement cross_check(const Problem& p, double tol = 1e-9, std::uint64_t cap = 1'000'000);

}  // namespace bfre::oracle
