#include "bfre/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bfre/errors.hpp"
#include "bfre/optimize.hpp"

namespace bfre::oracle {

namespace {

bool columns_meet(const Assignment& e, const ResolutionTables& t) {
  for (std::size_t j = 0; j < t.cols(); ++j) {
    std::optional<SetForm> acc;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == j) acc = acc ? intersect(*acc, t.s_prime[i][j]) : t.s_prime[i][j];
    if (acc && acc->is_empty()) return false;
  }
  return true;
}

std::vector<double> point_of(const Assignment& e, const ResolutionTables& t) {
  std::vector<double> x(t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) {
    std::optional<SetForm> acc;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == j) acc = acc ? intersect(*acc, t.s_prime[i][j]) : t.s_prime[i][j];
    x[j] = acc ? acc->lo() : t.lower(j);
  }
  return x;
}

bool solves(const Problem& p, const std::vector<double>& x) {
  for (std::size_t i = 0; i < p.rows(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      lhs = std::max(lhs, p.tnorm(p.a_plus[i][j], x[j]));
      lhs = std::max(lhs, p.tnorm(p.a_minus[i][j], 1.0 - x[j]));
    }
    if (std::abs(lhs - p.b[i]) > eps()) return false;
  }
  return true;
}

}  // namespace

std::vector<Assignment> all_admissible(const ResolutionTables& t, std::uint64_t cap) {
  for (const auto& sup : t.row_support)
    if (sup.empty()) return {};
  std::uint64_t total = 1;
  for (const auto& sup : t.row_support) {
    if (total > cap / sup.size()) {
      std::uint64_t bound = 1;
      for (const auto& s : t.row_support)
        bound = bound > std::numeric_limits<std::uint64_t>::max() / s.size()
                    ? std::numeric_limits<std::uint64_t>::max()
                    : bound * s.size();
      throw Error(Errc::EnumerationCapExceeded, "assignment bound " + std::to_string(bound) +
                                                    " exceeds the cap " + std::to_string(cap));
    }
    total *= sup.size();
  }
  std::vector<Assignment> out;
  std::vector<std::size_t> digit(t.rows(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    Assignment e(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) e[i] = t.row_support[i][digit[i]];
    if (columns_meet(e, t)) out.push_back(std::move(e));
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (++digit[i] < t.row_support[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

BruteForce brute_force_optimum(const Problem& p, std::uint64_t cap) {
  BruteForce out;
  const ResolutionTables t = build_tables(p);
  for (const auto& ij : t.col_interval)
    if (ij.is_empty()) return out;
  for (const auto& e : all_admissible(t, cap)) {
    ++out.admissible;
    const auto x = point_of(e, t);
    const double z = objective(p.c, x);
    if (!out.feasible || z < out.objective) {
      out.feasible = true;
      out.objective = z;
      out.x = x;
    }
  }
  return out;
}

Census grid_census(const Problem& p, double step, std::uint64_t cap) {
  const auto steps = static_cast<std::uint64_t>(std::llround(1.0 / step));
  const std::size_t n = p.cols();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > cap / (steps + 1))
      throw Error(Errc::EnumerationCapExceeded, "grid has too many points");
    total *= steps + 1;
  }
  const ResolutionTables t = build_tables(p);
  const Decomposition dec = enumerate_feasible_decomposition(p);

  Census out;
  std::vector<std::uint64_t> digit(n, 0);
  std::vector<double> x(n);
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::size_t j = 0; j < n; ++j) x[j] = std::min(1.0, digit[j] * step);
    const bool direct = solves(p, x);
    const bool boxed = std::any_of(dec.boxes.begin(), dec.boxes.end(), [&](const auto& box) {
      for (std::size_t j = 0; j < n; ++j)
        if (!box[j].contains(x[j])) return false;
      return true;
    });
    const bool table = satisfies_table_criterion(t, x);
    ++out.points;
    out.feasible += direct;
    if (direct != boxed) ++out.box_mismatches;
    if (direct != table) ++out.criterion_mismatches;
    if ((direct != boxed || direct != table) && out.examples.size() < 5)
      out.examples.push_back(x);
    for (std::size_t j = n; j-- > 0;) {
      if (++digit[j] <= steps) break;
      digit[j] = 0;
    }
  }
  return out;
}

Problem random_instance(std::mt19937_64& rng, const TNorm& t, const InstanceShape& shape) {
  const auto steps = static_cast<int>(std::llround(1.0 / shape.grid));
  std::uniform_int_distribution<int> level(0, steps);
  std::bernoulli_distribution zero(shape.zero_rate);
  auto draw = [&] { return zero(rng) ? 0.0 : std::min(1.0, level(rng) * shape.grid); };

  Problem p{t, {}, {}, {}, {}};
  const std::size_t m = shape.rows, n = shape.cols;
  p.a_plus.assign(m, std::vector<double>(n));
  p.a_minus.assign(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      p.a_plus[i][j] = draw();
      p.a_minus[i][j] = draw();
    }
  for (std::size_t j = 0; j < n; ++j) p.c.push_back(std::min(1.0, level(rng) * shape.grid));
  if (shape.planted) {
    std::vector<double> hidden(n);
    for (auto& v : hidden) v = std::min(1.0, level(rng) * shape.grid);
    for (std::size_t i = 0; i < m; ++i) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        lhs = std::max({lhs, t(p.a_plus[i][j], hidden[j]), t(p.a_minus[i][j], 1.0 - hidden[j])});
      p.b.push_back(lhs);
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) p.b.push_back(draw());
  }
  return p;
}

Agreement cross_check(const Problem& p, double tol, std::uint64_t cap) {
  Agreement out;
  const Solution sol = solve(p);
  const BruteForce bf = brute_force_optimum(p, cap);
  out.solver_feasible = sol.status == Status::Optimal;
  out.oracle_feasible = bf.feasible;
  out.solver_objective = sol.objective;
  out.oracle_objective = bf.objective;
  auto fail = [&](const std::string& msg) {
    out.agree = false;
    out.mismatches.push_back(msg);
  };
  if (out.solver_feasible != out.oracle_feasible) {
    fail(std::string("status: solver ") + (out.solver_feasible ? "optimal" : "infeasible") +
         ", brute force " + (out.oracle_feasible ? "feasible" : "infeasible"));
    return out;
  }
  if (!out.solver_feasible) return out;
  if (std::abs(sol.objective - bf.objective) > tol) {
    std::ostringstream os;
    os.precision(12);
    os << "objective: solver " << sol.objective << ", brute force " << bf.objective;
    fail(os.str());
  }
  if (!solves(p, sol.x)) fail("solver point does not satisfy the equations");
  if (!solves(p, bf.x)) fail("brute force point does not satisfy the equations");
  return out;
}

}  // namespace bfre::oracle
