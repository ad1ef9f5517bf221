// bfre: solve, resolve and cross-check bipolar max-T relational equation
// problems stored as JSON files.
//
// Exit codes: 0 success, 1 input or usage error, 2 infeasible problem,
// 3 solver and brute force disagree (verify only).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "bfre/errors.hpp"
#include "bfre/io.hpp"
#include "bfre/optimize.hpp"
#include "bfre/oracle.hpp"

namespace {

using namespace bfre;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInfeasible = 2;
constexpr int kMismatch = 3;

std::string vector_text(const std::vector<double>& xs) {
  std::string s = "(";
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + format_number(xs[k]);
  return s + ")";
}

std::string chain_text(const std::vector<std::uint64_t>& chain) {
  std::string s;
  for (std::size_t k = 0; k < chain.size(); ++k) s += (k ? " -> " : "") + std::to_string(chain[k]);
  return s;
}

std::string reason_text(const Infeasibility& why) {
  switch (why.reason) {
    case Infeasibility::Reason::EmptyColumn:
      return "EmptyColumn (column " + std::to_string(why.index + 1) + ")";
    case Infeasibility::Reason::UnsatisfiableRow:
      return "UnsatisfiableRow (row " + std::to_string(why.index + 1) + ")";
    case Infeasibility::Reason::ExhaustedSearch:
      return "ExhaustedSearch";
  }
  return "";
}

struct SolveFlags {
  std::string path;
  bool trace = false;
  bool tables = false;
  bool json = false;
  bool no_simplify = false;
  std::uint64_t cap = 10'000'000;
};

int cmd_solve(const SolveFlags& f) {
  const Problem p = io::load_problem(f.path);
  SolveOptions opt;
  opt.mode = f.no_simplify ? Mode::FeasibilityPreserving : Mode::OptimalityPreserving;
  opt.node_cap = f.cap;
  opt.record_trace = f.trace;
  const Solution sol = solve(p, opt);

  if (f.json) {
    std::cout << io::solution_json(sol, f.trace) << "\n";
  } else {
    if (f.tables) std::cout << io::tables_csv(sol.tables);
    if (sol.status == Status::Optimal) {
      std::cout << "status: optimal\n"
                << "objective: " << format_number(sol.objective) << "\n"
                << "x: " << vector_text(sol.x) << "\n";
    } else {
      std::cout << "status: infeasible\n"
                << "reason: " << reason_text(*sol.why) << "\n";
    }
    if (!sol.ledger.steps.empty() || sol.status == Status::Optimal) {
      std::cout << "reduction:\n";
      std::istringstream lines(io::ledger_text(sol.ledger));
      for (std::string line; std::getline(lines, line);) std::cout << "  " << line << "\n";
      std::cout << "bound chain: " << chain_text(sol.ledger.bound_chain()) << "\n";
    }
    const auto& st = sol.search.stats;
    std::cout << "search: " << st.nodes_created << " nodes created, " << st.nodes_expanded
              << " expanded, " << st.nodes_pruned << " pruned, " << st.complete_candidates
              << " complete candidates" << (sol.used_fallback ? " (fallback search)" : "")
              << "\n";
    if (f.trace) std::cout << "trace:\n" << io::trace_text(sol.search, sol.reduced);
  }
  return sol.status == Status::Optimal ? kOk : kInfeasible;
}

struct ResolveFlags {
  std::string path;
  bool boxes = false;
  bool json = false;
  std::uint64_t cap = 1'000'000;
};

std::string box_text(const Decomposition& d, std::size_t k) {
  std::string s = "e=[";
  for (std::size_t r = 0; r < d.rows.size(); ++r)
    s += (r ? "," : "") + std::to_string(d.rows[r] + 1) + ":" + std::to_string(d.picks[k][r] + 1);
  s += "] S(e)=";
  for (std::size_t j = 0; j < d.boxes[k].size(); ++j)
    s += (j ? " x " : "") + to_string(d.boxes[k][j]);
  return s;
}

int cmd_resolve(const ResolveFlags& f) {
  const Problem p = io::load_problem(f.path);
  const ResolutionTables t = build_tables(p);
  const FeasibilityReport report = check_feasibility(t);
  std::optional<Decomposition> dec;
  if (report.ok() && f.boxes) dec = enumerate_feasible_decomposition(p, f.cap);

  if (f.json) {
    nlohmann::json j = nlohmann::json::parse(io::tables_json(t));
    j["feasible_conditions"] = report.ok();
    if (dec) {
      nlohmann::json boxes = nlohmann::json::array();
      for (const auto& box : dec->boxes) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& s : box) b.push_back(to_string(s));
        boxes.push_back(b);
      }
      j["boxes"] = boxes;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << io::tables_csv(t);
    if (!report.ok()) {
      const Infeasibility why{report.reason == FeasibilityReport::Reason::EmptyColumn
                                  ? Infeasibility::Reason::EmptyColumn
                                  : Infeasibility::Reason::UnsatisfiableRow,
                              report.index};
      std::cout << "solution set is empty: " << reason_text(why) << "\n";
    } else if (dec) {
      std::cout << "# boxes (" << dec->boxes.size() << ")\n";
      for (std::size_t k = 0; k < dec->boxes.size(); ++k)
        std::cout << box_text(*dec, k) << "\n";
    }
  }
  if (!report.ok() || (dec && dec->boxes.empty())) return kInfeasible;
  return kOk;
}

struct VerifyFlags {
  std::string path;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::uint64_t cap = 1'000'000;
  std::string family;
  std::optional<double> param;
  std::size_t rows = 3;
  std::size_t cols = 3;
};

int cmd_verify(const VerifyFlags& f) {
  if (!f.path.empty()) {
    const Problem p = io::load_problem(f.path);
    const auto a = oracle::cross_check(p, 1e-9, f.cap);
    auto side = [](bool feasible, double z) {
      return feasible ? "feasible, z=" + format_number(z) : std::string("infeasible");
    };
    std::cout << "solver: " << side(a.solver_feasible, a.solver_objective) << "\n"
              << "brute force: " << side(a.oracle_feasible, a.oracle_objective) << "\n";
    for (const auto& m : a.mismatches) std::cout << "mismatch: " << m << "\n";
    std::cout << (a.agree ? "agree" : "disagree") << "\n";
    return a.agree ? kOk : kMismatch;
  }

  std::vector<TNorm> norms;
  if (!f.family.empty()) {
    const auto fam = family_from_name(f.family);
    if (!fam) throw Error(Errc::InvalidParameter, "unknown t-norm family '" + f.family + "'");
    norms.push_back(TNorm::make(*fam, f.param));
  } else {
    norms = {TNorm::make(Family::Lukasiewicz), TNorm::make(Family::Product),
             TNorm::make(Family::Yager, 2.0), TNorm::make(Family::Hamacher, 1.0)};
  }
  std::mt19937_64 rng(f.seed);
  std::size_t disagreements = 0, feasible = 0;
  for (std::size_t k = 0; k < f.random; ++k) {
    const TNorm& t = norms[k % norms.size()];
    oracle::InstanceShape shape;
    shape.rows = f.rows;
    shape.cols = f.cols;
    shape.planted = k % 4 != 3;
    const Problem p = oracle::random_instance(rng, t, shape);
    const auto a = oracle::cross_check(p, 1e-9, f.cap);
    feasible += a.oracle_feasible;
    if (!a.agree) {
      ++disagreements;
      std::cout << "instance " << k + 1 << " (" << t.describe() << "):\n";
      for (const auto& m : a.mismatches) std::cout << "  " << m << "\n";
      std::cout << io::problem_to_json(p) << "\n";
    }
  }
  std::cout << f.random << " instances, " << feasible << " feasible, " << disagreements
            << " disagreements\n";
  return disagreements == 0 ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimize a linear objective over bipolar max-T fuzzy relational equations"};
  app.require_subcommand(1);

  SolveFlags sf;
  auto* solve_cmd = app.add_subcommand("solve", "find an optimal solution");
  solve_cmd->add_option("file", sf.path, "problem file")->required();
  solve_cmd->add_flag("--trace", sf.trace, "print the branch-and-bound trace");
  solve_cmd->add_flag("--tables", sf.tables, "print the resolution tables");
  solve_cmd->add_flag("--json", sf.json, "print the result as JSON");
  solve_cmd->add_flag("--no-simplify", sf.no_simplify,
                      "use only reductions that keep the whole solution set");
  solve_cmd->add_option("--cap", sf.cap, "node cap for the search");

  ResolveFlags rf;
  auto* resolve_cmd = app.add_subcommand("resolve", "print the resolution tables");
  resolve_cmd->add_option("file", rf.path, "problem file")->required();
  resolve_cmd->add_flag("--tables", "print the tables (always on)");
  resolve_cmd->add_flag("--boxes", rf.boxes, "list the boxes whose union is the solution set");
  resolve_cmd->add_flag("--json", rf.json, "print JSON");
  resolve_cmd->add_option("--cap", rf.cap, "cap on the number of assignments to enumerate");

  VerifyFlags vf;
  auto* verify_cmd = app.add_subcommand("verify", "compare the solver with brute force");
  verify_cmd->add_option("file", vf.path, "problem file");
  verify_cmd->add_option("--random", vf.random, "number of random instances");
  verify_cmd->add_option("--seed", vf.seed, "seed for the random instances");
  verify_cmd->add_option("--cap", vf.cap, "cap on the number of assignments to enumerate");
  verify_cmd->add_option("--family", vf.family, "t-norm family for random instances");
  verify_cmd->add_option("--param", vf.param, "t-norm parameter for random instances");
  verify_cmd->add_option("--rows", vf.rows, "rows of random instances")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_option("--cols", vf.cols, "columns of random instances")
      ->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (const char* env = std::getenv("BFRE_EPS")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0')
        throw Error(Errc::InputError, std::string("BFRE_EPS is not a number: ") + env);
      set_eps(v);
    }
    if (*solve_cmd) return cmd_solve(sf);
    if (*resolve_cmd) return cmd_resolve(rf);
    if (vf.path.empty() && vf.random == 0) {
      std::cerr << "verify: give a problem file or --random N\n";
      return kInputError;
    }
    return cmd_verify(vf);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
