#include "bfre/optimize.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "bfre/errors.hpp"

namespace bfre {

namespace {

using Running = std::vector<std::optional<SetForm>>;

Running running_meets(const AssignmentFunction& e, const ResolutionTables& t,
                      std::size_t upto) {
  Running run(t.cols());
  for (std::size_t i = 0; i < upto; ++i) {
    const std::size_t j = e[i];
    if (j >= t.cols())
      throw Error(Errc::DimensionMismatch, "assignment names a missing column");
    const SetForm& cell = t.s_prime[i][j];
    run[j] = run[j] ? intersect(*run[j], cell) : cell;
  }
  return run;
}

IndexList domain_from(const Running& run, std::size_t i, const ResolutionTables& t,
                      bool restrict_to_reuse) {
  IndexList ok;
  std::optional<std::size_t> reused;
  for (std::size_t j : t.row_support[i]) {
    if (run[j] && intersect(*run[j], t.s_prime[i][j]).is_empty()) continue;
    ok.push_back(j);
    if (run[j] && !reused) reused = j;
  }
  if (restrict_to_reuse && reused) return {*reused};
  return ok;
}

struct Node {
  std::size_t id = 0;
  AssignmentFunction picks;
  Running run;
  std::vector<double> x;
  double objective = 0.0;
};

// Cheaper first, then deeper, then the smaller assignment, then older.
bool before(const Node& a, const Node& b) {
  if (a.objective != b.objective) return a.objective < b.objective;
  if (a.picks.size() != b.picks.size()) return a.picks.size() > b.picks.size();
  if (a.picks != b.picks) return a.picks < b.picks;
  return a.id < b.id;
}

}  // namespace

IndexList next_columns(const AssignmentFunction& prefix, const ResolutionTables& t,
                       bool restrict_to_reuse) {
  const std::size_t i = prefix.size();
  if (i >= t.rows())
    throw Error(Errc::PreconditionViolated, "assignment already covers every row");
  return domain_from(running_meets(prefix, t, i), i, t, restrict_to_reuse);
}

bool is_admissible(const AssignmentFunction& e, const ResolutionTables& t) {
  if (e.size() != t.rows())
    throw Error(Errc::DimensionMismatch, "assignment length does not match the rows");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] >= t.cols() || t.s_prime[i][e[i]].is_empty()) return false;
  const Running run = running_meets(e, t, e.size());
  return std::none_of(run.begin(), run.end(),
                      [](const auto& r) { return r && r->is_empty(); });
}

std::vector<SetForm> feasible_box(const AssignmentFunction& e, const ResolutionTables& t) {
  if (!is_admissible(e, t))
    throw Error(Errc::NotAdmissible, "assignment has an empty column intersection");
  const Running run = running_meets(e, t, e.size());
  std::vector<SetForm> box(t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) box[j] = run[j] ? *run[j] : t.col_interval[j];
  return box;
}

std::vector<double> candidate_point(const AssignmentFunction& e, const ResolutionTables& t) {
  std::vector<double> x;
  for (const auto& s : feasible_box(e, t)) x.push_back(s.lo());
  return x;
}

std::string to_string(TraceEntry::Action a) {
  switch (a) {
    case TraceEntry::Action::Expand: return "expand";
    case TraceEntry::Action::Prune: return "prune";
    case TraceEntry::Action::Incumbent: return "incumbent";
    case TraceEntry::Action::DeadEnd: return "dead-end";
  }
  return "";
}

std::string to_string(Infeasibility::Reason r) {
  switch (r) {
    case Infeasibility::Reason::EmptyColumn: return "EmptyColumn";
    case Infeasibility::Reason::UnsatisfiableRow: return "UnsatisfiableRow";
    case Infeasibility::Reason::ExhaustedSearch: return "ExhaustedSearch";
  }
  return "";
}

SearchResult branch_and_bound(const ResolutionTables& t, const std::vector<double>& costs,
                              const SearchOptions& options) {
  if (costs.size() != t.cols())
    throw Error(Errc::DimensionMismatch, "cost vector does not match the tables");
  const std::size_t m = t.rows(), n = t.cols();
  SearchResult out;
  double incumbent = std::numeric_limits<double>::infinity();

  std::map<std::size_t, Node> nodes;
  auto cmp = [&nodes](std::size_t a, std::size_t b) { return before(nodes.at(a), nodes.at(b)); };
  std::set<std::size_t, decltype(cmp)> frontier(cmp);

  auto log = [&](const Node& nd, TraceEntry::Action a) {
    if (a == TraceEntry::Action::Prune) ++out.stats.nodes_pruned;
    if (options.record_trace && nd.id != 0)
      out.trace.push_back({nd.id, nd.picks, nd.x, nd.objective, a});
  };

  Node root;
  root.run.assign(n, std::nullopt);
  for (std::size_t j = 0; j < n; ++j) root.x.push_back(t.lower(j));
  root.objective = objective(costs, root.x);
  if (m == 0) {
    out.best = root.picks;
    out.x = root.x;
    out.objective = root.objective;
    out.stats.complete_candidates = 1;
    return out;
  }
  nodes.emplace(0, std::move(root));

  std::size_t next_id = 1;
  std::optional<std::size_t> current = 0;
  for (;;) {
    if (!current) {
      if (frontier.empty()) break;
      const std::size_t id = *frontier.begin();
      frontier.erase(frontier.begin());
      if (nodes.at(id).objective >= incumbent) {
        log(nodes.at(id), TraceEntry::Action::Prune);
        nodes.erase(id);
        continue;
      }
      current = id;
    }
    Node node = std::move(nodes.at(*current));
    nodes.erase(*current);
    current.reset();

    const std::size_t row = node.picks.size();
    const IndexList domain = domain_from(node.run, row, t, options.restrict_to_reuse);
    ++out.stats.nodes_expanded;
    if (domain.empty()) {
      log(node, TraceEntry::Action::DeadEnd);
      continue;
    }
    log(node, TraceEntry::Action::Expand);

    std::vector<std::size_t> children;
    for (std::size_t j : domain) {
      if (++out.stats.nodes_created > options.node_cap)
        throw Error(Errc::SearchCapExceeded, "branch and bound exceeded its node cap");
      Node child;
      child.id = next_id++;
      child.picks = node.picks;
      child.picks.push_back(j);
      child.run = node.run;
      const SetForm& cell = t.s_prime[row][j];
      child.run[j] = child.run[j] ? intersect(*child.run[j], cell) : cell;
      child.x = node.x;
      child.x[j] = child.run[j]->lo();
      child.objective = objective(costs, child.x);

      if (child.objective >= incumbent) {
        log(child, TraceEntry::Action::Prune);
        continue;
      }
      if (child.picks.size() == m) {
        ++out.stats.complete_candidates;
        incumbent = child.objective;
        out.best = child.picks;
        out.x = child.x;
        out.objective = child.objective;
        log(child, TraceEntry::Action::Incumbent);
        for (auto it = frontier.begin(); it != frontier.end();) {
          if (nodes.at(*it).objective >= incumbent) {
            log(nodes.at(*it), TraceEntry::Action::Prune);
            nodes.erase(*it);
            it = frontier.erase(it);
          } else {
            ++it;
          }
        }
        continue;
      }
      const std::size_t id = child.id;
      nodes.emplace(id, std::move(child));
      frontier.insert(id);
      children.push_back(id);
    }

    // Dive into the cheapest surviving child.
    for (std::size_t id : children) {
      if (!frontier.count(id)) continue;
      if (!current || before(nodes.at(id), nodes.at(*current))) current = id;
    }
    if (current) frontier.erase(*current);
  }
  return out;
}

Solution solve(const Problem& p, const SolveOptions& options) {
  Solution sol;
  sol.tables = build_tables(p);
  if (const auto rep = check_feasibility(sol.tables); !rep.ok()) {
    sol.why = Infeasibility{rep.reason == FeasibilityReport::Reason::EmptyColumn
                                ? Infeasibility::Reason::EmptyColumn
                                : Infeasibility::Reason::UnsatisfiableRow,
                            rep.index};
    return sol;
  }

  auto run = [&](Mode mode) {
    auto sr = simplify(sol.tables, p.c, {mode, options.repeat_until_stable});
    sol.ledger = std::move(sr.ledger);
    sol.reduced = std::move(sr.reduced);
    if (sol.reduced.dead_row) return false;
    SearchOptions so;
    so.restrict_to_reuse = sol.reduced.two_point_free;
    so.node_cap = options.node_cap;
    so.record_trace = options.record_trace;
    sol.search = branch_and_bound(sol.reduced.tables, sol.reduced.costs, so);
    if (!sol.search.best) return false;
    sol.x = sol.reduced.lift(sol.search.x);
    return true;
  };

  bool found = run(options.mode);
  if (found && !is_feasible_point(p, sol.x)) {
    if (options.mode == Mode::FeasibilityPreserving)
      throw Error(Errc::InconsistentReduction, "search returned a point that is not a solution");
    // The optimality-preserving rules assume a non-empty solution set. A
    // result that does not verify proves it empty; confirm on the exact
    // reduction before reporting.
    sol.used_fallback = true;
    found = run(Mode::FeasibilityPreserving);
    if (found && !is_feasible_point(p, sol.x))
      throw Error(Errc::InconsistentReduction, "search returned a point that is not a solution");
  }
  if (!found) {
    if (sol.reduced.dead_row)
      sol.why = Infeasibility{Infeasibility::Reason::UnsatisfiableRow, *sol.reduced.dead_row};
    else
      sol.why = Infeasibility{Infeasibility::Reason::ExhaustedSearch, 0};
    sol.x.clear();
    return sol;
  }
  sol.status = Status::Optimal;
  sol.objective = objective(p.c, sol.x);
  return sol;
}

Decomposition enumerate_feasible_decomposition(const Problem& p, std::uint64_t cap) {
  Decomposition out;
  const ResolutionTables tables = build_tables(p);
  if (!check_feasibility(tables).ok()) return out;
  out.feasible_conditions = true;
  const auto sr = simplify(tables, p.c, {Mode::FeasibilityPreserving, false});
  const ReducedProblem& red = sr.reduced;
  if (red.dead_row) return out;
  const ResolutionTables& t = red.tables;
  out.rows = red.row_map;

  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t bound = 1;
  for (const auto& sup : t.row_support) {
    const std::uint64_t k = sup.size();
    bound = (k != 0 && bound > kMax / k) ? kMax : bound * k;
  }
  if (bound > cap)
    throw Error(Errc::EnumerationCapExceeded,
                "enumeration bound " + std::to_string(bound) + " exceeds the cap " +
                    std::to_string(cap));

  AssignmentFunction e;
  Running run(t.cols());
  std::function<void()> dfs = [&]() {
    const std::size_t i = e.size();
    if (i == t.rows()) {
      std::vector<SetForm> box(red.original_cols);
      for (const auto& [j, v] : red.fixed) box[j] = SetForm::point(v);
      AssignmentFunction lifted;
      for (std::size_t k = 0; k < t.cols(); ++k)
        box[red.col_map[k]] = run[k] ? *run[k] : t.col_interval[k];
      for (std::size_t j : e) lifted.push_back(red.col_map[j]);
      out.boxes.push_back(std::move(box));
      out.picks.push_back(std::move(lifted));
      return;
    }
    for (std::size_t j : domain_from(run, i, t, false)) {
      const auto saved = run[j];
      run[j] = saved ? intersect(*saved, t.s_prime[i][j]) : t.s_prime[i][j];
      e.push_back(j);
      dfs();
      e.pop_back();
      run[j] = saved;
    }
  };
  dfs();
  return out;
}

}  // namespace bfre
