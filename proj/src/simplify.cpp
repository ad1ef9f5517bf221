#include "bfre/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bfre/errors.hpp"

namespace bfre {

namespace {

std::string index_set(const IndexList& xs) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? "," : "") << xs[k] + 1;
  os << "}";
  return os.str();
}

// Opens a step, lets `act` mutate the state and fill in the step, then closes
// it with the bound after the change.
template <class Act>
LedgerStep record(ReductionState& s, Rule rule, Act act) {
  LedgerStep step{};
  step.rule = rule;
  step.bound_before = s.bound();
  act(step);
  step.bound_after = s.bound();
  return step;
}

// Removes column j at `value` together with the given rows.
void fix_and_drop(ReductionState& s, LedgerStep& step, std::size_t j, double value,
                  const IndexList& rows) {
  for (std::size_t i : rows) s.remove_row(i);
  s.fix_column(j, value);
  step.removed_rows = rows;
  step.removed_cols = {j};
  step.fixed = {{j, value}};
}

bool row_dominates(const ReductionState& s, std::size_t i, std::size_t i0) {
  const auto& sp = s.tables().s_prime;
  for (std::size_t j : s.alive_cols())
    if (!subset_of(sp[i][j], sp[i0][j])) return false;
  return true;
}

// Intersection of the non-empty cells of column j over its surviving rows.
SetForm column_meet(const ReductionState& s, std::size_t j) {
  const auto& sp = s.tables().s_prime;
  const IndexList rows = s.col_support(j);
  if (rows.empty()) return SetForm::empty();
  SetForm acc = sp[rows[0]][j];
  for (std::size_t k = 1; k < rows.size(); ++k) acc = intersect(acc, sp[rows[k]][j]);
  return acc;
}

bool is_point_at(const SetForm& s, double v) {
  return s.kind() == SetForm::Kind::Singleton && std::abs(s.lo() - v) <= eps();
}

std::optional<char> covers(const ReductionState& s, std::size_t j1, std::size_t j2) {
  const IndexList r1 = s.col_support(j1);
  const IndexList r2 = s.col_support(j2);
  if (r1.empty() || !std::includes(r2.begin(), r2.end(), r1.begin(), r1.end()))
    return std::nullopt;
  const auto& t = s.tables();
  const SetForm meet2 = column_meet(s, j2);
  if (is_point_at(meet2, t.lower(j2))) return 'a';
  const SetForm meet1 = column_meet(s, j1);
  if (meet1.kind() != SetForm::Kind::Singleton || !is_point_at(meet2, t.upper(j2)))
    return std::nullopt;
  const double v = meet1.lo();
  if (!is_point_at(meet1, t.lower(j1)) && !is_point_at(meet1, t.upper(j1)))
    return std::nullopt;
  const auto& c = s.costs();
  if (c[j2] * (t.upper(j2) - t.lower(j2)) < c[j1] * (v - t.lower(j1))) return 'b';
  return std::nullopt;
}

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::ZeroRhsRow: return "zero-rhs-row";
    case Rule::SingletonColumn: return "singleton-column";
    case Rule::DominatedRow: return "dominated-row";
    case Rule::ForcedAssignment: return "forced-assignment";
    case Rule::TwoPointRow: return "two-point-row";
    case Rule::LowerBoundColumn: return "lower-bound-column";
    case Rule::FreeColumn: return "free-column";
    case Rule::DominatedColumn: return "dominated-column";
  }
  return "";
}

std::vector<std::uint64_t> Ledger::bound_chain() const {
  std::vector<std::uint64_t> chain{initial_bound};
  for (const auto& st : steps)
    if (st.bound_after != chain.back()) chain.push_back(st.bound_after);
  return chain;
}

std::string describe(const LedgerStep& step) {
  std::ostringstream os;
  os << rule_name(step.rule) << ":";
  if (!step.fixed.empty()) {
    os << " fixed";
    for (std::size_t k = 0; k < step.fixed.size(); ++k) {
      const auto [j, v] = step.fixed[k];
      os << (k ? ", " : " ") << "x" << j + 1 << "=" << format_number(v);
      for (const auto& cv : step.covers)
        if (cv.removed == j)
          os << " (covered by column " << cv.by + 1 << ", part " << cv.part << ")";
    }
    os << ",";
  }
  if (!step.removed_cols.empty())
    os << " removed " << (step.removed_cols.size() == 1 ? "column " : "columns ")
       << (step.removed_cols.size() == 1 ? std::to_string(step.removed_cols[0] + 1)
                                         : index_set(step.removed_cols));
  if (!step.removed_rows.empty()) {
    os << (step.removed_cols.empty() ? " removed " : " and ");
    os << (step.removed_rows.size() == 1 ? "row " : "rows ")
       << (step.removed_rows.size() == 1 ? std::to_string(step.removed_rows[0] + 1)
                                         : index_set(step.removed_rows));
  }
  if (step.witness) {
    os << (step.rule == Rule::DominatedRow ? " (dominated by row " : " (forced by row ")
       << *step.witness + 1 << ")";
  }
  os << ", |E| bound " << step.bound_after;
  return os.str();
}

std::vector<double> ReducedProblem::lift(const std::vector<double>& reduced_x) const {
  if (reduced_x.size() != col_map.size())
    throw Error(Errc::DimensionMismatch, "reduced point has the wrong length");
  std::vector<double> x(original_cols, 0.0);
  for (const auto& [j, v] : fixed) x[j] = v;
  for (std::size_t k = 0; k < col_map.size(); ++k) x[col_map[k]] = reduced_x[k];
  return x;
}

ReductionState::ReductionState(ResolutionTables tables, std::vector<double> costs)
    : tables_(std::move(tables)),
      costs_(std::move(costs)),
      row_alive_(tables_.rows(), true),
      col_alive_(tables_.cols(), true) {
  if (costs_.size() != tables_.cols())
    throw Error(Errc::DimensionMismatch, "cost vector does not match the tables");
}

IndexList ReductionState::alive_rows() const {
  IndexList out;
  for (std::size_t i = 0; i < row_alive_.size(); ++i)
    if (row_alive_[i]) out.push_back(i);
  return out;
}

IndexList ReductionState::alive_cols() const {
  IndexList out;
  for (std::size_t j = 0; j < col_alive_.size(); ++j)
    if (col_alive_[j]) out.push_back(j);
  return out;
}

IndexList ReductionState::row_support(std::size_t i) const {
  IndexList out;
  for (std::size_t j : tables_.row_support[i])
    if (col_alive_[j]) out.push_back(j);
  return out;
}

IndexList ReductionState::col_support(std::size_t j) const {
  IndexList out;
  for (std::size_t i : tables_.col_support[j])
    if (row_alive_[i]) out.push_back(i);
  return out;
}

std::optional<std::size_t> ReductionState::dead_row() const {
  for (std::size_t i : alive_rows())
    if (row_support(i).empty()) return i;
  return std::nullopt;
}

std::uint64_t ReductionState::bound() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t b = 1;
  for (std::size_t i : alive_rows()) {
    const std::uint64_t k = row_support(i).size();
    if (k == 0) return 0;
    b = (b > kMax / k) ? kMax : b * k;
  }
  return b;
}

void ReductionState::remove_row(std::size_t i) {
  if (!row_alive_[i])
    throw Error(Errc::InconsistentReduction, "row " + std::to_string(i + 1) + " removed twice");
  row_alive_[i] = false;
}

void ReductionState::fix_column(std::size_t j, double value) {
  if (!col_alive_[j])
    throw Error(Errc::InconsistentReduction,
                "column " + std::to_string(j + 1) + " removed twice");
  col_alive_[j] = false;
  fixed_[j] = value;
}

ReducedProblem ReductionState::extract(bool two_point_free) const {
  ReducedProblem r;
  r.row_map = alive_rows();
  r.col_map = alive_cols();
  r.fixed = fixed_;
  r.original_cols = tables_.cols();
  r.two_point_free = two_point_free;
  r.dead_row = dead_row();
  auto& t = r.tables;
  for (std::size_t i : r.row_map) {
    t.rhs.push_back(tables_.rhs[i]);
    std::vector<SetForm> s, in, sp;
    for (std::size_t j : r.col_map) {
      s.push_back(tables_.s[i][j]);
      in.push_back(tables_.i[i][j]);
      sp.push_back(tables_.s_prime[i][j]);
    }
    t.s.push_back(std::move(s));
    t.i.push_back(std::move(in));
    t.s_prime.push_back(std::move(sp));
  }
  for (std::size_t j : r.col_map) {
    t.col_interval.push_back(tables_.col_interval[j]);
    r.costs.push_back(costs_[j]);
  }
  rebuild_supports(t);
  return r;
}

std::vector<LedgerStep> apply_zero_rhs_rows(ReductionState& s) {
  std::vector<LedgerStep> steps;
  for (std::size_t i : s.alive_rows()) {
    if (s.tables().rhs[i] > eps()) continue;
    steps.push_back(record(s, Rule::ZeroRhsRow, [&](LedgerStep& st) {
      s.remove_row(i);
      st.removed_rows = {i};
    }));
  }
  return steps;
}

std::vector<LedgerStep> apply_singleton_columns(ReductionState& s) {
  std::vector<LedgerStep> steps;
  const auto& t = s.tables();
  for (std::size_t j : s.alive_cols()) {
    if (t.col_interval[j].kind() != SetForm::Kind::Singleton) continue;
    const double k = t.lower(j);
    IndexList rows;
    for (std::size_t i : s.alive_rows())
      if (t.s_prime[i][j].contains(k)) rows.push_back(i);
    steps.push_back(record(s, Rule::SingletonColumn,
                           [&](LedgerStep& st) { fix_and_drop(s, st, j, k, rows); }));
  }
  return steps;
}

std::vector<LedgerStep> apply_dominated_rows(ReductionState& s) {
  std::vector<LedgerStep> steps;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> hit;  // (removed, by)
    const IndexList rows = s.alive_rows();
    for (std::size_t i0 : rows) {
      for (std::size_t i : rows) {
        if (i == i0 || s.row_support(i).empty() || !row_dominates(s, i, i0)) continue;
        // Identical rows: keep the one with the lower index.
        if (row_dominates(s, i0, i) && i0 < i) continue;
        hit = {{i0, i}};
        break;
      }
      if (hit) break;
    }
    if (!hit) return steps;
    steps.push_back(record(s, Rule::DominatedRow, [&](LedgerStep& st) {
      s.remove_row(hit->first);
      st.removed_rows = {hit->first};
      st.witness = hit->second;
    }));
  }
}

std::vector<LedgerStep> apply_forced_assignments(ReductionState& s) {
  std::vector<LedgerStep> steps;
  const auto& t = s.tables();
  for (std::size_t i0 : s.alive_rows()) {
    if (!s.row_alive(i0)) continue;
    const IndexList sup = s.row_support(i0);
    if (sup.size() != 1) continue;
    const std::size_t j0 = sup[0];
    const SetForm& cell = t.s_prime[i0][j0];
    if (cell.kind() != SetForm::Kind::Singleton) continue;
    const double k = cell.lo();
    IndexList rows;
    for (std::size_t i : s.alive_rows())
      if (t.s_prime[i][j0].contains(k)) rows.push_back(i);
    steps.push_back(record(s, Rule::ForcedAssignment, [&](LedgerStep& st) {
      fix_and_drop(s, st, j0, k, rows);
      st.witness = i0;
    }));
  }
  return steps;
}

std::vector<LedgerStep> apply_two_point_rows(ReductionState& s) {
  std::vector<LedgerStep> steps;
  const auto& t = s.tables();
  for (std::size_t i : s.alive_rows()) {
    bool two = false;
    for (std::size_t j : s.row_support(i))
      two = two || t.s_prime[i][j].kind() == SetForm::Kind::TwoPoint;
    if (!two) continue;
    steps.push_back(record(s, Rule::TwoPointRow, [&](LedgerStep& st) {
      s.remove_row(i);
      st.removed_rows = {i};
    }));
  }
  return steps;
}

std::vector<LedgerStep> apply_lower_bound_columns(ReductionState& s) {
  std::vector<LedgerStep> steps;
  const auto& t = s.tables();
  for (std::size_t j : s.alive_cols()) {
    const IndexList rows = s.col_support(j);
    if (rows.empty()) continue;
    const double lo = t.lower(j);
    const bool all = std::all_of(rows.begin(), rows.end(),
                                 [&](std::size_t i) { return t.s_prime[i][j].contains(lo); });
    if (!all) continue;
    steps.push_back(record(s, Rule::LowerBoundColumn,
                           [&](LedgerStep& st) { fix_and_drop(s, st, j, lo, rows); }));
  }
  return steps;
}

std::vector<LedgerStep> apply_free_columns(ReductionState& s) {
  std::vector<LedgerStep> steps;
  for (std::size_t j : s.alive_cols()) {
    if (!s.col_support(j).empty()) continue;
    steps.push_back(record(s, Rule::FreeColumn, [&](LedgerStep& st) {
      fix_and_drop(s, st, j, s.tables().lower(j), {});
    }));
  }
  return steps;
}

std::vector<LedgerStep> apply_dominated_columns(ReductionState& s) {
  const auto& t = s.tables();
  for (std::size_t i : s.alive_rows())
    for (std::size_t j : s.row_support(i))
      if (t.s_prime[i][j].kind() != SetForm::Kind::Singleton)
        throw Error(Errc::PreconditionViolated,
                    "column domination needs single-point cells only");
  LedgerStep step = record(s, Rule::DominatedColumn, [&](LedgerStep& st) {
    for (std::size_t j1 : s.alive_cols()) {
      for (std::size_t j2 : s.alive_cols()) {
        if (j2 == j1 || !s.col_alive(j2)) continue;
        const auto part = covers(s, j1, j2);
        if (!part) continue;
        const double v = t.lower(j1);
        s.fix_column(j1, v);
        st.removed_cols.push_back(j1);
        st.fixed.emplace_back(j1, v);
        st.covers.push_back({j1, j2, *part});
        break;
      }
    }
  });
  if (step.removed_cols.empty()) return {};
  return {step};
}

SimplifyResult simplify(const ResolutionTables& tables, const std::vector<double>& costs,
                        SimplifyOptions options) {
  if (!check_feasibility(tables).ok())
    throw Error(Errc::PreconditionViolated,
                "simplification needs tables that pass the feasibility check");
  ReductionState s(tables, costs);
  SimplifyResult out;
  out.ledger.initial_bound = s.bound();
  const bool optimal = options.mode == Mode::OptimalityPreserving;

  using Pass = std::vector<LedgerStep> (*)(ReductionState&);
  std::vector<Pass> passes = {apply_zero_rhs_rows, apply_singleton_columns,
                              apply_dominated_rows};
  if (optimal) {
    passes.insert(passes.end(), {apply_forced_assignments, apply_two_point_rows,
                                 apply_lower_bound_columns, apply_free_columns,
                                 apply_dominated_columns});
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (Pass pass : passes) {
      auto steps = pass(s);
      changed = changed || !steps.empty();
      for (auto& st : steps) out.ledger.steps.push_back(std::move(st));
      if (s.dead_row()) {
        out.reduced = s.extract(optimal);
        return out;
      }
    }
    if (!options.repeat_until_stable) break;
  }
  out.reduced = s.extract(optimal);
  return out;
}

}  // namespace bfre
