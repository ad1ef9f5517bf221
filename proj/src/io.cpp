#include "bfre/io.hpp"

#include <fstream>
#include <sstream>

#include "bfre/errors.hpp"
#include "json.hpp"

namespace bfre::io {

using nlohmann::json;

namespace {

Matrix read_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(Errc::InputError, std::string("missing array '") + key + "'");
  Matrix m;
  for (const auto& row : j.at(key)) {
    if (!row.is_array())
      throw Error(Errc::InputError, std::string("'") + key + "' must be an array of rows");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number())
        throw Error(Errc::InputError, std::string("'") + key + "' holds a non-number");
      r.push_back(v.get<double>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<double> read_vector(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw Error(Errc::InputError, std::string("missing array '") + key + "'");
  std::vector<double> out;
  for (const auto& v : j.at(key)) {
    if (!v.is_number())
      throw Error(Errc::InputError, std::string("'") + key + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

json numbers(const std::vector<double>& xs) {
  json a = json::array();
  for (double v : xs) a.push_back(v);
  return a;
}

json one_based(const IndexList& xs) {
  json a = json::array();
  for (auto v : xs) a.push_back(v + 1);
  return a;
}

json set_rows(const SetTable& table) {
  json rows = json::array();
  for (const auto& r : table) {
    json row = json::array();
    for (const auto& s : r) row.push_back(to_string(s));
    rows.push_back(row);
  }
  return rows;
}

std::string joined(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? "," : "") + format_number(xs[k]);
  return s;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InputError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::InputError, "problem must be a JSON object");
  if (!j.contains("tnorm") || !j.at("tnorm").is_object())
    throw Error(Errc::InputError, "missing object 'tnorm'");
  const json& tn = j.at("tnorm");
  if (!tn.contains("family") || !tn.at("family").is_string())
    throw Error(Errc::InputError, "'tnorm.family' must be a string");
  const auto name = tn.at("family").get<std::string>();
  const auto family = family_from_name(name);
  if (!family) throw Error(Errc::InvalidParameter, "unknown t-norm family '" + name + "'");
  std::optional<double> param;
  if (tn.contains("param") && !tn.at("param").is_null()) {
    if (!tn.at("param").is_number())
      throw Error(Errc::InputError, "'tnorm.param' must be a number");
    param = tn.at("param").get<double>();
  }
  Problem p{TNorm::make(*family, param), read_matrix(j, "a_plus"), read_matrix(j, "a_minus"),
            read_vector(j, "b"), read_vector(j, "c")};
  validate(p);
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InputError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string problem_to_json(const Problem& p) {
  json tn = {{"family", std::string(family_name(p.tnorm.family()))}};
  if (p.tnorm.has_param()) tn["param"] = p.tnorm.param();
  json a_plus = json::array(), a_minus = json::array();
  for (const auto& r : p.a_plus) a_plus.push_back(numbers(r));
  for (const auto& r : p.a_minus) a_minus.push_back(numbers(r));
  json j = {{"tnorm", tn}, {"a_plus", a_plus}, {"a_minus", a_minus},
            {"b", numbers(p.b)}, {"c", numbers(p.c)}};
  return j.dump(2);
}

std::string row_csv(const std::vector<SetForm>& row) {
  std::string line;
  for (std::size_t j = 0; j < row.size(); ++j)
    line += (j ? ",\"" : "\"") + to_string(row[j]) + "\"";
  return line;
}

std::string table_csv(const SetTable& table) {
  std::string out;
  for (const auto& r : table) out += row_csv(r) + "\n";
  return out;
}

std::string tables_csv(const ResolutionTables& t) {
  return "# I_ij\n" + table_csv(t.i) + "# S_ij\n" + table_csv(t.s) + "# I_j\n" +
         row_csv(t.col_interval) + "\n# S'_ij\n" + table_csv(t.s_prime);
}

std::string tables_json(const ResolutionTables& t) {
  json cols = json::array();
  for (const auto& s : t.col_interval) cols.push_back(to_string(s));
  json j = {{"I_ij", set_rows(t.i)},
            {"S_ij", set_rows(t.s)},
            {"I_j", cols},
            {"S_prime_ij", set_rows(t.s_prime)}};
  return j.dump(2);
}

std::string ledger_text(const Ledger& ledger) {
  std::ostringstream os;
  os << "initial |E| bound " << ledger.initial_bound << "\n";
  for (const auto& st : ledger.steps) os << describe(st) << "\n";
  return os.str();
}

std::string trace_text(const SearchResult& search, const ReducedProblem& reduced) {
  std::ostringstream os;
  for (const auto& e : search.trace) {
    os << "node " << e.node << ": e=[";
    for (std::size_t k = 0; k < e.picks.size(); ++k)
      os << (k ? "," : "") << reduced.col_map[e.picks[k]] + 1;
    os << "], x=(" << joined(e.x) << "), z=" << format_number(e.objective)
       << ", action=" << to_string(e.action) << "\n";
  }
  return os.str();
}

std::string solution_json(const Solution& sol, bool with_trace) {
  json j;
  j["status"] = sol.status == Status::Optimal ? "optimal" : "infeasible";
  if (sol.why) {
    j["reason"] = to_string(sol.why->reason);
    if (sol.why->reason != Infeasibility::Reason::ExhaustedSearch)
      j["index"] = sol.why->index + 1;
  }
  if (sol.status == Status::Optimal) {
    j["objective"] = sol.objective;
    j["x"] = numbers(sol.x);
  }
  json steps = json::array();
  for (const auto& st : sol.ledger.steps) {
    json s = {{"rule", std::string(rule_name(st.rule))},
              {"removed_rows", one_based(st.removed_rows)},
              {"removed_cols", one_based(st.removed_cols)},
              {"bound_before", st.bound_before},
              {"bound_after", st.bound_after},
              {"text", describe(st)}};
    json fixed = json::object();
    for (const auto& [col, v] : st.fixed) fixed["x" + std::to_string(col + 1)] = v;
    s["fixed"] = fixed;
    if (st.witness) s["witness_row"] = *st.witness + 1;
    if (!st.covers.empty()) {
      json cv = json::array();
      for (const auto& c : st.covers)
        cv.push_back({{"removed", c.removed + 1}, {"by", c.by + 1}, {"part", std::string(1, c.part)}});
      s["covers"] = cv;
    }
    steps.push_back(s);
  }
  j["ledger"] = steps;
  j["bound_chain"] = sol.ledger.bound_chain();
  j["reduced"] = {{"rows", one_based(sol.reduced.row_map)},
                  {"cols", one_based(sol.reduced.col_map)}};
  j["stats"] = {{"nodes_created", sol.search.stats.nodes_created},
                {"nodes_expanded", sol.search.stats.nodes_expanded},
                {"nodes_pruned", sol.search.stats.nodes_pruned},
                {"complete_candidates", sol.search.stats.complete_candidates},
                {"used_fallback", sol.used_fallback}};
  if (with_trace) {
    json tr = json::array();
    for (const auto& e : sol.search.trace) {
      json picks = json::array();
      for (auto p : e.picks) picks.push_back(sol.reduced.col_map[p] + 1);
      tr.push_back({{"node", e.node},
                    {"e", picks},
                    {"x", numbers(e.x)},
                    {"z", e.objective},
                    {"action", to_string(e.action)}});
    }
    j["trace"] = tr;
  }
  return j.dump(2);
}

}  // namespace bfre::io
