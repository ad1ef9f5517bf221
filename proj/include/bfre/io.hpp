#pragma once

#include <string>
#include <string_view>

#include "bfre/optimize.hpp"
#include "bfre/problem.hpp"
#include "bfre/resolution.hpp"
#include "bfre/simplify.hpp"

namespace bfre::io {

// Problem files are JSON objects
//   {"tnorm": {"family": "yager", "param": 2},
//    "a_plus": [[...], ...], "a_minus": [[...], ...], "b": [...], "c": [...]}
// Malformed input throws Error(InputError); value checks are those of
// validate() and TNorm::make.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);
std::string problem_to_json(const Problem& p);

// One line per row, cells quoted and comma separated.
std::string table_csv(const SetTable& table);
std::string row_csv(const std::vector<SetForm>& row);

// The four tables I_ij, S_ij, I_j and S'_ij, each under a "# name" header.
std::string tables_csv(const ResolutionTables& t);
std::string tables_json(const ResolutionTables& t);

std::string ledger_text(const Ledger& ledger);

// "node k: e=[...], x=(...), z=..., action=..." with the picks shown as
// 1-based original column numbers and x over the reduced columns.
std::string trace_text(const SearchResult& search, const ReducedProblem& reduced);

std::string solution_json(const Solution& sol, bool with_trace);

}  // namespace bfre::io
