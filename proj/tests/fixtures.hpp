#pragma once

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include "bfre/problem.hpp"
#include "bfre/set_form.hpp"

namespace fixtures {

// Ten equations in ten unknowns under the Yager t-norm with p = 2.
inline bfre::Problem example1() {
  return bfre::Problem{
      bfre::TNorm::make(bfre::Family::Yager, 2.0),
      {{0.25, 0.32, 0.41, 0.19, 0.70, 0.13, 0.44, 0.37, 0.28, 0.50},
       {0.80, 0.73, 0.64, 0.79, 0.80, 0.22, 0.80, 0.56, 0.10, 0.28},
       {0.11, 0.20, 0.12, 0.13, 0.05, 0.25, 0.40, 0.25, 0.20, 0.18},
       {0.10, 0.23, 0.25, 0.15, 0.12, 0.05, 0.02, 0.01, 0.15, 0.15},
       {0.45, 0.35, 0.70, 0.50, 0.41, 0.27, 0.39, 0.48, 0.17, 0.39},
       {0.60, 0.70, 0.25, 0.38, 0.63, 0.58, 0.46, 0.47, 0.85, 0.33},
       {0.01, 0.02, 0.15, 0.09, 0.12, 0.10, 0.15, 0.15, 0.04, 0.25},
       {0.75, 0.64, 0.32, 0.29, 0.39, 0.61, 0.57, 0.34, 1.00, 0.46},
       {0.22, 0.20, 0.35, 0.23, 0.30, 0.18, 0.29, 0.25, 0.35, 0.10},
       {0.41, 0.25, 0.50, 0.20, 0.56, 0.60, 0.59, 0.60, 0.47, 0.31}},
      {{0.70, 0.70, 0.32, 0.44, 0.00, 0.16, 0.20, 0.50, 0.40, 0.39},
       {0.70, 0.65, 0.14, 0.12, 0.80, 0.76, 0.00, 1.00, 0.15, 0.79},
       {0.17, 0.24, 0.20, 0.20, 0.06, 0.25, 0.13, 0.19, 0.22, 0.02},
       {0.14, 0.10, 0.04, 0.00, 0.10, 0.00, 0.14, 0.02, 0.15, 0.08},
       {0.70, 0.04, 0.27, 0.36, 0.60, 0.40, 0.48, 0.50, 0.50, 0.50},
       {0.66, 0.63, 0.14, 0.73, 0.53, 0.46, 0.61, 0.85, 0.85, 0.39},
       {0.00, 0.15, 0.15, 0.05, 0.02, 0.03, 0.10, 0.12, 0.18, 0.09},
       {0.63, 0.03, 0.55, 0.77, 0.79, 0.49, 0.21, 0.32, 0.80, 0.71},
       {0.27, 0.30, 0.35, 0.24, 0.35, 0.07, 0.29, 0.35, 0.20, 0.75},
       {0.59, 0.34, 0.26, 0.38, 0.02, 0.60, 0.52, 0.43, 0.27, 0.44}},
      {0.50, 0.80, 0.25, 0.15, 0.50, 0.75, 0.15, 0.80, 0.35, 0.60},
      {1, 0.35, 0.93, 3.28, 5.03, 2.96, 1, 2.75, 5.25, 6.39}};
}

using Row = std::array<const char*, 10>;

// Reference resolution tables of the instance above, cell by cell.
inline const std::array<Row, 10> kTableI = {{
    {"[0.4,1]", "[0.4,1]", "[0,1]", "[0,1]", "[0,0.6]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]"},
    {"[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0.2,1]", "[0,1]", "[0,1]"},
    {"[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,0.55]", "[0,1]", "[0,1]", "[0,1]"},
    {"[0,1]", "[0,0.64]", "[0,0.6]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]"},
    {"[0.4,1]", "[0,1]", "[0,0.6]", "[0,1]", "[0.3,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]"},
    {"[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0.2,1]", "[0.2,0.8]", "[0,1]"},
    {"[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,0.6]"},
    {"[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,0.8]", "[0,1]"},
    {"[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0.6,1]"},
    {"[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]", "[0,1]"},
}};

inline const std::array<Row, 10> kTableS = {{
    {"{0.4}", "{0.4}", "∅", "∅", "{0.6}", "∅", "∅", "{0}", "∅", "{1}"},
    {"{1}", "∅", "∅", "∅", "{0,1}", "∅", "{1}", "{0.2}", "∅", "∅"},
    {"∅", "∅", "∅", "∅", "∅", "{0,1}", "{0.55}", "{1}", "∅", "∅"},
    {"∅", "{0.64}", "{0.6}", "{1}", "∅", "∅", "∅", "∅", "{0,1}", "{1}"},
    {"{0.4}", "∅", "{0.6}", "{1}", "{0.3}", "∅", "∅", "{0}", "{0}", "{0}"},
    {"∅", "∅", "∅", "∅", "∅", "∅", "∅", "{0.2}", "{0.2,0.8}", "∅"},
    {"∅", "{0}", "{0,1}", "∅", "∅", "∅", "{1}", "{1}", "∅", "{0.6}"},
    {"∅", "∅", "∅", "∅", "∅", "∅", "∅", "∅", "{0,0.8}", "∅"},
    {"∅", "∅", "{0,1}", "∅", "{0}", "∅", "∅", "{0}", "{1}", "{0.6}"},
    {"∅", "∅", "∅", "∅", "∅", "{0,1}", "∅", "{1}", "∅", "∅"},
}};

inline const Row kTableCols = {"[0.4,1]", "[0.4,0.64]", "[0,0.6]", "[0,1]", "[0.3,0.6]",
                               "[0,1]", "[0,0.55]", "[0.2,1]", "[0.2,0.8]", "{0.6}"};

inline const std::array<Row, 10> kTableSPrime = {{
    {"{0.4}", "{0.4}", "∅", "∅", "{0.6}", "∅", "∅", "∅", "∅", "∅"},
    {"{1}", "∅", "∅", "∅", "∅", "∅", "∅", "{0.2}", "∅", "∅"},
    {"∅", "∅", "∅", "∅", "∅", "{0,1}", "{0.55}", "{1}", "∅", "∅"},
    {"∅", "{0.64}", "{0.6}", "{1}", "∅", "∅", "∅", "∅", "∅", "∅"},
    {"{0.4}", "∅", "{0.6}", "{1}", "{0.3}", "∅", "∅", "∅", "∅", "∅"},
    {"∅", "∅", "∅", "∅", "∅", "∅", "∅", "{0.2}", "{0.2,0.8}", "∅"},
    {"∅", "∅", "{0}", "∅", "∅", "∅", "∅", "{1}", "∅", "{0.6}"},
    {"∅", "∅", "∅", "∅", "∅", "∅", "∅", "∅", "{0.8}", "∅"},
    {"∅", "∅", "{0}", "∅", "∅", "∅", "∅", "∅", "∅", "{0.6}"},
    {"∅", "∅", "∅", "∅", "∅", "{0,1}", "∅", "{1}", "∅", "∅"},
}};

// The reduced table left after simplification: rows 1, 4, 5 and columns 1-3.
inline const std::array<std::array<const char*, 3>, 3> kTableReduced = {{
    {"{0.4}", "{0.4}", "∅"},
    {"∅", "{0.64}", "{0.6}"},
    {"{0.4}", "∅", "{0.6}"},
}};

// Cells where the reference tables disagree with the printed coefficients
// (a_minus[7][9] = 0.18 >= b[7] = 0.15 makes cell (7,9) solvable), 0-based.
struct Cell {
  char table;  // 'I', 'S', 'C' (column range) or 'P' (S')
  std::size_t row;
  std::size_t col;
};
inline const std::array<Cell, 5> kKnownConflicts = {{
    {'I', 6, 8}, {'S', 6, 8}, {'C', 0, 8}, {'P', 5, 8}, {'P', 6, 8}}};

// Parses "∅", "{v}", "{v1,v2}" and "[lo,hi]".
inline bfre::SetForm parse_set(const std::string& text) {
  if (text == "∅") return bfre::SetForm::empty();
  std::vector<double> v;
  const char* p = text.c_str() + 1;
  while (*p && *p != '}' && *p != ']') {
    char* end = nullptr;
    v.push_back(std::strtod(p, &end));
    p = *end == ',' ? end + 1 : end;
  }
  if (text[0] == '[') return bfre::SetForm::interval(v.at(0), v.at(1));
  return v.size() == 1 ? bfre::SetForm::point(v[0]) : bfre::SetForm::two_points(v.at(0), v.at(1));
}

}  // namespace fixtures
