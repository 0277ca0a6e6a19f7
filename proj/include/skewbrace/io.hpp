#pragma once

#include <string>
#include <vector>

#include "skewbrace/digroup.hpp"
#include "skewbrace/semidirect.hpp"
#include "skewbrace/ybe.hpp"

namespace skewbrace {

// DGT text format, '#' comments allowed:
//   digroup <n>
//   star
//   <n rows of n indices>
//   circ
//   <n rows of n indices>
// Parsing validates through make_group/make_digroup, so a table with the
// identity off index 0 is rejected with the violated invariant.
Digroup parse_dgt(const std::string& text);
std::string emit_dgt(const Digroup& d);

// ACTION text format, Y and K supplied separately:
//   action <|Y|> <|K|>
// then for each y three lines "phi_star:", "phi_circ:", "lambda:" with |K|
// indices each. Parsing is structural; validate_action decides the math.
DigroupAction parse_action(const std::string& text, const Digroup& y,
                           const Digroup& k);
std::string emit_action(const DigroupAction& act);

// Solution text format: "ybe <n>" then n*n lines "x y fx fy" row-major.
std::string emit_solution(const SetSolution& r);
SetSolution parse_solution(const std::string& text);

// Comma-separated element list, e.g. "0,4,5".
std::vector<Element> parse_index_list(const std::string& text);

}  // namespace skewbrace
