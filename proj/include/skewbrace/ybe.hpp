#pragma once

#include <vector>

#include "skewbrace/digroup.hpp"

namespace skewbrace {

// r(x,y) = (first[x][y], second[x][y]), a bijection of X x X.
struct SetSolution {
  int n = 0;
  std::vector<std::vector<Element>> first;
  std::vector<std::vector<Element>> second;
};

// Validates shape, range, and bijectivity of the combined pair map.
SetSolution make_solution(int n, std::vector<std::vector<Element>> first,
                          std::vector<std::vector<Element>> second);

// (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) over all triples.
bool braid_check(const SetSolution& r);

// y -> first[x][y] bijective for each x, x -> second[x][y] for each y.
bool nondegeneracy_check(const SetSolution& r);

// r(x,y) = (lambda_x(y), lambda_x(y)^{-o} o x o y). Requires a skew brace.
SetSolution solution_from_brace(const Digroup& d);

SetSolution flip_solution(int n);
SetSolution identity_solution(int n);

}  // namespace skewbrace
