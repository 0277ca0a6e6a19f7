#pragma once

#include <vector>

#include "skewbrace/digroup.hpp"

namespace skewbrace {

// Least ideal containing the seed: fixpoint of closure under both group
// operations, conjugation by every element in both groups, and every
// lambda_a. Finiteness turns lambda-stability into set equality.
IdealSet ideal_generated_by(const Digroup& d, const std::vector<Element>& seed,
                            int max_order = kDefaultMaxOrder);

// Ideal generated by the star commutators, the circ commutators, and the
// mixed elements (i o j)^{-*} * i * j. Commutators are [x,y] = x^-1 y^-1 x y
// in each group, matching the left-inverse conjugation convention.
IdealSet commutator_ideal(const Digroup& d, const IdealSet& lhs,
                          const IdealSet& rhs,
                          int max_order = kDefaultMaxOrder);

// Greatest ideal Z with [Z, D] trivial. Requires a skew brace.
IdealSet center(const Digroup& d, int max_order = kDefaultMaxOrder);

// { z : a*z = z*a, aoz = zoa and a*z = aoz for every a }.
std::vector<Element> center_elementwise(const Digroup& d);

struct LatticePair {
  IdealSet join;  // setwise star product, checked equal to the circ product
  IdealSet meet;  // intersection
};
LatticePair lattice_ops(const Digroup& d, const IdealSet& lhs,
                        const IdealSet& rhs);

}  // namespace skewbrace
