#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "skewbrace/digroup.hpp"

namespace skewbrace {

// Action triple of a digroup Y on a digroup K:
//   phi_star[y](k) = y^{-*} * k * y   (antihomomorphism (Y,*) -> Aut(K,*))
//   phi_circ[y](k) = y^{-o} o k o y   (antihomomorphism (Y,o) -> Aut(K,o))
//   lambda[y](k)   = y^{-*} * (y o k) (pointed-set morphism, lambda[0] = id)
// in the inner case; in general any triple satisfying those laws.
struct DigroupAction {
  Digroup Y;
  Digroup K;
  std::vector<ElementMap> phi_star;
  std::vector<ElementMap> phi_circ;
  std::vector<ElementMap> lambda;
};

// Empty string when every action law holds, else a description.
std::string action_violation(const DigroupAction& act);
void validate_action(const DigroupAction& act);

// Pair (y,k) <-> index y*|K|+k on the product carrier.
inline Element pair_index(const DigroupAction& act, Element y, Element k) {
  return y * act.K.order() + k;
}
inline std::pair<Element, Element> pair_split(const DigroupAction& act,
                                              Element a) {
  return {a / act.K.order(), a % act.K.order()};
}

// Inner semidirect-product decomposition D = B o I: a subdigroup, an ideal
// meeting it trivially, and the idempotent endomorphism b o i -> b.
struct InnerDecomposition {
  std::vector<Element> subgroup;  // B, sorted
  IdealSet ideal;                 // I
  ElementMap retraction;          // e : D -> D

  bool trivial(int order) const {
    return static_cast<int>(subgroup.size()) == 1 ||
           static_cast<int>(subgroup.size()) == order;
  }
};

// All decompositions, ordered by (|B|, B, I); includes the two trivial ones.
std::vector<InnerDecomposition> idempotent_endomorphisms(
    const Digroup& d, int max_order = kDefaultMaxOrder);

// The eight equivalent characterisations of an inner semidirect product,
// each evaluated on its own: four product/uniqueness conditions in both
// operations and both orders, a retraction search, an idempotent search.
struct EquivalenceReport {
  std::array<bool, 8> condition{};
  bool all_equal() const {
    for (bool c : condition)
      if (c != condition[0]) return false;
    return true;
  }
  bool verdict() const { return condition[0]; }
};
EquivalenceReport check_equivalences(const Digroup& d,
                                     const std::vector<Element>& b_set,
                                     const std::vector<Element>& i_set);

// The three companions of i1 in a = b o i1 = i2 o b = b * i3 = i4 * b,
// computed from the conjugation and lambda formulas and verified against
// all four factorizations.
struct ComponentFactors {
  Element i2, i3, i4;
};
ComponentFactors component_formulas(const Digroup& d,
                                    const InnerDecomposition& dec, Element b,
                                    Element i1);

// Restrict conjugations and lambda to Y = B acting on K = I.
DigroupAction extract_action(const Digroup& d, const InnerDecomposition& dec);

// The digroup (Y x K, +, o) with
//   (y,k)+(y',k') = (y*y', (lambda_{y*y'})^{-1}(phi*_{y'}(lambda_y(k)) * lambda_{y'}(k')))
//   (y,k)o(y',k') = (yoy', phio_{y'}(k) o k')
Digroup outer_product(const DigroupAction& act);

// Skew-brace criterion for the outer product. Hypotheses (Y, K braces and
// lambda a homomorphism (Y,o) -> Aut(K,*)) are checked first; when they
// fail the result is false with the reason filled in.
struct BraceConditionResult {
  bool holds = false;
  std::string reason;
};
BraceConditionResult brace_condition(const DigroupAction& act);

// The same criterion split into a y-free equation and a y-transport
// equation; the conjunction matches brace_condition.
std::pair<bool, bool> corollary_split(const DigroupAction& act);

// The four generator-product identities of the outer product.
bool ppp_identities(const DigroupAction& act);

// Closed form for the +-inverse -(y,k); verified against the outer table
// and against the equivalent antihomomorphism rendering.
std::pair<Element, Element> outer_negation(const DigroupAction& act,
                                           std::pair<Element, Element> a);

// Closed form for lambda^{YxK}_{(y,k)}(y',k'); verified against the direct
// computation -(y,k) + ((y,k) o (y',k')) in the outer product.
std::pair<Element, Element> lambda_product_formula(
    const DigroupAction& act, std::pair<Element, Element> a,
    std::pair<Element, Element> b);

// alpha(y,k) = y o k, an isomorphism from the rebuilt outer product onto the
// parent; also checks the factorization alpha = gamma o beta and the diagram
// identity y * lambda_y(k) = y o k.
ElementMap alpha_isomorphism(const Digroup& d, const InnerDecomposition& dec);

struct RoundtripReport {
  int decompositions = 0;
  int nontrivial = 0;
  int succeeded = 0;
  bool all_ok() const { return succeeded == nontrivial; }
};
// extract -> outer -> alpha for every nontrivial decomposition.
RoundtripReport reconstruct_roundtrip(const Digroup& d,
                                      int max_order = kDefaultMaxOrder);

}  // namespace skewbrace
