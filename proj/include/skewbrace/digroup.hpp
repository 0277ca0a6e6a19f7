#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewbrace/finite_group.hpp"

namespace skewbrace {

// One carrier with two group structures sharing the identity index 0.
struct Digroup {
  FiniteGroup star;
  FiniteGroup circ;
  int order() const { return star.order; }
};

// A subset verified to be an ideal of some digroup: normal under both
// operations with identical star- and circ-cosets. Always kept sorted.
struct IdealSet {
  std::vector<Element> elements;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(Element a) const;
  friend bool operator==(const IdealSet&, const IdealSet&) = default;
};

Digroup make_digroup(FiniteGroup star, FiniteGroup circ);
Digroup trivial_digroup(FiniteGroup g);
// Swaps the roles of the two operations.
Digroup opposite_digroup(const Digroup& d);

// lambda_a(b) = a^{-*} * (a o b)
Element lambda_apply(const Digroup& d, Element a, Element b);
ElementMap lambda_map(const Digroup& d, Element a);
// The two-sided inverse c -> a^{-o} o (a * c).
ElementMap lambda_inverse_map(const Digroup& d, Element a);

// a o (b * c) == (a o b) * a^{-*} * (a o c) over all triples.
bool is_skew_brace(const Digroup& d);
// Same verdict through the lambda route: every lambda_a is a star
// automorphism and a -> lambda_a is a morphism out of (D, o).
bool is_skew_brace_via_lambda(const Digroup& d);

bool is_subdigroup(const Digroup& d, const std::vector<Element>& s);
std::vector<std::vector<Element>> subdigroups(const Digroup& d);

// Ideal test by coset equality: bi-normal and a*I == aoI for every a.
bool is_ideal(const Digroup& d, const std::vector<Element>& s);
// Ideal test by lambda stability: bi-normal and lambda_a(I) inside I.
bool is_ideal_via_lambda(const Digroup& d, const std::vector<Element>& s);
IdealSet as_ideal(const Digroup& d, std::vector<Element> s);
std::vector<IdealSet> ideals(const Digroup& d,
                             int max_order = kDefaultMaxOrder);

struct Quotient {
  Digroup digroup;
  ElementMap projection;                     // parent -> cosets
  std::vector<std::vector<Element>> cosets;  // indexed by quotient element
};
// Digroup on the cosets of an ideal, cosets ordered by least member.
Quotient quotient(const Digroup& d, const IdealSet& ideal);

// Every group table o on the carrier of star with identity 0, found by
// backtracking over rows (the rows of a group table are its left
// translations, so closure under composition is exactly associativity).
std::vector<Digroup> enumerate_digroups(const FiniteGroup& star,
                                        bool braces_only,
                                        int max_order = 8);

// A bijection fixing 0 that is a homomorphism for both operations, if any.
std::optional<ElementMap> digroup_isomorphic(const Digroup& a,
                                             const Digroup& b,
                                             int max_order = kDefaultMaxOrder);

bool is_digroup_morphism(const ElementMap& f, const Digroup& a,
                         const Digroup& b);

// The order-6 skew brace with star = S3 and circ the cyclic group generated
// by (12): circ-powers (12)^1..(12)^6 are (12),(132),(23),(123),(13),id.
Digroup s3c6_brace();

// "s3c6" plus every catalog() group as a trivial digroup (G, G).
Digroup catalog_digroup(const std::string& name);

}  // namespace skewbrace
