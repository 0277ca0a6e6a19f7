#pragma once

#include <string>
#include <vector>

#include "skewbrace/errors.hpp"

namespace skewbrace {

using Element = int;

// Total map between two carriers, as plain image data. Doubles as a
// permutation when source and target orders match and the images are a
// bijection. Pointed-set morphisms are the special case images[0] == 0.
struct ElementMap {
  int source_order = 0;
  int target_order = 0;
  std::vector<Element> images;

  Element operator()(Element x) const { return images[x]; }
  friend bool operator==(const ElementMap&, const ElementMap&) = default;
};

ElementMap identity_map(int n);
bool is_bijective(const ElementMap& f);
// compose(f, g): apply g first, then f.
ElementMap compose(const ElementMap& f, const ElementMap& g);
ElementMap inverse_of(const ElementMap& f);

// Group on the carrier {0, ..., order-1} given by its Cayley table.
// The identity element is always index 0.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<Element>> table;
  std::vector<Element> inv;

  Element mul(Element a, Element b) const { return table[a][b]; }
  Element inverse(Element a) const { return inv[a]; }
  // g^{-1} * x * g (inverse on the left).
  Element conjugate(Element g, Element x) const {
    return mul(mul(inv[g], x), g);
  }
  int element_order(Element a) const;
  bool is_abelian() const;
};

// Validates the table (identity at 0, two-sided inverses, associativity)
// and fills in the inverse table.
FiniteGroup make_group(std::vector<std::vector<Element>> table);

bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& s);
bool is_normal(const FiniteGroup& g, const std::vector<Element>& s);
ElementMap conjugation_map(const FiniteGroup& g, Element a);

bool is_homomorphism(const ElementMap& f, const FiniteGroup& g,
                     const FiniteGroup& h);
bool is_antihomomorphism(const ElementMap& f, const FiniteGroup& g,
                         const FiniteGroup& h);

inline constexpr int kDefaultMaxOrder = 12;

// All automorphisms of g, found by backtracking over generator images,
// sorted lexicographically by image array.
std::vector<ElementMap> automorphisms(const FiniteGroup& g,
                                      int max_order = kDefaultMaxOrder);

// Every subgroup (as a sorted element list), smallest first.
std::vector<std::vector<Element>> subgroups(const FiniteGroup& g);
std::vector<std::vector<Element>> normal_subgroups(const FiniteGroup& g);

// Greedy generating sequence: repeatedly adjoin the smallest element
// outside the closure of what has been picked so far.
std::vector<Element> generating_set(const FiniteGroup& g);

// Closure of a subset under products (hence inverses, the group is finite).
std::vector<Element> subgroup_closure(const FiniteGroup& g,
                                      std::vector<Element> seed);

// Built-in tables: cyclic(n), klein4, s3, s4, dihedral(n), quaternion8.
// s3 indexing: 0=id, 1=(12), 2=(13), 3=(23), 4=(123), 5=(132), with the
// product a*b meaning "apply b first". s4 indexing: the 24 permutations of
// four points in lexicographic one-line order, same composition rule.
FiniteGroup catalog(const std::string& name);

}  // namespace skewbrace
