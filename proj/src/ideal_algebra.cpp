#include "skewbrace/ideal_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewbrace {

IdealSet ideal_generated_by(const Digroup& d, const std::vector<Element>& seed,
                            int max_order) {
  if (d.order() > max_order)
    throw Error(errc::order_bound_exceeded,
                "ideal_generated_by: order " + std::to_string(d.order()) +
                    " exceeds bound " + std::to_string(max_order));
  const int n = d.order();
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<Element> members{0};
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  for (Element e : seed) {
    if (e < 0 || e >= n)
      throw Error(errc::index_out_of_range, "seed element outside carrier");
    add(e);
  }

  // Worklist closure: every member eventually has its inverses, conjugates,
  // lambda images, and pairwise products (both orders) folded in.
  for (std::size_t i = 0; i < members.size(); ++i) {
    Element x = members[i];
    add(d.star.inv[x]);
    add(d.circ.inv[x]);
    for (Element a = 0; a < n; ++a) {
      add(d.star.conjugate(a, x));
      add(d.circ.conjugate(a, x));
      add(lambda_apply(d, a, x));
    }
    for (std::size_t j = 0; j <= i; ++j) {
      add(d.star.mul(x, members[j]));
      add(d.star.mul(members[j], x));
      add(d.circ.mul(x, members[j]));
      add(d.circ.mul(members[j], x));
    }
  }

  std::sort(members.begin(), members.end());
  if (!is_ideal(d, members))
    throw std::logic_error("closure did not produce an ideal");
  return IdealSet{std::move(members)};
}

IdealSet commutator_ideal(const Digroup& d, const IdealSet& lhs,
                          const IdealSet& rhs, int max_order) {
  if (!is_ideal(d, lhs.elements) || !is_ideal(d, rhs.elements))
    throw Error(errc::not_an_ideal, "commutator of non-ideals");
  std::vector<Element> gens;
  for (Element i : lhs.elements)
    for (Element j : rhs.elements) {
      gens.push_back(d.star.mul(
          d.star.mul(d.star.mul(d.star.inv[i], d.star.inv[j]), i), j));
      gens.push_back(d.circ.mul(
          d.circ.mul(d.circ.mul(d.circ.inv[i], d.circ.inv[j]), i), j));
      gens.push_back(
          d.star.mul(d.star.mul(d.star.inv[d.circ.mul(i, j)], i), j));
    }
  return ideal_generated_by(d, gens, max_order);
}

IdealSet center(const Digroup& d, int max_order) {
  if (!is_skew_brace(d))
    throw Error(errc::not_a_brace, "center of a non-brace");
  IdealSet whole{};
  whole.elements.resize(d.order());
  for (Element a = 0; a < d.order(); ++a) whole.elements[a] = a;

  std::vector<IdealSet> central;
  for (IdealSet& z : ideals(d, max_order))
    if (commutator_ideal(d, z, whole, max_order).size() == 1)
      central.push_back(std::move(z));

  const IdealSet* best = &central.front();
  for (const IdealSet& z : central)
    if (z.size() > best->size()) best = &z;
  for (const IdealSet& z : central)
    for (Element e : z.elements)
      if (!best->contains(e))
        throw std::logic_error("no greatest central ideal");
  return *best;
}

std::vector<Element> center_elementwise(const Digroup& d) {
  if (!is_skew_brace(d))
    throw Error(errc::not_a_brace, "center of a non-brace");
  std::vector<Element> out;
  for (Element z = 0; z < d.order(); ++z) {
    bool ok = true;
    for (Element a = 0; a < d.order() && ok; ++a)
      ok = d.star.mul(a, z) == d.star.mul(z, a) &&
           d.circ.mul(a, z) == d.circ.mul(z, a) &&
           d.star.mul(a, z) == d.circ.mul(a, z);
    if (ok) out.push_back(z);
  }
  return out;
}

LatticePair lattice_ops(const Digroup& d, const IdealSet& lhs,
                        const IdealSet& rhs) {
  if (!is_ideal(d, lhs.elements) || !is_ideal(d, rhs.elements))
    throw Error(errc::not_an_ideal, "lattice_ops on non-ideals");

  auto setwise = [&](const FiniteGroup& g) {
    std::vector<Element> out;
    std::vector<bool> in(d.order(), false);
    for (Element i : lhs.elements)
      for (Element j : rhs.elements) {
        Element p = g.mul(i, j);
        if (!in[p]) {
          in[p] = true;
          out.push_back(p);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<Element> join_star = setwise(d.star);
  if (join_star != setwise(d.circ) || !is_ideal(d, join_star))
    throw std::logic_error("setwise products disagree or are not an ideal");

  std::vector<Element> meet;
  for (Element e : lhs.elements)
    if (rhs.contains(e)) meet.push_back(e);
  if (!is_ideal(d, meet))
    throw std::logic_error("intersection of ideals is not an ideal");
  return LatticePair{IdealSet{std::move(join_star)}, IdealSet{std::move(meet)}};
}

}  // namespace skewbrace
