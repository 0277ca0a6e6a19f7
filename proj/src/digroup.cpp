#include "skewbrace/digroup.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace skewbrace {

bool IdealSet::contains(Element a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

Digroup make_digroup(FiniteGroup star, FiniteGroup circ) {
  if (star.order != circ.order)
    throw Error(errc::size_mismatch,
                "the two group structures have different orders");
  return Digroup{std::move(star), std::move(circ)};
}

Digroup trivial_digroup(FiniteGroup g) {
  FiniteGroup copy = g;
  return Digroup{std::move(g), std::move(copy)};
}

Digroup opposite_digroup(const Digroup& d) { return Digroup{d.circ, d.star}; }

Element lambda_apply(const Digroup& d, Element a, Element b) {
  return d.star.mul(d.star.inv[a], d.circ.mul(a, b));
}

ElementMap lambda_map(const Digroup& d, Element a) {
  if (a < 0 || a >= d.order())
    throw Error(errc::index_out_of_range, "lambda_map: bad element");
  ElementMap f{d.order(), d.order(), std::vector<Element>(d.order())};
  for (Element b = 0; b < d.order(); ++b) f.images[b] = lambda_apply(d, a, b);
  return f;
}

ElementMap lambda_inverse_map(const Digroup& d, Element a) {
  if (a < 0 || a >= d.order())
    throw Error(errc::index_out_of_range, "lambda_inverse_map: bad element");
  ElementMap f{d.order(), d.order(), std::vector<Element>(d.order())};
  for (Element c = 0; c < d.order(); ++c)
    f.images[c] = d.circ.mul(d.circ.inv[a], d.star.mul(a, c));
  return f;
}

bool is_skew_brace(const Digroup& d) {
  const int n = d.order();
  for (Element a = 0; a < n; ++a) {
    Element ai = d.star.inv[a];
    for (Element b = 0; b < n; ++b) {
      Element ab = d.circ.mul(a, b);
      Element left = d.star.mul(ab, ai);
      for (Element c = 0; c < n; ++c)
        if (d.circ.mul(a, d.star.mul(b, c)) !=
            d.star.mul(left, d.circ.mul(a, c)))
          return false;
    }
  }
  return true;
}

bool is_skew_brace_via_lambda(const Digroup& d) {
  const int n = d.order();
  std::vector<ElementMap> lam;
  lam.reserve(n);
  for (Element a = 0; a < n; ++a) {
    ElementMap f = lambda_map(d, a);
    if (!is_bijective(f) || !is_homomorphism(f, d.star, d.star)) return false;
    lam.push_back(std::move(f));
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (lam[d.circ.mul(a, b)] != compose(lam[a], lam[b])) return false;
  return true;
}

bool is_subdigroup(const Digroup& d, const std::vector<Element>& s) {
  return is_subgroup(d.star, s) && is_subgroup(d.circ, s);
}

std::vector<std::vector<Element>> subdigroups(const Digroup& d) {
  std::vector<std::vector<Element>> out;
  for (auto& s : subgroups(d.star))
    if (is_subgroup(d.circ, s)) out.push_back(std::move(s));
  return out;
}

namespace {

std::vector<Element> coset(const FiniteGroup& g, Element a,
                           const std::vector<Element>& s) {
  std::vector<Element> c;
  c.reserve(s.size());
  for (Element i : s) c.push_back(g.mul(a, i));
  std::sort(c.begin(), c.end());
  return c;
}

bool binormal(const Digroup& d, const std::vector<Element>& s) {
  return is_subgroup(d.star, s) && is_subgroup(d.circ, s) &&
         is_normal(d.star, s) && is_normal(d.circ, s);
}

}  // namespace

bool is_ideal(const Digroup& d, const std::vector<Element>& s) {
  if (!binormal(d, s)) return false;
  for (Element a = 0; a < d.order(); ++a)
    if (coset(d.star, a, s) != coset(d.circ, a, s)) return false;
  return true;
}

bool is_ideal_via_lambda(const Digroup& d, const std::vector<Element>& s) {
  if (!binormal(d, s)) return false;
  std::vector<bool> in(d.order(), false);
  for (Element e : s) in[e] = true;
  for (Element a = 0; a < d.order(); ++a)
    for (Element i : s)
      if (!in[lambda_apply(d, a, i)]) return false;
  return true;
}

IdealSet as_ideal(const Digroup& d, std::vector<Element> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!is_ideal(d, s))
    throw Error(errc::not_an_ideal, "set is not an ideal");
  return IdealSet{std::move(s)};
}

std::vector<IdealSet> ideals(const Digroup& d, int max_order) {
  if (d.order() > max_order)
    throw Error(errc::order_bound_exceeded,
                "ideals: order " + std::to_string(d.order()) +
                    " exceeds bound " + std::to_string(max_order));
  std::vector<IdealSet> out;
  for (auto& s : normal_subgroups(d.star))
    if (is_ideal(d, s)) out.push_back(IdealSet{std::move(s)});
  return out;
}

Quotient quotient(const Digroup& d, const IdealSet& ideal) {
  if (!is_ideal(d, ideal.elements))
    throw Error(errc::not_an_ideal, "quotient by a non-ideal");
  const int n = d.order();

  std::vector<std::vector<Element>> cosets;
  std::vector<int> coset_of(n, -1);
  for (Element a = 0; a < n; ++a) {
    if (coset_of[a] != -1) continue;
    std::vector<Element> c = coset(d.star, a, ideal.elements);
    for (Element e : c) coset_of[e] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  // Scanning a = 0,1,... already yields cosets ordered by least member.
  const int q = static_cast<int>(cosets.size());
  auto build = [&](const FiniteGroup& g) {
    std::vector<std::vector<Element>> t(q, std::vector<Element>(q));
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y)
        t[x][y] = coset_of[g.mul(cosets[x][0], cosets[y][0])];
    return make_group(std::move(t));
  };
  Digroup qd = make_digroup(build(d.star), build(d.circ));
  ElementMap proj{n, q, std::vector<Element>(coset_of.begin(), coset_of.end())};
  return Quotient{std::move(qd), std::move(proj), std::move(cosets)};
}

namespace {

// Search state for the row-based table enumeration: row a, when present, is
// the left translation b -> a o b.
struct RowSearch {
  int n;
  std::vector<std::vector<Element>> rows;  // empty vector = not yet chosen
  std::vector<std::vector<std::vector<Element>>>* out;

  bool defined(int a) const { return !rows[a].empty(); }

  bool column_clash(const std::vector<Element>& p, int row_index) const {
    for (int d = 0; d < n; ++d)
      if (d != row_index && defined(d))
        for (int x = 0; x < n; ++x)
          if (rows[d][x] == p[x]) return true;
    return false;
  }

  // Enforce rows[a] o rows[b] == rows[rows[a][b]] until stable.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (!defined(a)) continue;
        for (int b = 0; b < n; ++b) {
          if (!defined(b)) continue;
          Element c = rows[a][b];
          std::vector<Element> prod(n);
          for (int x = 0; x < n; ++x) prod[x] = rows[a][rows[b][x]];
          if (defined(c)) {
            if (rows[c] != prod) return false;
          } else {
            if (column_clash(prod, c)) return false;
            rows[c] = std::move(prod);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  // Candidate rows for index a in lexicographic order.
  void candidates(int a, int pos, std::vector<Element>& p,
                  std::vector<bool>& used) {
    if (pos == n) {
      if (!column_clash(p, a)) {
        RowSearch next = *this;
        next.rows[a] = p;
        next.run();
      }
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool clash = false;
      for (int d = 0; d < n && !clash; ++d)
        if (defined(d) && rows[d][pos] == v) clash = true;
      if (clash) continue;
      used[v] = true;
      p[pos] = v;
      candidates(a, pos + 1, p, used);
      used[v] = false;
    }
  }

  void run() {
    if (!propagate()) return;
    int a = -1;
    for (int i = 0; i < n; ++i)
      if (!defined(i)) {
        a = i;
        break;
      }
    if (a == -1) {
      out->push_back(rows);
      return;
    }
    std::vector<Element> p(n);
    std::vector<bool> used(n, false);
    p[0] = a;
    used[a] = true;
    candidates(a, 1, p, used);
  }
};

}  // namespace

std::vector<Digroup> enumerate_digroups(const FiniteGroup& star,
                                        bool braces_only, int max_order) {
  if (star.order > max_order)
    throw Error(errc::order_bound_exceeded,
                "enumerate_digroups: order " + std::to_string(star.order) +
                    " exceeds bound " + std::to_string(max_order));
  const int n = star.order;
  std::vector<std::vector<std::vector<Element>>> tables;
  RowSearch search{n, std::vector<std::vector<Element>>(n), &tables};
  search.rows[0] = identity_map(n).images;
  search.run();

  std::sort(tables.begin(), tables.end());
  std::vector<Digroup> out;
  for (auto& t : tables) {
    Digroup d = make_digroup(star, make_group(std::move(t)));
    if (!braces_only || is_skew_brace(d)) out.push_back(std::move(d));
  }
  return out;
}

bool is_digroup_morphism(const ElementMap& f, const Digroup& a,
                         const Digroup& b) {
  return is_homomorphism(f, a.star, b.star) &&
         is_homomorphism(f, a.circ, b.circ);
}

namespace {

// Generating sequence under both operations together.
std::vector<Element> digroup_generators(const Digroup& d) {
  const int n = d.order();
  auto closure = [&](const std::vector<Element>& gens) {
    std::vector<bool> in(n, false);
    in[0] = true;
    std::vector<Element> members{0};
    for (Element e : gens)
      if (!in[e]) {
        in[e] = true;
        members.push_back(e);
      }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) {
        for (Element p : {d.star.mul(members[i], members[j]),
                          d.circ.mul(members[i], members[j])}) {
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
          }
        }
      }
    return members;
  };
  std::vector<Element> gens;
  while (static_cast<int>(closure(gens).size()) < n) {
    std::vector<Element> reach = closure(gens);
    std::vector<bool> in(n, false);
    for (Element e : reach) in[e] = true;
    for (Element e = 0; e < n; ++e)
      if (!in[e]) {
        gens.push_back(e);
        break;
      }
  }
  return gens;
}

}  // namespace

std::optional<ElementMap> digroup_isomorphic(const Digroup& a,
                                             const Digroup& b,
                                             int max_order) {
  if (a.order() > max_order || b.order() > max_order)
    throw Error(errc::order_bound_exceeded,
                "digroup_isomorphic: order exceeds bound " +
                    std::to_string(max_order));
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();

  std::vector<Element> gens = digroup_generators(a);

  // Derivations of the whole carrier from the generators under both ops.
  struct Step {
    Element out, lhs, rhs;
    bool star;
  };
  std::vector<Step> steps;
  {
    std::vector<bool> known(n, false);
    known[0] = true;
    std::vector<Element> pool{0};
    for (Element e : gens)
      if (!known[e]) {
        known[e] = true;
        pool.push_back(e);
      }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j) {
        Element p = a.star.mul(pool[i], pool[j]);
        if (!known[p]) {
          known[p] = true;
          steps.push_back({p, pool[i], pool[j], true});
          pool.push_back(p);
        }
        Element q = a.circ.mul(pool[i], pool[j]);
        if (!known[q]) {
          known[q] = true;
          steps.push_back({q, pool[i], pool[j], false});
          pool.push_back(q);
        }
      }
  }

  std::vector<Element> image(gens.size(), 0);
  std::optional<ElementMap> result;

  auto try_candidate = [&]() {
    std::vector<Element> map(n, -1);
    map[0] = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (map[gens[i]] != -1 && map[gens[i]] != image[i]) return;
      map[gens[i]] = image[i];
    }
    for (const Step& s : steps) {
      const FiniteGroup& g = s.star ? b.star : b.circ;
      Element v = g.mul(map[s.lhs], map[s.rhs]);
      if (map[s.out] != -1 && map[s.out] != v) return;
      map[s.out] = v;
    }
    ElementMap f{n, n, std::move(map)};
    if (!is_bijective(f)) return;
    if (!is_digroup_morphism(f, a, b)) return;
    result = std::move(f);
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (result) return;
    if (i == gens.size()) {
      try_candidate();
      return;
    }
    for (Element h = 0; h < n && !result; ++h) {
      if (a.star.element_order(gens[i]) != b.star.element_order(h)) continue;
      if (a.circ.element_order(gens[i]) != b.circ.element_order(h)) continue;
      image[i] = h;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return result;
}

Digroup s3c6_brace() {
  FiniteGroup star = catalog("s3");
  // circ-powers of (12): exponent e corresponds to carrier index
  // exp_to_idx[e], an involution of the index set.
  const std::array<int, 6> exp_to_idx{0, 1, 5, 3, 4, 2};
  std::array<int, 6> idx_to_exp{};
  for (int e = 0; e < 6; ++e) idx_to_exp[exp_to_idx[e]] = e;
  std::vector<std::vector<Element>> circ(6, std::vector<Element>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      circ[i][j] = exp_to_idx[(idx_to_exp[i] + idx_to_exp[j]) % 6];
  return make_digroup(std::move(star), make_group(std::move(circ)));
}

Digroup catalog_digroup(const std::string& name) {
  if (name == "s3c6") return s3c6_brace();
  return trivial_digroup(catalog(name));
}

}  // namespace skewbrace
