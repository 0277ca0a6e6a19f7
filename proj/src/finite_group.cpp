#include "skewbrace/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skewbrace {

const char* to_string(errc code) {
  switch (code) {
    case errc::malformed_table: return "MalformedTable";
    case errc::no_identity_at_zero: return "NoIdentityAtZero";
    case errc::missing_inverse: return "MissingInverse";
    case errc::not_associative: return "NotAssociative";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::not_a_subdigroup: return "NotASubdigroup";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::not_a_brace: return "NotABrace";
    case errc::order_bound_exceeded: return "OrderBoundExceeded";
    case errc::unknown_name: return "UnknownName";
    case errc::element_not_in_component: return "ElementNotInComponent";
    case errc::kernel_not_invariant: return "KernelNotInvariant";
    case errc::invalid_action: return "InvalidAction";
    case errc::decomposition_invalid: return "DecompositionInvalid";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

ElementMap identity_map(int n) {
  ElementMap f{n, n, std::vector<Element>(n)};
  std::iota(f.images.begin(), f.images.end(), 0);
  return f;
}

bool is_bijective(const ElementMap& f) {
  if (f.source_order != f.target_order) return false;
  std::vector<bool> hit(f.target_order, false);
  for (Element y : f.images) {
    if (y < 0 || y >= f.target_order || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

ElementMap compose(const ElementMap& f, const ElementMap& g) {
  if (g.target_order != f.source_order)
    throw Error(errc::size_mismatch, "compose: map sizes do not line up");
  ElementMap h{g.source_order, f.target_order, {}};
  h.images.reserve(g.source_order);
  for (Element x = 0; x < g.source_order; ++x)
    h.images.push_back(f.images[g.images[x]]);
  return h;
}

ElementMap inverse_of(const ElementMap& f) {
  if (!is_bijective(f))
    throw Error(errc::size_mismatch, "inverse_of: map is not a bijection");
  ElementMap g{f.target_order, f.source_order,
               std::vector<Element>(f.source_order)};
  for (Element x = 0; x < f.source_order; ++x) g.images[f.images[x]] = x;
  return g;
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  Element x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order; ++a)
    for (Element b = a + 1; b < order; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteGroup make_group(std::vector<std::vector<Element>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(errc::malformed_table, "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(errc::malformed_table, "table is not square");
    for (Element e : row)
      if (e < 0 || e >= n)
        throw Error(errc::malformed_table, "entry out of range");
  }
  for (Element a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw Error(errc::no_identity_at_zero,
                  "index 0 is not a two-sided identity");

  std::vector<Element> inv(n, -1);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0)
      throw Error(errc::missing_inverse, "element " + std::to_string(a) +
                                             " has no two-sided inverse");
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(errc::not_associative, "associativity fails at (" +
                                                 std::to_string(a) + "," +
                                                 std::to_string(b) + "," +
                                                 std::to_string(c) + ")");

  return FiniteGroup{n, std::move(table), std::move(inv)};
}

namespace {

void check_in_range(const FiniteGroup& g, const std::vector<Element>& s) {
  for (Element e : s)
    if (e < 0 || e >= g.order)
      throw Error(errc::index_out_of_range,
                  "element " + std::to_string(e) + " outside the carrier");
}

}  // namespace

bool is_subgroup(const FiniteGroup& g, const std::vector<Element>& s) {
  check_in_range(g, s);
  std::vector<bool> in(g.order, false);
  for (Element e : s) in[e] = true;
  if (!in[0]) return false;
  for (Element a : s) {
    if (!in[g.inv[a]]) return false;
    for (Element b : s)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const std::vector<Element>& s) {
  if (!is_subgroup(g, s))
    throw Error(errc::not_a_subgroup, "normality asked of a non-subgroup");
  std::vector<bool> in(g.order, false);
  for (Element e : s) in[e] = true;
  for (Element x = 0; x < g.order; ++x)
    for (Element a : s)
      if (!in[g.conjugate(x, a)]) return false;
  return true;
}

ElementMap conjugation_map(const FiniteGroup& g, Element a) {
  if (a < 0 || a >= g.order)
    throw Error(errc::index_out_of_range, "conjugation_map: bad element");
  ElementMap f{g.order, g.order, std::vector<Element>(g.order)};
  for (Element x = 0; x < g.order; ++x) f.images[x] = g.conjugate(a, x);
  return f;
}

bool is_homomorphism(const ElementMap& f, const FiniteGroup& g,
                     const FiniteGroup& h) {
  if (f.source_order != g.order || f.target_order != h.order)
    throw Error(errc::size_mismatch, "map does not match the groups");
  for (Element a = 0; a < g.order; ++a)
    for (Element b = 0; b < g.order; ++b)
      if (f.images[g.mul(a, b)] != h.mul(f.images[a], f.images[b]))
        return false;
  return true;
}

bool is_antihomomorphism(const ElementMap& f, const FiniteGroup& g,
                         const FiniteGroup& h) {
  if (f.source_order != g.order || f.target_order != h.order)
    throw Error(errc::size_mismatch, "map does not match the groups");
  for (Element a = 0; a < g.order; ++a)
    for (Element b = 0; b < g.order; ++b)
      if (f.images[g.mul(a, b)] != h.mul(f.images[b], f.images[a]))
        return false;
  return true;
}

std::vector<Element> subgroup_closure(const FiniteGroup& g,
                                      std::vector<Element> seed) {
  std::vector<bool> in(g.order, false);
  in[0] = true;
  std::vector<Element> members{0};
  for (Element e : seed)
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      Element p = g.mul(members[i], members[j]);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<Element> closure{0};
  while (static_cast<int>(closure.size()) < g.order) {
    Element next = -1;
    std::vector<bool> in(g.order, false);
    for (Element e : closure) in[e] = true;
    for (Element e = 0; e < g.order; ++e)
      if (!in[e]) {
        next = e;
        break;
      }
    gens.push_back(next);
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

std::vector<ElementMap> automorphisms(const FiniteGroup& g, int max_order) {
  if (g.order > max_order)
    throw Error(errc::order_bound_exceeded,
                "automorphisms: order " + std::to_string(g.order) +
                    " exceeds bound " + std::to_string(max_order));
  const int n = g.order;
  std::vector<Element> gens = generating_set(g);

  // Derivation order: every element as a product of two already-known ones,
  // starting from the identity and the generators.
  struct Step {
    Element out, a, b;
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
        Element p = g.mul(pool[i], pool[j]);
        if (!known[p]) {
          known[p] = true;
          steps.push_back({p, pool[i], pool[j]});
          pool.push_back(p);
        }
      }
  }

  std::vector<int> orders(n);
  for (Element a = 0; a < n; ++a) orders[a] = g.element_order(a);

  std::vector<ElementMap> found;
  std::vector<Element> image(gens.size(), 0);

  auto try_candidate = [&]() {
    std::vector<Element> map(n, -1);
    map[0] = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (map[gens[i]] != -1 && map[gens[i]] != image[i]) return;
      map[gens[i]] = image[i];
    }
    for (const Step& s : steps) {
      Element v = g.mul(map[s.a], map[s.b]);
      if (map[s.out] != -1 && map[s.out] != v) return;
      map[s.out] = v;
    }
    ElementMap f{n, n, std::move(map)};
    if (!is_bijective(f)) return;
    if (!is_homomorphism(f, g, g)) return;
    found.push_back(std::move(f));
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      try_candidate();
      return;
    }
    for (Element h = 0; h < n; ++h) {
      if (orders[h] != orders[gens[i]]) continue;
      image[i] = h;
      self(self, i + 1);
    }
  };
  rec(rec, 0);

  std::sort(found.begin(), found.end(),
            [](const ElementMap& a, const ElementMap& b) {
              return a.images < b.images;
            });
  return found;
}

std::vector<std::vector<Element>> subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<Element>> queue{{0}};
  seen.insert({0});
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<Element> s = queue[i];
    std::vector<bool> in(g.order, false);
    for (Element e : s) in[e] = true;
    for (Element x = 0; x < g.order; ++x) {
      if (in[x]) continue;
      std::vector<Element> bigger = s;
      bigger.push_back(x);
      std::vector<Element> t = subgroup_closure(g, std::move(bigger));
      if (seen.insert(t).second) queue.push_back(std::move(t));
    }
  }
  std::vector<std::vector<Element>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<Element>& a, const std::vector<Element>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

std::vector<std::vector<Element>> normal_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  for (auto& s : subgroups(g))
    if (is_normal(g, s)) out.push_back(std::move(s));
  return out;
}

namespace {

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(errc::unknown_name, "cyclic order must be >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return make_group(std::move(t));
}

FiniteGroup klein4_group() {
  std::vector<std::vector<Element>> t(4, std::vector<Element>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return make_group(std::move(t));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw Error(errc::unknown_name, "dihedral parameter must be >= 1");
  const int m = 2 * n;
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x < n && y < n) t[x][y] = (x + y) % n;
      else if (x < n) t[x][y] = (y + x - n) % n + n;
      else if (y < n) t[x][y] = (x - n - y + n) % n + n;
      else t[x][y] = (x - y + n) % n;
    }
  return make_group(std::move(t));
}

// Permutation groups with "apply the right factor first" composition.
FiniteGroup perm_group(const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& p) {
    for (int i = 0; i < n; ++i)
      if (perms[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(perms[i].size());
      for (std::size_t x = 0; x < prod.size(); ++x)
        prod[x] = perms[i][perms[j][x]];
      t[i][j] = index_of(prod);
    }
  return make_group(std::move(t));
}

FiniteGroup s3_group() {
  // 0=id, 1=(12), 2=(13), 3=(23), 4=(123), 5=(132) on points {0,1,2}.
  return perm_group({{0, 1, 2},
                     {1, 0, 2},
                     {2, 1, 0},
                     {0, 2, 1},
                     {1, 2, 0},
                     {2, 0, 1}});
}

FiniteGroup s4_group() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perm_group(perms);
}

FiniteGroup quaternion8_group() {
  // 0:1  1:-1  2:i  3:-i  4:j  5:-j  6:k  7:-k
  auto mul = [](int x, int y) {
    int sx = x & 1, ax = x >> 1;
    int sy = y & 1, ay = y >> 1;
    int sign = sx ^ sy;
    if (ax == 0) return (ay << 1) | sign;
    if (ay == 0) return (ax << 1) | sign;
    if (ax == ay) return sign ^ 1;  // i*i = j*j = k*k = -1
    // i*j=k, j*k=i, k*i=j and the reversed products pick up a sign.
    int az = 6 - ax - ay;
    bool forward = (ay - ax + 3) % 3 == 1;
    return (az << 1) | (forward ? sign : sign ^ 1);
  };
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) t[x][y] = mul(x, y);
  return make_group(std::move(t));
}

}  // namespace

FiniteGroup catalog(const std::string& name) {
  auto param = [&](const std::string& head) -> int {
    if (name.size() <= head.size() + 2 || name.compare(0, head.size(), head) ||
        name[head.size()] != '(' || name.back() != ')')
      return -1;
    try {
      return std::stoi(name.substr(head.size() + 1,
                                   name.size() - head.size() - 2));
    } catch (const std::exception&) {
      return -1;
    }
  };
  if (int n = param("cyclic"); n > 0) return cyclic_group(n);
  if (int n = param("dihedral"); n > 0) return dihedral_group(n);
  if (name == "klein4") return klein4_group();
  if (name == "s3") return s3_group();
  if (name == "s4") return s4_group();
  if (name == "quaternion8") return quaternion8_group();
  throw Error(errc::unknown_name, "no catalog group named '" + name + "'");
}

}  // namespace skewbrace
