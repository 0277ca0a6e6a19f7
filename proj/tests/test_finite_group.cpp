#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "skewbrace/finite_group.hpp"

using namespace skewbrace;

namespace {

// Brute-force automorphism oracle: every bijection fixing 0, filtered by the
// homomorphism law. Independent of the backtracking search.
std::vector<ElementMap> automorphisms_bruteforce(const FiniteGroup& g) {
  std::vector<Element> perm(g.order);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ElementMap> out;
  do {
    if (perm[0] != 0) continue;
    ElementMap f{g.order, g.order, perm};
    if (is_homomorphism(f, g, g)) out.push_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const ElementMap& a, const ElementMap& b) {
    return a.images < b.images;
  });
  return out;
}

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return errc::parse_error;
}

}  // namespace

TEST_CASE("make_group validates tables") {
  SUBCASE("one-element group") {
    FiniteGroup g = make_group({{0}});
    CHECK(g.order == 1);
    CHECK(g.inv == std::vector<Element>{0});
  }
  SUBCASE("Z/2") {
    FiniteGroup g = make_group({{0, 1}, {1, 0}});
    CHECK(g.inv == std::vector<Element>{0, 1});
  }
  SUBCASE("row that is not a permutation has no inverse") {
    CHECK(code_of([] { make_group({{0, 1}, {1, 1}}); }) ==
          errc::missing_inverse);
  }
  SUBCASE("non-square table") {
    CHECK(code_of([] { make_group({{0, 1}}); }) == errc::malformed_table);
  }
  SUBCASE("entry out of range") {
    CHECK(code_of([] { make_group({{0, 2}, {1, 0}}); }) ==
          errc::malformed_table);
  }
  SUBCASE("identity not at index 0") {
    CHECK(code_of([] { make_group({{1, 0}, {0, 1}}); }) ==
          errc::no_identity_at_zero);
  }
  SUBCASE("Latin square with identity and inverses but no associativity") {
    // Were it associative it would be the unique group of order 5, where no
    // element squares to the identity; here 1*1 = 0.
    CHECK(code_of([] {
            make_group({{0, 1, 2, 3, 4},
                        {1, 0, 3, 4, 2},
                        {2, 4, 0, 1, 3},
                        {3, 2, 4, 0, 1},
                        {4, 3, 1, 2, 0}});
          }) == errc::not_associative);
  }
}

TEST_CASE("accepted groups satisfy all table invariants") {
  for (const char* name :
       {"cyclic(1)", "cyclic(6)", "klein4", "s3", "dihedral(4)",
        "quaternion8"}) {
    FiniteGroup g = catalog(name);
    CAPTURE(name);
    for (Element a = 0; a < g.order; ++a) {
      CHECK(g.table[0][a] == a);
      CHECK(g.table[a][0] == a);
      CHECK(g.table[a][g.inv[a]] == 0);
      CHECK(g.table[g.inv[a]][a] == 0);
    }
    for (Element a = 0; a < g.order; ++a) {
      std::vector<bool> row(g.order, false), col(g.order, false);
      for (Element b = 0; b < g.order; ++b) {
        row[g.table[a][b]] = true;
        col[g.table[b][a]] = true;
      }
      CHECK(std::count(row.begin(), row.end(), true) == g.order);
      CHECK(std::count(col.begin(), col.end(), true) == g.order);
    }
    for (Element a = 0; a < g.order; ++a)
      for (Element b = 0; b < g.order; ++b)
        for (Element c = 0; c < g.order; ++c)
          CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

TEST_CASE("is_subgroup") {
  FiniteGroup z4 = catalog("cyclic(4)");
  CHECK(is_subgroup(z4, {0, 2}));
  CHECK_FALSE(is_subgroup(z4, {0, 1}));
  CHECK_FALSE(is_subgroup(z4, {1, 2}));  // no identity

  FiniteGroup s3 = catalog("s3");
  CHECK(is_subgroup(s3, {0, 3}));  // {id, (23)}
  CHECK(code_of([&] { is_subgroup(s3, {0, 9}); }) == errc::index_out_of_range);
}

TEST_CASE("is_normal and conjugation") {
  FiniteGroup s3 = catalog("s3");
  CHECK(is_normal(s3, {0, 4, 5}));        // A3, index 2
  CHECK_FALSE(is_normal(s3, {0, 3}));     // a transposition subgroup
  CHECK(code_of([&] { is_normal(s3, {0, 4}); }) == errc::not_a_subgroup);

  CHECK(conjugation_map(s3, 0) == identity_map(6));
  // conjugation by (23) swaps (12)<->(13) and (123)<->(132)
  CHECK(conjugation_map(s3, 3).images == std::vector<Element>{0, 2, 1, 3, 5, 4});
}

TEST_CASE("conjugation maps are automorphisms and assemble antihomomorphically") {
  for (const char* name : {"cyclic(6)", "klein4", "s3", "quaternion8"}) {
    FiniteGroup g = catalog(name);
    CAPTURE(name);
    std::vector<ElementMap> auts = automorphisms(g);
    for (Element x = 0; x < g.order; ++x) {
      ElementMap c = conjugation_map(g, x);
      CHECK(is_bijective(c));
      CHECK(is_homomorphism(c, g, g));
      CHECK(std::find(auts.begin(), auts.end(), c) != auts.end());
      for (Element y = 0; y < g.order; ++y)
        CHECK(conjugation_map(g, g.mul(x, y)) ==
              compose(conjugation_map(g, y), conjugation_map(g, x)));
    }
  }
}

TEST_CASE("homomorphism and antihomomorphism checks") {
  FiniteGroup s3 = catalog("s3");
  FiniteGroup z4 = catalog("cyclic(4)");

  CHECK(is_homomorphism(identity_map(6), s3, s3));
  CHECK_FALSE(is_antihomomorphism(identity_map(6), s3, s3));
  CHECK(is_homomorphism(identity_map(4), z4, z4));
  CHECK(is_antihomomorphism(identity_map(4), z4, z4));

  ElementMap inv_map{6, 6, s3.inv};
  CHECK(is_antihomomorphism(inv_map, s3, s3));
  CHECK_FALSE(is_homomorphism(inv_map, s3, s3));

  ElementMap constant{6, 6, std::vector<Element>(6, 0)};
  CHECK(is_homomorphism(constant, s3, s3));

  CHECK(code_of([&] { is_homomorphism(identity_map(4), s3, s3); }) ==
        errc::size_mismatch);
}

TEST_CASE("automorphism counts and the brute-force oracle") {
  CHECK(automorphisms(catalog("cyclic(2)")).size() == 1);
  CHECK(automorphisms(catalog("cyclic(3)")).size() == 2);
  CHECK(automorphisms(catalog("s3")).size() == 6);

  for (const char* name : {"cyclic(5)", "cyclic(6)", "klein4", "s3"}) {
    FiniteGroup g = catalog(name);
    CAPTURE(name);
    CHECK(automorphisms(g) == automorphisms_bruteforce(g));
  }
}

TEST_CASE("automorphism lists are groups under composition") {
  for (const char* name : {"cyclic(6)", "klein4", "s3", "quaternion8"}) {
    FiniteGroup g = catalog(name);
    std::vector<ElementMap> auts = automorphisms(g);
    auto member = [&](const ElementMap& f) {
      return std::find(auts.begin(), auts.end(), f) != auts.end();
    };
    for (const ElementMap& f : auts) {
      CHECK(member(inverse_of(f)));
      for (const ElementMap& h : auts) CHECK(member(compose(f, h)));
    }
  }
}

TEST_CASE("automorphisms respects the order bound") {
  CHECK(code_of([] { automorphisms(catalog("s4")); }) ==
        errc::order_bound_exceeded);
  CHECK(automorphisms(catalog("s4"), 24).size() == 24);
}

TEST_CASE("catalog groups") {
  FiniteGroup z6 = catalog("cyclic(6)");
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(z6.table[i][j] == (i + j) % 6);

  FiniteGroup s3 = catalog("s3");
  CHECK(s3.order == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.table == std::vector<std::vector<Element>>{{0, 1, 2, 3, 4, 5},
                                                      {1, 0, 5, 4, 3, 2},
                                                      {2, 4, 0, 5, 1, 3},
                                                      {3, 5, 4, 0, 2, 1},
                                                      {4, 2, 3, 1, 5, 0},
                                                      {5, 3, 1, 2, 0, 4}});

  FiniteGroup v4 = catalog("klein4");
  for (Element a = 1; a < 4; ++a) CHECK(v4.inv[a] == a);

  CHECK(catalog("s4").order == 24);
  CHECK(catalog("dihedral(5)").order == 10);
  CHECK(catalog("dihedral(1)").order == 2);

  FiniteGroup q8 = catalog("quaternion8");
  int involutions = 0;
  for (Element a = 1; a < 8; ++a)
    if (q8.mul(a, a) == 0) ++involutions;
  CHECK(involutions == 1);  // only -1 squares to 1

  CHECK(code_of([] { catalog("monster"); }) == errc::unknown_name);
  CHECK(code_of([] { catalog("cyclic(0)"); }) == errc::unknown_name);
}

TEST_CASE("subgroup enumeration") {
  FiniteGroup s3 = catalog("s3");
  auto subs = subgroups(s3);
  CHECK(subs.size() == 6);  // 1, three C2, A3, S3
  auto nrm = normal_subgroups(s3);
  CHECK(nrm == std::vector<std::vector<Element>>{
                   {0}, {0, 4, 5}, {0, 1, 2, 3, 4, 5}});

  CHECK(subgroups(catalog("quaternion8")).size() == 6);
  CHECK(normal_subgroups(catalog("quaternion8")).size() == 6);
}
