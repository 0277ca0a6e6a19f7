// Acceptance suite: one check per criterion, each timed against its budget,
// one PASS/FAIL line each. Exit code is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "skewbrace/ideal_algebra.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/semidirect.hpp"
#include "skewbrace/ybe.hpp"
#include "test_support.hpp"

using namespace skewbrace;
using namespace skewbrace::testsupport;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

IdealSet whole_ideal(const Digroup& d) {
  std::vector<Element> all(d.order());
  for (Element a = 0; a < d.order(); ++a) all[a] = a;
  return as_ideal(d, all);
}

// 1. The S3/C6 example: catalog -> check pipeline, unique nontrivial
//    decomposition (B = {0,3}, I = A3), extracted triple (sign, trivial, sign).
Outcome criterion_s3c6() {
  Outcome out;
  Digroup d = parse_dgt(emit_dgt(catalog_digroup("s3c6")));
  out.require(is_skew_brace(d), "brace oracle rejects s3c6");
  out.require(is_skew_brace_via_lambda(d), "lambda oracle rejects s3c6");

  auto decs = idempotent_endomorphisms(d);
  std::vector<const InnerDecomposition*> nontrivial;
  for (const auto& dec : decs)
    if (!dec.trivial(d.order())) nontrivial.push_back(&dec);
  out.require(nontrivial.size() == 1, "expected exactly one nontrivial decomposition");
  if (!out.ok) return out;

  const InnerDecomposition& dec = *nontrivial.front();
  out.require(dec.ideal.elements == std::vector<Element>{0, 4, 5}, "I != A3");
  out.require(dec.subgroup == std::vector<Element>{0, 3}, "B != {id,(23)}");

  DigroupAction act = extract_action(d, dec);
  ElementMap alpha{3, 3, {0, 2, 1}};
  out.require(act.phi_star[1] == alpha, "phi_star is not the sign map");
  out.require(act.phi_circ[1] == identity_map(3), "phi_circ is not trivial");
  out.require(act.lambda[1] == alpha, "lambda is not the sign map");
  return out;
}

// 2. Lambda structure of s3c6: conjugation by (23) at the transpositions,
//    identity elsewhere.
Outcome criterion_lambda_tables() {
  Outcome out;
  Digroup d = s3c6_brace();
  ElementMap conj23 = conjugation_map(d.star, 3);
  out.require(conj23.images == std::vector<Element>{0, 2, 1, 3, 5, 4},
              "conjugation by (23) has the wrong table");
  for (Element a : {1, 2, 3})
    out.require(lambda_map(d, a) == conj23,
                "lambda[" + std::to_string(a) + "] != conj by (23)");
  for (Element a : {0, 4, 5})
    out.require(lambda_map(d, a) == identity_map(6),
                "lambda[" + std::to_string(a) + "] != id");
  return out;
}

// 3. The eight-row table on Y = Z/2, K = Z/3. The suite checks the published
//    verdicts (Yes for rows 1,5,7,8, No for rows 2,3,4,6) and that
//    brace_condition agrees with the exhaustive oracle on every row.
Outcome criterion_eight_rows() {
  Outcome out;
  const bool published[8] = {true, false, false, false,
                             true,  false, true,  true};
  std::string derived_vs_published;
  for (int row = 1; row <= 8; ++row) {
    DigroupAction act = row_action(row);
    bool oracle = is_skew_brace(outer_product(act));
    BraceConditionResult cond = brace_condition(act);
    out.require(cond.holds == oracle,
                "row " + std::to_string(row) + ": brace_condition " +
                    (cond.holds ? "true" : "false") + " vs oracle " +
                    (oracle ? "true" : "false"));
    if (oracle != published[row - 1])
      derived_vs_published += (derived_vs_published.empty() ? "" : ", ") +
                              std::string("row ") + std::to_string(row) +
                              " derived " + (oracle ? "Yes" : "No") +
                              " vs published " +
                              (published[row - 1] ? "Yes" : "No");
  }
  out.require(derived_vs_published.empty(), derived_vs_published);
  return out;
}

// 4. The Z/4 x Z/3 analog of the integer example: e(y,k) = (y,0) is an
//    idempotent brace endomorphism, the triple is (sign, trivial, trivial),
//    and alpha(y,k) = (y, (-1)^y k).
Outcome criterion_bjip() {
  Outcome out;
  Digroup d = bjip_analog();
  out.require(is_skew_brace(d), "the order-12 analog is not a brace");

  std::vector<Element> expected_e(12), expected_alpha(12);
  for (int y = 0; y < 4; ++y)
    for (int k = 0; k < 3; ++k) {
      expected_e[y * 3 + k] = y * 3;
      expected_alpha[y * 3 + k] = y * 3 + (y % 2 ? (3 - k) % 3 : k);
    }

  bool found = false;
  for (const auto& dec : idempotent_endomorphisms(d)) {
    if (dec.retraction.images != expected_e) continue;
    found = true;
    DigroupAction act = extract_action(d, dec);
    ElementMap alpha_map{3, 3, {0, 2, 1}};
    for (int y = 0; y < 4; ++y) {
      out.require(act.phi_star[y] == (y % 2 ? alpha_map : identity_map(3)),
                  "phi_star[y] != (-1)^y");
      out.require(act.phi_circ[y] == identity_map(3), "phi_circ not trivial");
      out.require(act.lambda[y] == identity_map(3), "lambda not trivial");
    }
    ElementMap alpha = alpha_isomorphism(d, dec);
    out.require(alpha.images == expected_alpha,
                "alpha(y,k) != (y,(-1)^y k)");
    Digroup p = outer_product(act);
    out.require(is_skew_brace(p) && is_digroup_morphism(alpha, p, d),
                "alpha is not a brace isomorphism");
  }
  out.require(found, "e(y,k) = (y,0) not among the decompositions");
  return out;
}

// 5. Roundtrip: outer(extract) is isomorphic to the parent via alpha for
//    every inner decomposition of every corpus digroup, and the closed-form
//    lambda matches the direct computation on all pairs.
Outcome criterion_roundtrip() {
  Outcome out;
  for (const Digroup& d : full_corpus()) {
    RoundtripReport rep = reconstruct_roundtrip(d);
    out.require(rep.all_ok(), "a roundtrip failed at order " +
                                  std::to_string(d.order()));
    for (const auto& dec : idempotent_endomorphisms(d)) {
      DigroupAction act = extract_action(d, dec);
      for (int y = 0; y < act.Y.order(); ++y)
        for (int k = 0; k < act.K.order(); ++k)
          for (int y2 = 0; y2 < act.Y.order(); ++y2)
            for (int k2 = 0; k2 < act.K.order(); ++k2) {
              try {
                lambda_product_formula(act, {y, k}, {y2, k2});
              } catch (const std::exception& e) {
                out.require(false, e.what());
                return out;
              }
            }
    }
  }
  return out;
}

// 6. Oracle equivalences across the corpus: the two brace tests, the outer
//    brace criterion, and the corollary conjunction.
Outcome criterion_oracles() {
  Outcome out;
  int checked_actions = 0;
  for (const Digroup& d : full_corpus()) {
    out.require(is_skew_brace(d) == is_skew_brace_via_lambda(d),
                "brace oracles disagree");
    for (const auto& dec : idempotent_endomorphisms(d)) {
      DigroupAction act = extract_action(d, dec);
      bool oracle = is_skew_brace(outer_product(act));
      BraceConditionResult cond = brace_condition(act);
      auto [c1, c2] = corollary_split(act);
      out.require(cond.holds == oracle, "brace_condition vs oracle");
      out.require((c1 && c2) == cond.holds, "corollary vs brace_condition");
      ++checked_actions;
    }
  }
  out.require(checked_actions > 200, "corpus unexpectedly small");
  return out;
}

// 7. Commutator and center laws on every corpus brace.
Outcome criterion_ideal_laws() {
  Outcome out;
  std::vector<Digroup> braces = full_corpus(true);
  braces.push_back(s3c6_brace());
  for (const Digroup& d : braces) {
    std::vector<IdealSet> list = ideals(d);
    for (const IdealSet& lhs : list)
      for (const IdealSet& rhs : list) {
        out.require(commutator_ideal(d, lhs, rhs) ==
                        commutator_ideal(d, rhs, lhs),
                    "[I,J] != [J,I]");
        LatticePair p = lattice_ops(d, lhs, rhs);  // star/circ agreement inside
        out.require(is_ideal(d, p.join.elements), "join is not an ideal");
        for (const IdealSet& third : list) {
          IdealSet joined = lattice_ops(d, rhs, third).join;
          out.require(
              commutator_ideal(d, lhs, joined) ==
                  lattice_ops(d, commutator_ideal(d, lhs, rhs),
                              commutator_ideal(d, lhs, third))
                      .join,
              "[I,JvK] != [I,J]v[I,K]");
        }
      }
    IdealSet z = center(d);
    out.require(z.elements == center_elementwise(d),
                "the two center routes disagree");
    out.require(commutator_ideal(d, z, whole_ideal(d)).size() == 1,
                "[Z,D] != 1");
    if (!out.ok) return out;
  }
  return out;
}

// 8. The eight equivalent conditions evaluate identically for every
//    (subdigroup, ideal) pair of every corpus digroup.
Outcome criterion_equivalences() {
  Outcome out;
  for (const Digroup& d : full_corpus())
    for (const auto& b : subdigroups(d))
      for (const IdealSet& ideal : ideals(d)) {
        EquivalenceReport rep = check_equivalences(d, b, ideal.elements);
        out.require(rep.all_equal(), "conditions split at order " +
                                         std::to_string(d.order()));
        if (!out.ok) return out;
      }
  return out;
}

// 9. Yang-Baxter: every corpus brace yields a verified non-degenerate
//    solution; the flip passes; the identity map fails non-degeneracy.
Outcome criterion_ybe() {
  Outcome out;
  std::vector<Digroup> braces = full_corpus(true);
  braces.push_back(s3c6_brace());
  for (const Digroup& d : braces) {
    SetSolution r = solution_from_brace(d);
    out.require(braid_check(r), "braid fails at order " +
                                    std::to_string(d.order()));
    out.require(nondegeneracy_check(r), "degenerate at order " +
                                            std::to_string(d.order()));
  }
  out.require(braid_check(flip_solution(6)), "flip fails the braid check");
  out.require(nondegeneracy_check(flip_solution(6)), "flip degenerate");
  for (int n = 2; n <= 6; ++n)
    out.require(!nondegeneracy_check(identity_solution(n)),
                "identity-r non-degenerate at n=" + std::to_string(n));
  return out;
}

// 10. The component formulas match the four-way factorization for every
//     (b, i1) of every corpus decomposition.
Outcome criterion_components() {
  Outcome out;
  for (const Digroup& d : full_corpus())
    for (const auto& dec : idempotent_endomorphisms(d))
      for (Element b : dec.subgroup)
        for (Element i1 : dec.ideal.elements) {
          try {
            component_formulas(d, dec, b, i1);
          } catch (const std::exception& e) {
            out.require(false, e.what());
            return out;
          }
        }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"s3c6 example: verdicts, decomposition, action triple", 1.0,
       criterion_s3c6},
      {"s3c6 lambda structure", 1.0, criterion_lambda_tables},
      {"eight-row table verdicts and oracle agreement", 1.0,
       criterion_eight_rows},
      {"order-12 semidirect analog: e, triple, alpha", 1.0, criterion_bjip},
      {"roundtrip and lambda closed form over the corpus", 60.0,
       criterion_roundtrip},
      {"oracle equivalences over the corpus", 60.0, criterion_oracles},
      {"commutator, lattice and center laws", 60.0, criterion_ideal_laws},
      {"eight equivalent conditions over the corpus", 60.0,
       criterion_equivalences},
      {"Yang-Baxter solutions", 10.0, criterion_ybe},
      {"component formulas over the corpus", 10.0, criterion_components},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criteria[i].budget_seconds) {
      out.ok = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += "over the " + std::to_string(criteria[i].budget_seconds) +
                    "s budget";
    }
    if (!out.ok) ++failures;
    std::printf("[%2zu] %s (%.2fs) %s%s%s\n", i + 1, out.ok ? "PASS" : "FAIL",
                seconds, criteria[i].label, out.detail.empty() ? "" : " — ",
                out.detail.c_str());
  }
  if (failures)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures ? 1 : 0;
}
