#include <doctest.h>

#include "covers/catalog.hpp"
#include "covers/coloring.hpp"
#include "covers/isomorphism.hpp"
#include "covers/matching.hpp"
#include "covers/poset.hpp"
#include "covers/products.hpp"
#include "covers/stronger.hpp"
#include "test_util.hpp"

using namespace covers;

TEST_CASE("divisibility necessary condition") {
  // P(2) has semi-edges: |V(B)| must divide 2|V(A)| = 4
  CHECK(divisibility_ok(make_open_path(2), make_cycle(4)));
  // no semi-edges: |V(B)| must divide |V(A)|
  CHECK_FALSE(divisibility_ok(catalog("K4").graph, make_cycle(3)));
  CHECK_FALSE(divisibility_ok(make_flower(1, 1), make_cycle(3)));
  CHECK(divisibility_ok(catalog("K4").graph, catalog("K2").graph));
}

TEST_CASE("2-regular classification follows the four divisibility rules") {
  CHECK(classify_2regular(make_cycle(6), make_open_path(3)) == true);
  CHECK(classify_2regular(make_open_path(2), make_cycle(8)) == false);
  CHECK(classify_2regular(make_cycle(4), make_cycle(2)) == true);
  CHECK(classify_2regular(make_cycle(4), make_cycle(3)) == false);
  CHECK(classify_2regular(make_open_path(4), make_open_path(2)) == true);
  CHECK(classify_2regular(make_open_path(2), make_cycle(4)) == true);
  CHECK_FALSE(classify_2regular(catalog("K4").graph, make_cycle(3)).has_value());
  CHECK_FALSE(classify_2regular(make_cycle(3), catalog("K4").graph).has_value());
}

TEST_CASE("enumeration: the double covers of C3 are exactly C6") {
  auto covers = enumerate_simple_covers(make_cycle(3), 2);
  REQUIRE(covers.size() == 1);
  CHECK(is_isomorphic(covers[0].graph, make_cycle(6)));
  CHECK(verify_cover(covers[0].projection).ok);
}

TEST_CASE("enumeration: K4 is the unique simple double cover of W(1,0,2,0,1)") {
  auto covers = enumerate_simple_covers(make_dumbbell(1, 0, 2, 0, 1), 2);
  REQUIRE(covers.size() == 1);
  CHECK(is_isomorphic(covers[0].graph, catalog("K4").graph));
}

TEST_CASE("enumeration: 4- and 6-fold covers of F(3,0)") {
  auto four = enumerate_simple_covers(make_flower(3, 0), 4);
  REQUIRE(four.size() == 1);
  CHECK(is_isomorphic(four[0].graph, catalog("K4").graph));

  // odd folds are impossible with semi-edges
  CHECK(enumerate_simple_covers(make_flower(3, 0), 3).empty());
  CHECK(enumerate_simple_covers(make_flower(3, 0), 5).empty());

  auto six = enumerate_simple_covers(make_flower(3, 0), 6);
  bool has_k33 = false;
  for (const auto& c : six)
    if (is_isomorphic(c.graph, catalog("K33").graph)) has_k33 = true;
  CHECK(has_k33);
  for (const auto& c : six) {
    CHECK(is_simple(c.graph));
    CHECK(is_connected(c.graph));
    CHECK(verify_cover(c.projection).ok);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_simple_covers(catalog("K4").graph, 5), error);
  CHECK_THROWS_AS(enumerate_simple_covers(disjoint_union(catalog("K2").graph, catalog("K2").graph), 2),
                  error);
}

TEST_CASE("decide: F(3,0) is stronger than F(1,1) by a semi-cover") {
  auto ev = decide_stronger(make_flower(3, 0), make_flower(1, 1));
  CHECK(ev.verdict == StrongerVerdict::StrongerBySemiCover);
  REQUIRE(ev.certificate.has_value());
  CHECK(verify_semicover(*ev.certificate).ok);
}

TEST_CASE("decide: F(1,1) is not stronger than F(3,0), snark-style witness") {
  auto ev = decide_stronger(make_flower(1, 1), make_flower(3, 0));
  CHECK(ev.verdict == StrongerVerdict::NotStrongerByWitness);
  REQUIRE(ev.witness.has_value());
  CHECK(is_simple(*ev.witness));
  CHECK(verify_cover(*ev.witness_cover).ok);
  CHECK(ev.refutation == RefutationKind::ChromaticIndexCertificate);
  auto chi = chromatic_index(*ev.witness);
  CHECK((!chi.finite || chi.value > 3));
}

TEST_CASE("decide: the triple dipole is not stronger than W(0,1,1,1,0), witness K33") {
  auto ev = decide_stronger(make_dumbbell(0, 0, 3, 0, 0), make_dumbbell(0, 1, 1, 1, 0));
  CHECK(ev.verdict == StrongerVerdict::NotStrongerByWitness);
  REQUIRE(ev.witness.has_value());
  CHECK(is_isomorphic(*ev.witness, catalog("K33").graph));
  CHECK(verify_cover(*ev.witness_cover).ok);
}

TEST_CASE("decide: covers give StrongerByCover") {
  auto ev = decide_stronger(catalog("K4").graph, make_dumbbell(1, 0, 2, 0, 1));
  CHECK(ev.verdict == StrongerVerdict::StrongerByCover);
  CHECK(verify_cover(*ev.certificate).ok);
}

TEST_CASE("decide: simple sources are their own witnesses") {
  auto ev = decide_stronger(catalog("K4").graph, catalog("SG").graph);
  CHECK(ev.verdict == StrongerVerdict::NotStrongerByWitness);
  CHECK(*ev.witness == catalog("K4").graph);
}

TEST_CASE("decide: divisibility refutations") {
  auto ev = decide_stronger(make_flower(1, 1), catalog("K4").graph);
  CHECK(ev.verdict == StrongerVerdict::NotStrongerByDivisibility);
  CHECK(ev.source_vertices == 1);
  CHECK(ev.target_vertices == 4);
}

TEST_CASE("decide: 2-regular fast paths") {
  auto yes = decide_stronger(make_open_path(2), make_cycle(4));
  CHECK(yes.is_stronger());  // Stronger with |V(B)| = 2|V(A)|
  // for open-path vs cycle the divisibility rule coincides with the
  // classification, so the refutation is arithmetic
  auto no_div = decide_stronger(make_open_path(2), make_cycle(8));
  CHECK(no_div.verdict == StrongerVerdict::NotStrongerByDivisibility);
  // open path vs open path reaches the classification witness
  auto no = decide_stronger(make_open_path(2), make_open_path(4));
  CHECK(no.verdict == StrongerVerdict::NotStrongerByWitness);
  REQUIRE(no.witness.has_value());
  CHECK(is_isomorphic(*no.witness, make_cycle(4)));
  CHECK(verify_cover(*no.witness_cover).ok);
  // the 2-cycle is 2-regular and reaches the classification before the
  // dipole step
  auto c2 = decide_stronger(make_cycle(2), make_open_path(2));
  CHECK(c2.verdict == StrongerVerdict::NotStrongerByWitness);
  REQUIRE(c2.witness.has_value());
  CHECK(is_isomorphic(*c2.witness, make_cycle(6)));
}

TEST_CASE("decide: F(1,1) vs the 4-vertex-divisible two-vertex graphs") {
  // K4 covers F(1,1) and no 2-vertex graph but W(1,0,2,0,1)
  auto ev = decide_stronger(make_flower(1, 1), make_dumbbell(0, 1, 1, 1, 0));
  CHECK(ev.verdict == StrongerVerdict::NotStrongerByWitness);
  REQUIRE(ev.witness.has_value());
  CHECK(is_isomorphic(*ev.witness, catalog("K4").graph));
}

TEST_CASE("decide: loopy claw vs F(1,1) goes through the matching witness") {
  auto ev = decide_stronger(catalog("LC").graph, make_flower(1, 1));
  CHECK(ev.verdict == StrongerVerdict::NotStrongerByWitness);
  CHECK(ev.refutation == RefutationKind::MatchingCertificate);
  CHECK_FALSE(has_perfect_matching(*ev.witness).has_value());
}

TEST_CASE("decide: unknown when the budget is too small") {
  auto ev = decide_stronger(make_flower(1, 1), make_dumbbell(0, 0, 3, 0, 0), 2);
  CHECK(ev.verdict == StrongerVerdict::Unknown);
}

TEST_CASE("decide: errors on disconnected inputs") {
  Multigraph two = disjoint_union(catalog("K2").graph, catalog("K2").graph);
  CHECK_THROWS_AS(decide_stronger(two, catalog("K2").graph), error);
}

TEST_CASE("enumeration: the cubic 6-vertex classes appear exactly once") {
  // the only connected cubic simple graphs on 6 vertices are K33 and the
  // triangular prism; both cover F(1,1) and F(3,0)
  Multigraph prism = parallel_double_cover(catalog("K3prime").graph).graph;
  for (const char* base : {"F(1,1)", "F(3,0)"}) {
    CAPTURE(base);
    auto covers = enumerate_simple_covers(catalog(base).graph, 6);
    REQUIRE(covers.size() == 2);
    bool k33 = false, pr = false;
    for (const auto& c : covers) {
      if (is_isomorphic(c.graph, catalog("K33").graph)) k33 = true;
      if (is_isomorphic(c.graph, prism)) pr = true;
    }
    CHECK(k33);
    CHECK(pr);
  }
}

TEST_CASE("enumeration: 4-fold covers of the two-semi-edge dumbbells") {
  // when each fiber carries a forced internal 4-cycle (loop or semi-edge
  // pair), the cover is two 4-cycles plus a perfect matching: exactly the
  // cube Q3 and the Moebius ladder C(8;4)
  for (const char* base : {"W(0,1,1,0,2)", "W(2,0,1,0,2)"}) {
    CAPTURE(base);
    auto covers = enumerate_simple_covers(catalog(base).graph, 4);
    REQUIRE(covers.size() == 2);
    bool q3 = false, moebius = false;
    for (const auto& c : covers) {
      if (is_isomorphic(c.graph, catalog("Q3").graph)) q3 = true;
      if (is_isomorphic(c.graph, catalog("C(8;4)").graph)) moebius = true;
    }
    CHECK(q3);
    CHECK(moebius);
  }
  // the doubled edge of W(1,0,2,0,1) lifts to two disjoint matchings whose
  // union may also be a single 8-cycle, which admits two further classes
  auto covers = enumerate_simple_covers(catalog("W(1,0,2,0,1)").graph, 4);
  CHECK(covers.size() == 4);
  bool q3 = false, moebius = false;
  for (const auto& c : covers) {
    if (is_isomorphic(c.graph, catalog("Q3").graph)) q3 = true;
    if (is_isomorphic(c.graph, catalog("C(8;4)").graph)) moebius = true;
  }
  CHECK(q3);
  CHECK(moebius);
}

TEST_CASE("enumeration: H1 appears among the 6-fold covers of W(0,1,1,0,2)") {
  auto covers = enumerate_simple_covers(make_dumbbell(0, 1, 1, 0, 2), 6);
  bool h1 = false;
  for (const auto& c : covers)
    if (is_isomorphic(c.graph, catalog("H1").graph)) h1 = true;
  CHECK(h1);
}

TEST_CASE("enumeration: covers of cycles are exactly the cycle multiples") {
  for (int k = 2; k <= 5; ++k) {
    auto covers = enumerate_simple_covers(make_cycle(3), k);
    REQUIRE(covers.size() == 1);
    CHECK(is_isomorphic(covers[0].graph, make_cycle(3 * k)));
  }
  auto p2 = enumerate_simple_covers(make_open_path(2), 2);
  REQUIRE(p2.size() == 1);
  CHECK(is_isomorphic(p2[0].graph, make_cycle(4)));
}

TEST_CASE("enumeration: covers of the loop-loop dumbbell match the cubic classification") {
  Multigraph w = make_dumbbell(0, 1, 1, 1, 0);
  Multigraph prism = parallel_double_cover(catalog("K3prime").graph).graph;
  // 3-fold: loop fibers must induce triangles, so only the prism qualifies
  auto three = enumerate_simple_covers(w, 3);
  REQUIRE(three.size() == 1);
  CHECK(is_isomorphic(three[0].graph, prism));
  // 4-fold: loop fibers induce 4-cycles, giving the cube and the Moebius ladder
  auto four = enumerate_simple_covers(w, 4);
  REQUIRE(four.size() == 2);
  bool q3 = false, moebius = false;
  for (const auto& c : four) {
    if (is_isomorphic(c.graph, catalog("Q3").graph)) q3 = true;
    if (is_isomorphic(c.graph, catalog("C(8;4)").graph)) moebius = true;
  }
  CHECK(q3);
  CHECK(moebius);
  // no simple double cover exists: a 2-point fiber cannot carry a loop lift
  CHECK(enumerate_simple_covers(w, 2).empty());
}

TEST_CASE("enumeration: triple dipole has no simple double cover and K33 as triple cover") {
  Multigraph d3 = make_dumbbell(0, 0, 3, 0, 0);
  CHECK(enumerate_simple_covers(d3, 2).empty());
  auto three = enumerate_simple_covers(d3, 3);
  REQUIRE(three.size() == 1);
  CHECK(is_isomorphic(three[0].graph, catalog("K33").graph));
}

TEST_CASE("enumeration: both double covers of K3prime, prism and K33") {
  auto covers = enumerate_simple_covers(catalog("K3prime").graph, 2);
  REQUIRE(covers.size() == 2);
  Multigraph prism = parallel_double_cover(catalog("K3prime").graph).graph;
  bool pr = false, k33 = false;
  for (const auto& c : covers) {
    if (is_isomorphic(c.graph, prism)) pr = true;
    if (is_isomorphic(c.graph, catalog("K33").graph)) k33 = true;
  }
  CHECK(pr);
  CHECK(k33);
}

TEST_CASE("evidence integrity on random connected pairs") {
  testutil::Rng rng(616161);
  int stronger_seen = 0, witness_seen = 0;
  for (int i = 0; i < 120; ++i) {
    Multigraph a = testutil::random_multigraph(rng, 4);
    Multigraph b = testutil::random_multigraph(rng, 2);
    if (!is_connected(a) || !is_connected(b) || a.vertex_count() == 0 || b.vertex_count() == 0)
      continue;
    bool b_is_f30 = b.vertex_count() == 1 && semi_count_at(b, 0) == 3 && b.edge_count() == 3;
    bool b_is_f11 = b.vertex_count() == 1 && semi_count_at(b, 0) == 1 && loop_count_at(b, 0) == 1 &&
                    b.edge_count() == 2;
    // the snark/matching factories build covers with dozens of vertices;
    // keep the fuzz quick by skipping those two target shapes for cubic a
    if (is_cubic(a) && (b_is_f30 || b_is_f11)) continue;
    StrongerEvidence ev = decide_stronger(a, b, 6);
    switch (ev.verdict) {
      case StrongerVerdict::StrongerByCover:
        CHECK(verify_cover(*ev.certificate).ok);
        ++stronger_seen;
        break;
      case StrongerVerdict::StrongerBySemiCover:
        CHECK(verify_semicover(*ev.certificate).ok);
        ++stronger_seen;
        break;
      case StrongerVerdict::StrongerByTheorem:
        CHECK_FALSE(ev.theorem.empty());
        ++stronger_seen;
        break;
      case StrongerVerdict::NotStrongerByDivisibility:
        CHECK_FALSE(divisibility_ok(a, b));
        break;
      case StrongerVerdict::NotStrongerByWitness: {
        REQUIRE(ev.witness.has_value());
        REQUIRE(ev.witness_cover.has_value());
        CHECK(is_simple(*ev.witness));
        CHECK(verify_cover(*ev.witness_cover).ok);
        CHECK(ev.witness_cover->target == a);
        if (ev.witness->vertex_count() <= 12)
          CHECK_FALSE(find_cover(*ev.witness, b, ProjectionKind::Cover).has_value());
        ++witness_seen;
        break;
      }
      case StrongerVerdict::Unknown:
        break;
    }
  }
  CHECK(stronger_seen > 0);
  CHECK(witness_seen > 0);
}

TEST_CASE("trivial poset: one node, reflexive relation suppressed") {
  PosetReport rep = cover_poset({{"K4", catalog("K4").graph}}, 4);
  CHECK(rep.covers[0][0]);
  CHECK(rep.cover_hasse.empty());
  CHECK(rep.stronger_only_hasse.empty());
  CHECK(rep.anomalies.empty());
  CHECK(poset_to_dot(rep).find("->") == std::string::npos);
}

TEST_CASE("two-flower poset: one purple arrow, no green") {
  PosetReport rep =
      cover_poset({{"F(3,0)", make_flower(3, 0)}, {"F(1,1)", make_flower(1, 1)}}, 8);
  REQUIRE(rep.cover_hasse.empty());
  REQUIRE(rep.stronger_only_hasse.size() == 1);
  CHECK(rep.stronger_only_hasse[0] == std::pair{0, 1});
  std::string dot = poset_to_dot(rep);
  CHECK(dot.find("color=green") == std::string::npos);
  CHECK(dot.find("\"F(3,0)\" -> \"F(1,1)\" [color=purple];") != std::string::npos);
}
