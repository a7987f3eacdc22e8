#include <doctest.h>

#include "covers/catalog.hpp"
#include "covers/projection.hpp"

using namespace covers;

namespace {

// K4 as a 2-fold cover of W(1,0,2,0,1): vertices {0,1} over one end, {2,3}
// over the other; edge (0,1) over the first semi-edge, (2,3) over the
// second, and the two crossing perfect matchings over the parallel edges.
CoverProjection k4_over_w10201() {
  Multigraph k4 = catalog("K4").graph;  // edges: 01,02,03,12,13,23
  Multigraph w = make_dumbbell(1, 0, 2, 0, 1);  // edges: s@0, e01, e01, s@1
  CoverProjection p{k4, w, {0, 0, 1, 1}, {}};
  p.edge_map.assign(6, -1);
  p.edge_map[0] = 0;  // (0,1) -> semi at u
  p.edge_map[1] = 1;  // (0,2) -> first parallel edge
  p.edge_map[4] = 1;  // (1,3) -> first parallel edge
  p.edge_map[2] = 2;  // (0,3) -> second parallel edge
  p.edge_map[3] = 2;  // (1,2) -> second parallel edge
  p.edge_map[5] = 3;  // (2,3) -> semi at v
  return p;
}

}  // namespace

TEST_CASE("identity projection verifies and has fold 1") {
  Multigraph k4 = catalog("K4").graph;
  auto id = identity_projection(k4);
  CHECK(verify_cover(id).ok);
  CHECK(fold_count(id) == 1);
}

TEST_CASE("K4 is a double cover of W(1,0,2,0,1)") {
  auto p = k4_over_w10201();
  CHECK(verify_cover(p).ok);
  CHECK(fold_count(p, ProjectionKind::Cover) == 2);
}

TEST_CASE("a semi-edge cannot map onto a loop under cover rules") {
  Multigraph f30 = make_flower(3, 0);
  Multigraph f11 = make_flower(1, 1);
  // the only degree-preserving vertex map sends the vertex to the vertex;
  // any edge map sends some semi-edge onto the loop
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        CoverProjection p{f30, f11, {0}, {a, b, c}};
        if (a + b + c == 0) continue;  // not surjective either way
        auto res = verify_cover(p);
        CHECK_FALSE(res.ok);
      }
}

TEST_CASE("F(3,0) semi-covers F(1,1): two semi-edges fold onto the loop") {
  Multigraph f30 = make_flower(3, 0);
  Multigraph f11 = make_flower(1, 1);
  CoverProjection p{f30, f11, {0}, {0, 1, 1}};  // one semi stays, two become the loop
  auto res = verify_semicover(p);
  CHECK(res.ok);
  CHECK_FALSE(verify_cover(p).ok);
  CHECK(fold_count(p) == 1);
}

TEST_CASE("W(2,0,1,0,2) semi-covers W(0,1,1,0,2)") {
  Multigraph a = make_dumbbell(2, 0, 1, 0, 2);  // edges: s0,s0,e,s1,s1
  Multigraph b = make_dumbbell(0, 1, 1, 0, 2);  // edges: loop@0, e, s1, s1
  CoverProjection p{a, b, {0, 1}, {0, 0, 1, 2, 3}};
  CHECK(verify_semicover(p).ok);
  CHECK_FALSE(verify_cover(p).ok);
}

TEST_CASE("loops may never map onto semi-edges") {
  Multigraph f11 = make_flower(1, 1);
  Multigraph f30 = make_flower(3, 0);
  // degree mismatch aside, build a map loop -> semi on equal-degree graphs
  Multigraph a = make_flower(0, 1);  // one loop, degree 2
  Multigraph b = make_flower(2, 0);  // two semis, degree 2
  CoverProjection p{a, b, {0}, {0}};
  auto res = verify_semicover(p);
  CHECK_FALSE(res.ok);
  bool kind_violation = false;
  for (const auto& v : res.violations)
    if (v.rule == "kind" || v.rule == "surjectivity") kind_violation = true;
  CHECK(kind_violation);
  (void)f11;
  (void)f30;
}

TEST_CASE("verification rejects broken fiber structure with named rules") {
  // C4 is a 2-fold cover of the 2-cycle: each parallel edge pulls back to a
  // perfect matching between the fibers
  Multigraph c4 = make_cycle(4);
  Multigraph c2 = make_cycle(2);
  CoverProjection good{c4, c2, {0, 1, 0, 1}, {0, 1, 0, 1}};
  CHECK(verify_cover(good).ok);
  // sending all four edges onto one parallel edge overloads the fibers
  CoverProjection bad{c4, c2, {0, 1, 0, 1}, {0, 0, 0, 0}};
  auto res = verify_cover(bad);
  CHECK_FALSE(res.ok);
  bool fiber_rule = false;
  for (const auto& v : res.violations)
    if (v.rule == "matching-fiber" || v.rule == "surjectivity") fiber_rule = true;
  CHECK(fiber_rule);
}

TEST_CASE("malformed projections throw") {
  Multigraph k4 = catalog("K4").graph;
  CoverProjection short_map{k4, k4, {0, 1, 2}, {0, 1, 2, 3, 4, 5}};
  CHECK_THROWS_AS(verify_cover(short_map), error);
  CoverProjection oob{k4, k4, {0, 1, 2, 9}, {0, 1, 2, 3, 4, 5}};
  CHECK_THROWS_AS(verify_cover(oob), error);
}

TEST_CASE("composition of covers is a cover") {
  Multigraph k4 = catalog("K4").graph;
  auto id = identity_projection(k4);
  auto comp = compose(id, id);
  CHECK(verify_cover(comp).ok);

  // K4 -> W(1,0,2,0,1) -> F(3,0)
  Multigraph w = make_dumbbell(1, 0, 2, 0, 1);
  Multigraph f30 = make_flower(3, 0);
  CoverProjection w_to_f{w, f30, {0, 0}, {0, 1, 2, 0}};
  REQUIRE(verify_cover(w_to_f).ok);
  auto chain = compose(k4_over_w10201(), w_to_f);
  CHECK(verify_cover(chain).ok);
  CHECK(fold_count(chain) == 4);
}

TEST_CASE("compose rejects mismatched middle graphs") {
  auto id_k4 = identity_projection(catalog("K4").graph);
  auto id_k33 = identity_projection(catalog("K33").graph);
  CHECK_THROWS_AS(compose(id_k4, id_k33), error);
}

TEST_CASE("certificate text round trip") {
  auto p = k4_over_w10201();
  std::string text = projection_to_text(p);
  auto back = projection_from_text(p.source, p.target, text);
  CHECK(back.vertex_map == p.vertex_map);
  CHECK(back.edge_map == p.edge_map);
}

TEST_CASE("fold_count demands a verifying projection") {
  Multigraph f30 = make_flower(3, 0);
  Multigraph f11 = make_flower(1, 1);
  CoverProjection bad{f30, f11, {0}, {0, 0, 0}};
  CHECK_THROWS_AS(fold_count(bad), error);
}

TEST_CASE("composition of semi-covers is a semi-cover") {
  Multigraph a = make_dumbbell(2, 0, 1, 0, 2);  // edges: s0,s0,e,s1,s1
  Multigraph b = make_dumbbell(0, 1, 1, 0, 2);  // edges: loop, e, s1, s1
  Multigraph c = make_dumbbell(0, 1, 1, 1, 0);  // edges: loop, e, loop
  CoverProjection ab{a, b, {0, 1}, {0, 0, 1, 2, 3}};
  CoverProjection bc{b, c, {0, 1}, {0, 1, 2, 2}};
  REQUIRE(verify_semicover(ab).ok);
  REQUIRE(verify_semicover(bc).ok);
  auto ac = compose(ab, bc);
  CHECK(verify_semicover(ac).ok);
}
