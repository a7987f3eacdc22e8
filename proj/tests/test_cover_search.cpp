#include <doctest.h>

#include "covers/catalog.hpp"
#include "covers/cover_search.hpp"
#include "covers/products.hpp"
#include "test_util.hpp"

using namespace covers;

TEST_CASE("identity covers are found") {
  for (const char* name : {"K4", "F(1,1)", "SG", "Petersen"}) {
    Multigraph g = catalog(name).graph;
    auto p = find_cover(g, g, ProjectionKind::Cover);
    REQUIRE(p.has_value());
    CHECK(fold_count(*p) == 1);
  }
}

TEST_CASE("K33 is a 3-fold cover of the triple dipole") {
  auto p = find_cover(catalog("K33").graph, make_dumbbell(0, 0, 3, 0, 0), ProjectionKind::Cover);
  REQUIRE(p.has_value());
  CHECK(fold_count(*p) == 3);
}

TEST_CASE("C(8;4) does not cover K4") {
  CHECK_FALSE(find_cover(catalog("C(8;4)").graph, catalog("K4").graph, ProjectionKind::Cover));
}

TEST_CASE("Q3 covers no 4-vertex graph with a loop") {
  Multigraph q3 = catalog("Q3").graph;
  CHECK_FALSE(find_cover(q3, catalog("SG").graph, ProjectionKind::Cover));
  CHECK_FALSE(find_cover(q3, catalog("WG").graph, ProjectionKind::Cover));
  CHECK_FALSE(find_cover(q3, catalog("LC").graph, ProjectionKind::Cover));
  CHECK(find_cover(q3, catalog("DG").graph, ProjectionKind::Cover).has_value());
  CHECK(find_cover(q3, catalog("K4").graph, ProjectionKind::Cover).has_value());
}

TEST_CASE("vertex count divisibility short-circuits") {
  CHECK_FALSE(find_cover(catalog("K4").graph, catalog("K33").graph, ProjectionKind::Cover));
}

TEST_CASE("disconnected target is rejected, disconnected source is allowed") {
  Multigraph two_k2 = disjoint_union(catalog("K2").graph, catalog("K2").graph);
  CHECK_THROWS_AS(find_cover(catalog("K4").graph, two_k2, ProjectionKind::Cover), error);
  auto p = find_cover(two_k2, catalog("K2").graph, ProjectionKind::Cover);
  REQUIRE(p.has_value());
  CHECK(verify_cover(*p).ok);
  // one odd component blocks the whole thing
  Multigraph mixed = disjoint_union(two_k2, make_cycle(3));
  CHECK_FALSE(find_cover(mixed, catalog("K2").graph, ProjectionKind::Cover));
}

TEST_CASE("F(3,0) semi-covers but does not cover F(1,1)") {
  Multigraph f30 = make_flower(3, 0);
  Multigraph f11 = make_flower(1, 1);
  CHECK_FALSE(find_cover(f30, f11, ProjectionKind::Cover));
  auto p = find_cover(f30, f11, ProjectionKind::SemiCover);
  REQUIRE(p.has_value());
  CHECK(verify_semicover(*p).ok);
}

TEST_CASE("semi-cover: W(2,0,1,0,2) onto W(0,1,1,0,2)") {
  auto p = find_cover(make_dumbbell(2, 0, 1, 0, 2), make_dumbbell(0, 1, 1, 0, 2),
                      ProjectionKind::SemiCover);
  REQUIRE(p.has_value());
  CHECK(verify_semicover(*p).ok);
}

TEST_CASE("Petersen covers F(1,1) but not F(3,0)") {
  Multigraph pet = catalog("Petersen").graph;
  auto f11 = find_cover(pet, make_flower(1, 1), ProjectionKind::Cover);
  REQUIRE(f11.has_value());
  CHECK(fold_count(*f11) == 10);
  CHECK_FALSE(find_cover(pet, make_flower(3, 0), ProjectionKind::Cover));
}

TEST_CASE("sausage graph covers exactly its loopless/semi-free expectations") {
  Multigraph sg = catalog("SG").graph;
  CHECK(find_cover(sg, make_dumbbell(0, 1, 1, 0, 2), ProjectionKind::Cover).has_value());
  CHECK(find_cover(sg, make_dumbbell(0, 1, 1, 1, 0), ProjectionKind::Cover).has_value());
  CHECK(find_cover(sg, make_flower(1, 1), ProjectionKind::Cover).has_value());
  CHECK_FALSE(find_cover(sg, make_dumbbell(1, 0, 2, 0, 1), ProjectionKind::Cover));
  CHECK_FALSE(find_cover(sg, make_dumbbell(0, 0, 3, 0, 0), ProjectionKind::Cover));
  CHECK_FALSE(find_cover(sg, make_flower(3, 0), ProjectionKind::Cover));
}

TEST_CASE("search and verify agree on random pairs") {
  testutil::Rng rng(5150);
  int found = 0;
  for (int i = 0; i < 150; ++i) {
    Multigraph g = testutil::random_multigraph(rng, 6);
    Multigraph h = testutil::random_multigraph(rng, 3);
    if (!is_connected(h) || h.vertex_count() == 0) continue;
    for (ProjectionKind kind : {ProjectionKind::Cover, ProjectionKind::SemiCover}) {
      auto p = find_cover(g, h, kind);
      if (p) {
        ++found;
        CHECK(verify_projection(*p, kind).ok);
      }
    }
  }
  CHECK(found > 0);  // the fuzz actually exercises the positive path
}

TEST_CASE("a cover is always a semi-cover (search monotonicity)") {
  testutil::Rng rng(777);
  for (int i = 0; i < 80; ++i) {
    Multigraph g = testutil::random_multigraph(rng, 6);
    Multigraph h = testutil::random_multigraph(rng, 3);
    if (!is_connected(h) || h.vertex_count() == 0) continue;
    if (find_cover(g, h, ProjectionKind::Cover))
      CHECK(find_cover(g, h, ProjectionKind::SemiCover).has_value());
    // without semi-edges the two relations coincide
    if (!has_semi_edges(g) && find_cover(g, h, ProjectionKind::SemiCover))
      CHECK(find_cover(g, h, ProjectionKind::Cover).has_value());
  }
}

TEST_CASE("fibers are uniform over a connected target") {
  testutil::Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    Multigraph g = testutil::random_multigraph(rng, 6);
    Multigraph h = testutil::random_multigraph(rng, 2);
    if (!is_connected(h) || h.vertex_count() == 0) continue;
    auto p = find_cover(g, h, ProjectionKind::Cover);
    if (!p) continue;
    std::vector<int> fiber(h.vertex_count(), 0);
    for (VertexId t : p->vertex_map) ++fiber[t];
    for (int s : fiber) CHECK(s == g.vertex_count() / h.vertex_count());
  }
}

TEST_CASE("the cube covers the loopless two-vertex cubic graphs") {
  Multigraph q3 = catalog("Q3").graph;
  CHECK(find_cover(q3, make_dumbbell(1, 0, 2, 0, 1), ProjectionKind::Cover).has_value());
  CHECK(find_cover(q3, make_dumbbell(2, 0, 1, 0, 2), ProjectionKind::Cover).has_value());
  CHECK(find_cover(q3, make_dumbbell(0, 1, 1, 0, 2), ProjectionKind::Cover).has_value());
  CHECK(find_cover(q3, make_dumbbell(0, 0, 3, 0, 0), ProjectionKind::Cover).has_value());
}

TEST_CASE("H1 covers W(0,1,1,0,2) but no two-vertex graph with fewer folds of symmetry") {
  Multigraph h1 = catalog("H1").graph;
  CHECK(find_cover(h1, make_dumbbell(0, 1, 1, 0, 2), ProjectionKind::Cover).has_value());
  CHECK_FALSE(find_cover(h1, make_dumbbell(1, 0, 2, 0, 1), ProjectionKind::Cover));
  CHECK_FALSE(find_cover(h1, make_dumbbell(2, 0, 1, 0, 2), ProjectionKind::Cover));
  CHECK_FALSE(find_cover(h1, make_dumbbell(0, 0, 3, 0, 0), ProjectionKind::Cover));
}

TEST_CASE("the prism over C6 covers DG three-fold") {
  Multigraph prism_c6 = parallel_double_cover(catalog("C6prime").graph).graph;
  auto p = find_cover(prism_c6, catalog("DG").graph, ProjectionKind::Cover);
  REQUIRE(p.has_value());
  CHECK(fold_count(*p) == 3);
}

TEST_CASE("K33 covers F(3,0) six-fold through the triple dipole") {
  Multigraph k33 = catalog("K33").graph;
  Multigraph d3 = make_dumbbell(0, 0, 3, 0, 0);
  Multigraph f30 = make_flower(3, 0);
  auto first = find_cover(k33, d3, ProjectionKind::Cover);
  auto second = find_cover(d3, f30, ProjectionKind::Cover);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  auto chain = compose(*first, *second);
  CHECK(verify_cover(chain).ok);
  CHECK(fold_count(chain) == 6);
}
