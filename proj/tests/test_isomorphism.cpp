#include <doctest.h>

#include <numeric>

#include "covers/catalog.hpp"
#include "covers/isomorphism.hpp"
#include "test_util.hpp"

using namespace covers;

namespace {

Multigraph permuted(const Multigraph& g, const std::vector<int>& p) {
  Multigraph h(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.kind == EdgeKind::Normal) h.add_normal(p[e.u], p[e.v]);
    else if (e.kind == EdgeKind::Loop) h.add_loop(p[e.v]);
    else h.add_semi(p[e.v]);
  }
  return h;
}

Multigraph k44_minus_matching() {
  Multigraph g(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 4; j < 8; ++j)
      if (j - 4 != i) g.add_normal(i, j);
  return g;
}

}  // namespace

TEST_CASE("the 6-cycle with main diagonals is K33") {
  CHECK(is_isomorphic(catalog("C(6;3)").graph, catalog("K33").graph));
}

TEST_CASE("Q3 is the 4-crown; the Moebius ladder C(8;4) is a different cubic graph") {
  Multigraph q3 = catalog("Q3").graph;
  Multigraph k44m = k44_minus_matching();
  CHECK(is_cubic(k44m));
  CHECK(is_bipartite(k44m));
  CHECK(is_isomorphic(q3, k44m));
  CHECK_FALSE(is_isomorphic(q3, catalog("C(8;4)").graph));
}

TEST_CASE("flowers with different composition differ") {
  CHECK_FALSE(is_isomorphic(make_flower(3, 0), make_flower(1, 1)));
  CHECK_FALSE(is_isomorphic(make_dumbbell(2, 0, 1, 0, 2), make_dumbbell(1, 0, 2, 0, 1)));
  CHECK(is_isomorphic(make_dumbbell(1, 0, 2, 0, 1), make_dumbbell(1, 0, 2, 0, 1)));
  // mirrored dumbbell parameters give the same graph
  CHECK(is_isomorphic(make_dumbbell(2, 0, 1, 1, 0), make_dumbbell(0, 1, 1, 0, 2)));
}

TEST_CASE("canonical form is invariant under relabeling") {
  testutil::Rng rng(31337);
  for (int i = 0; i < 150; ++i) {
    Multigraph g = testutil::random_multigraph(rng);
    std::vector<int> p(g.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    for (int j = static_cast<int>(p.size()) - 1; j > 0; --j)
      std::swap(p[j], p[rng.below(j + 1)]);
    CHECK(canonical_form(g) == canonical_form(permuted(g, p)));
  }
}

TEST_CASE("automorphism orbits") {
  auto orbits = automorphism_orbits(catalog("K4").graph);
  CHECK(orbits == std::vector<int>{0, 0, 0, 0});
  auto w = automorphism_orbits(make_dumbbell(0, 1, 1, 0, 2));
  CHECK(w[0] != w[1]);  // loop vertex and semi-edge vertex are distinguishable
  auto lc = automorphism_orbits(catalog("LC").graph);
  CHECK(lc[1] == lc[2]);
  CHECK(lc[2] == lc[3]);
  CHECK(lc[0] != lc[1]);
}
