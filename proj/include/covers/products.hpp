// The two canonical double covers of a multigraph.
//
// bipartite_double_cover (the tensor-with-K2 construction): a normal edge uv
// lifts to the two crossing edges u0v1, u1v0; a loop at v to a parallel pair
// v0v1; a semi-edge at v to a single rung v0v1. Always bipartite.
//
// parallel_double_cover: a normal edge lifts to u0v0 and u1v1, a loop to a
// loop on each copy, a semi-edge to a rung v0v1. Two parallel copies of the
// graph with semi-edges turned into rungs.
//
// Vertex layout in both: copy i of v has id 2*v + i. Output edges follow
// source edge order (copy 0 before copy 1). Both canonical projections are
// covering projections.
#pragma once

#include "covers/projection.hpp"

namespace covers {

struct DoubleCover {
  Multigraph graph;
  CoverProjection projection;  // graph -> source
};

DoubleCover bipartite_double_cover(const Multigraph& g);
DoubleCover parallel_double_cover(const Multigraph& g);

// The lifted edge ids of source edge e inside a double cover: loops and
// normal edges have two copies (copy 0 first), semi-edges one rung.
std::vector<EdgeId> lifted_edges(const DoubleCover& dc, EdgeId source_edge);

}  // namespace covers
