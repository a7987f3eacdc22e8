// Covering and semi-covering projections: paired vertex/edge maps between
// multigraphs, verified against the preimage-structure rules.
//
// Cover: semi -> semi, loop -> loop, normal -> {normal, loop, semi}.
// Semi-cover additionally allows semi -> loop.
// Fiber rules over a target edge e':
//   normal (u',v'): preimage is a perfect matching between the fibers;
//   loop at u':     preimage spans the fiber with degree 2 everywhere
//                   (cycles; under semi-cover rules also open paths ending
//                   in semi-edges);
//   semi at u':     preimage spans the fiber with degree 1 everywhere
//                   (semi-edges and normal edges).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covers/multigraph.hpp"

namespace covers {

enum class ProjectionKind { Cover, SemiCover };

struct CoverProjection {
  Multigraph source;
  Multigraph target;
  std::vector<VertexId> vertex_map;  // source vertex -> target vertex
  std::vector<EdgeId> edge_map;      // source edge -> target edge
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct VerifyResult {
  bool ok = false;
  std::vector<Violation> violations;
};

// Throws covers::error when the maps are not total or out of range
// (malformed projection); otherwise returns the verdict with the list of
// violated rules.
VerifyResult verify_projection(const CoverProjection& p, ProjectionKind kind);
VerifyResult verify_cover(const CoverProjection& p);
VerifyResult verify_semicover(const CoverProjection& p);

CoverProjection identity_projection(const Multigraph& g);

// p: G -> H, q: H -> K; requires p.target == q.source.
CoverProjection compose(const CoverProjection& p, const CoverProjection& q);

// |V(source)| / |V(target)|; requires the projection to verify (as a
// semi-cover at least) and the target to be connected.
int fold_count(const CoverProjection& p, ProjectionKind kind = ProjectionKind::SemiCover);

// Certificate text: lines `v <src> <dst>` then `e <src> <dst>`.
std::string projection_to_text(const CoverProjection& p);
CoverProjection projection_from_text(const Multigraph& source, const Multigraph& target,
                                     const std::string& text);

}  // namespace covers
