// Exhaustive backtracking search for covering and semi-covering projections.
#pragma once

#include <optional>

#include "covers/projection.hpp"

namespace covers {

// Returns a verified projection, or nullopt after exhausting the search
// space. The target must be connected (covers::error otherwise). A
// disconnected source is allowed: every component must cover the target.
// Deterministic: candidates follow vertex/edge id order; the first source
// vertex of each component is matched only against one representative per
// target-vertex orbit when the target has at most 4 vertices.
std::optional<CoverProjection> find_cover(const Multigraph& source, const Multigraph& target,
                                          ProjectionKind kind);

}  // namespace covers
