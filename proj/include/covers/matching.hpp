// Matchings and barriers: perfect matchings (exact, via Edmonds'
// blossom algorithm), semi-perfect matchings through the parallel double
// cover, coverings of the one-vertex loop-plus-semi-edge graph, good/very
// good vertex sets, and 1-perfect codes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covers/projection.hpp"

namespace covers {

// A spanning set of pairwise disjoint normal edges. Loops are ignored,
// parallel bundles contribute one candidate edge (the lowest id is
// reported). Nullopt when no perfect matching exists.
std::optional<std::vector<EdgeId>> has_perfect_matching(const Multigraph& g);

// Edge set inducing a spanning 1-regular subgraph; semi-edges allowed,
// loops never.
struct SemiPerfectMatching {
  std::vector<EdgeId> edges;
};

// Decided by pulling a perfect matching back from the parallel double cover.
std::optional<SemiPerfectMatching> has_semi_perfect_matching(const Multigraph& g);

bool is_semi_perfect_matching(const Multigraph& g, const std::vector<EdgeId>& edges);

// Does a cubic graph cover F(1,1)? Equivalent to a semi-perfect matching
// containing every semi-edge; the certificate maps the matching onto the
// semi-edge and the 2-regular complement onto the loop.
struct F11CoverResult {
  bool covers = false;
  std::optional<CoverProjection> certificate;
  std::string refusal;
};
F11CoverResult covers_f11(const Multigraph& g);

// X is good when G-X has more odd components than |X|; very good when in
// addition every loop and every multiple edge avoids X entirely.
struct GoodSet {
  std::vector<VertexId> vertices;  // ascending
  int odd_component_count = 0;
  bool very_good = false;
};

// All inclusion-minimal good sets, sorted by (size, lexicographic order).
// Hard cap of 20 vertices.
std::vector<GoodSet> minimal_good_sets(const Multigraph& g);

int odd_components_without(const Multigraph& g, const std::vector<VertexId>& removed);

// Independent set C (in the underlying simple adjacency; loops ignored,
// parallel edges collapsed) such that every outside vertex has exactly one
// neighbor in C. Lexicographically least witness.
std::optional<std::vector<VertexId>> has_perfect_code(const Multigraph& g);

// Witness texts: `m <edge>` / `p <vertex>` lines.
std::string matching_to_text(const std::vector<EdgeId>& edges);
std::string vertex_set_to_text(const std::vector<VertexId>& vertices);

}  // namespace covers
