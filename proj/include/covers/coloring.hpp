// Exact chromatic index for multigraphs with semi-edges. A color class must
// have maximum degree 1 (a semi-edge occupies one slot at its vertex); a
// graph with a loop has no proper edge coloring at all.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covers/multigraph.hpp"

namespace covers {

struct EdgeColoring {
  std::vector<int> colors;  // per edge id
  int palette_size = 0;
};

struct ChromaticIndex {
  bool finite = true;
  int value = 0;  // meaningful only when finite
  std::optional<EdgeColoring> witness;

  bool is(int v) const { return finite && value == v; }
};

ChromaticIndex chromatic_index(const Multigraph& g);

// Can g be properly edge-colored with k colors? Exact decision.
std::optional<EdgeColoring> edge_coloring_with(const Multigraph& g, int k);

bool verify_edge_coloring(const Multigraph& g, const EdgeColoring& c);

// Witness text: lines `c <edge> <color>`.
std::string coloring_to_text(const EdgeColoring& c);

}  // namespace covers
