// Canonical forms for small multigraphs, used to deduplicate enumerated
// covers and to compare constructions in tests. Color refinement plus
// individualization; intended for graphs of at most ~16 vertices.
#pragma once

#include <cstdint>
#include <vector>

#include "covers/multigraph.hpp"

namespace covers {

// A total invariant: equal iff the graphs are isomorphic (vertex count plus
// the lexicographically least relabeled edge multiset).
using CanonicalForm = std::vector<std::int32_t>;

CanonicalForm canonical_form(const Multigraph& g);
bool is_isomorphic(const Multigraph& a, const Multigraph& b);

// Orbits of the vertex set under the automorphism group, by brute force over
// permutations; only sensible for very small graphs (<= 8 vertices).
std::vector<int> automorphism_orbits(const Multigraph& g);

}  // namespace covers
