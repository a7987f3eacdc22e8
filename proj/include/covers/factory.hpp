// Constructive simple covers: plain p-fold covers via fixed 1-factorizations,
// covers with a bridge, covers that are not 3-edge-colorable, and covers
// without a perfect matching. Every result is re-verified before returning.
#pragma once

#include "covers/projection.hpp"

namespace covers {

struct FactoryResult {
  Multigraph graph;
  CoverProjection projection;  // graph -> input
};

// Simple p-fold cover. Requires p >= max(d, q+1), where d is the maximum
// normal-edge multiplicity and q the maximum over vertices of semi-edges
// plus twice the loops; p must be even when the input has semi-edges.
// Factorizations are pinned: parallel bundles use the K_{p,p} factor
// {(i, i+j mod p)} for the j-th edge, loop-only vertices use the shifted
// orbits {u_i u_{i+j}}, vertices with semi-edges use the round-robin proper
// coloring of K_p. Vertex (v, i) has id v*p + i.
FactoryResult simple_pfold_cover(const Multigraph& g, int p);

// For a connected graph without semi-edges that has a bridge: a simple cover
// that again has a bridge. A simple input is its own cover; otherwise the
// cover is (2p+1)-fold with p = max multiplicity + 2*max loops at one
// vertex + 1, built from two staggered p/(p+1)-fold covers on each side.
FactoryResult bridged_simple_cover(const Multigraph& g);

// For a connected cubic graph with chromatic index > 3: a simple cover whose
// chromatic index is still > 3 (verified exactly). Inputs with semi-edges
// route through the parallel double cover; inputs with a bridge through
// bridged_simple_cover; the remaining multi-edge case splits one double edge
// against a simple connected double cover until none are left.
FactoryResult snark_cover(const Multigraph& g);

// For a connected cubic graph without semi-edges and without a perfect
// matching: a simple (3k+1)-fold cover with no perfect matching, built over
// the lexicographically least inclusion-minimal good set (k = number of
// components outside it). Re-verified by the matching algorithm.
FactoryResult no_pm_cover(const Multigraph& g);

// For a cubic graph with no semi-perfect matching: a simple cover with no
// perfect matching, hence a certified witness against covering the
// one-vertex loop-plus-semi-edge graph.
FactoryResult witness_not_f11(const Multigraph& g);

}  // namespace covers
