// Named graph constructions. Same name always yields an identical edge list.
//
// Parameterized names:
//   F(a,b)            one vertex, a semi-edges then b loops
//   W(k,m,l,p,q)      two vertices; k semis + m loops at vertex 0, l normal
//                     edges, p loops + q semis at vertex 1
//   C(n)              cycle: C(1) = one loop, C(2) = double edge, else n-cycle
//   C(n;d1,...,dk)    n-cycle plus all diagonals spanning d_i cycle edges
//   P(n)              open path: n-vertex path with a semi-edge at each end;
//                     P(1) is a single vertex with two semi-edges
// Fixed names: K2, K4, K33, Q3, Petersen, K3prime, C6prime, H1, SG, DG, WG, LC.
#pragma once

#include <string>
#include <vector>

#include "covers/multigraph.hpp"

namespace covers {

struct NamedGraph {
  std::string name;
  Multigraph graph;
  std::string note;  // nonempty for reconstructions validated by the test suite
};

NamedGraph catalog(const std::string& name);

Multigraph make_flower(int semi_edges, int loops);                      // F(a,b)
Multigraph make_dumbbell(int k, int m, int l, int p, int q);            // W(k,m,l,p,q)
Multigraph make_cycle(int n);                                           // C(n)
Multigraph make_cycle_with_diagonals(int n, const std::vector<int>& spans);
Multigraph make_open_path(int n);                                       // P(n)

// The twelve graphs of the small cubic poset, in report order.
const std::vector<std::string>& figure5_names();

}  // namespace covers
