// Shared test helpers: deterministic random multigraphs and small oracles.
#pragma once

#include <cstdint>
#include <vector>

#include "covers/multigraph.hpp"

namespace covers::testutil {

// xorshift64, fixed seeds only; tests must be reproducible.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Random multigraph within the acceptance bounds: <= max_vertices vertices,
// normal multiplicity <= 3, <= 2 loops and <= 2 semi-edges per vertex.
inline Multigraph random_multigraph(Rng& rng, int max_vertices = 8) {
  int n = 1 + rng.below(max_vertices);
  Multigraph g(n);
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  std::vector<int> loops(n, 0), semis(n, 0);
  int attempts = rng.below(2 * n + 4);
  for (int i = 0; i < attempts; ++i) {
    int pick = rng.below(4);
    if (pick == 0 && n >= 2) {
      int u = rng.below(n), v = rng.below(n);
      if (u == v) continue;
      int a = std::min(u, v), b = std::max(u, v);
      if (mult[a][b] >= 3) continue;
      ++mult[a][b];
      g.add_normal(a, b);
    } else if (pick == 1) {
      int v = rng.below(n);
      if (loops[v] >= 2) continue;
      ++loops[v];
      g.add_loop(v);
    } else if (pick == 2) {
      int v = rng.below(n);
      if (semis[v] >= 2) continue;
      ++semis[v];
      g.add_semi(v);
    } else if (n >= 2) {
      int u = rng.below(n), v = rng.below(n);
      if (u == v) continue;
      int a = std::min(u, v), b = std::max(u, v);
      if (mult[a][b] >= 3) continue;
      ++mult[a][b];
      g.add_normal(a, b);
    }
  }
  return g;
}

}  // namespace covers::testutil
