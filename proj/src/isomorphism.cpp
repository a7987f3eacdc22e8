#include "covers/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace covers {

namespace {

// Edge triple under a relabeling: (kind, min endpoint, max endpoint).
CanonicalForm signature_under(const Multigraph& g, const std::vector<int>& label) {
  std::vector<std::array<std::int32_t, 3>> triples;
  triples.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    std::int32_t kind = e.kind == EdgeKind::Normal ? 0 : e.kind == EdgeKind::Loop ? 1 : 2;
    std::int32_t a = label[e.u], b = label[e.v];
    if (a > b) std::swap(a, b);
    triples.push_back({kind, a, b});
  }
  std::sort(triples.begin(), triples.end());
  CanonicalForm out;
  out.reserve(1 + 3 * triples.size());
  out.push_back(g.vertex_count());
  for (auto& t : triples) {
    out.push_back(t[0]);
    out.push_back(t[1]);
    out.push_back(t[2]);
  }
  return out;
}

struct Canonizer {
  const Multigraph& g;
  int n;
  std::vector<std::vector<std::pair<VertexId, int>>> nbrs;  // normal adjacency with multiplicity
  std::vector<int> loops, semis, deg;
  CanonicalForm best;
  bool have_best = false;
  // Discovered automorphisms collapse the branch candidates: two leaves with
  // equal signatures differ by an automorphism, so their orbits merge and
  // only one candidate per orbit needs exploring.
  std::vector<int> orbit;
  std::vector<int> first_label;
  CanonicalForm first_sig;
  int first_leaf_root = -1;     // root-level candidate owning the first leaf
  int current_root = -1;        // root-level candidate being explored
  bool abort_subtree = false;   // unwind to the root loop

  explicit Canonizer(const Multigraph& graph) : g(graph), n(graph.vertex_count()) {
    std::vector<std::map<VertexId, int>> tmp(n);
    loops.assign(n, 0);
    semis.assign(n, 0);
    for (const Edge& e : g.edges()) {
      switch (e.kind) {
        case EdgeKind::Normal:
          ++tmp[e.u][e.v];
          ++tmp[e.v][e.u];
          break;
        case EdgeKind::Loop: ++loops[e.v]; break;
        case EdgeKind::Semi: ++semis[e.v]; break;
      }
    }
    nbrs.resize(n);
    for (int v = 0; v < n; ++v)
      for (auto [w, c] : tmp[v]) nbrs[v].push_back({w, c});
    deg = degrees(g);
    packable = n <= 60;
    for (int v = 0; v < n && packable; ++v) {
      if (nbrs[v].size() > 7) packable = false;
      for (auto [w, c] : nbrs[v])
        if (c > 3) packable = false;
    }
  }

  // Refine colors to a stable ordered partition; cell order follows the
  // sorted refinement keys, so it is isomorphism-invariant. Small graphs
  // with few neighbors per vertex pack each key exactly into 64 bits; the
  // path is fixed per graph, so the resulting invariant is deterministic.
  bool packable = false;

  std::vector<int> refine(std::vector<int> color) const {
    if (packable) return refine_packed(std::move(color));
    while (true) {
      std::vector<std::pair<std::vector<std::int64_t>, int>> keys(n);
      for (int v = 0; v < n; ++v) {
        std::vector<std::int64_t> key;
        key.push_back(color[v]);
        std::vector<std::int64_t> neigh;
        for (auto [w, c] : nbrs[v]) neigh.push_back(static_cast<std::int64_t>(color[w]) * 64 + c);
        std::sort(neigh.begin(), neigh.end());
        key.insert(key.end(), neigh.begin(), neigh.end());
        keys[v] = {std::move(key), v};
      }
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return keys[a].first < keys[b].first; });
      std::vector<int> next(n);
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && keys[order[i]].first != keys[order[i - 1]].first) ++c;
        next[order[i]] = c;
      }
      if (next == color) return color;
      color = std::move(next);
    }
  }

  // Exact 64-bit encoding: own color in the top byte, then up to 7 sorted
  // neighbor bytes (color*4 + multiplicity, never zero), zero-padded.
  std::vector<int> refine_packed(std::vector<int> color) const {
    std::vector<std::pair<std::uint64_t, int>> keys(n);
    while (true) {
      for (int v = 0; v < n; ++v) {
        std::uint8_t item[7];
        int cnt = 0;
        for (auto [w, c] : nbrs[v]) {
          std::uint8_t b = static_cast<std::uint8_t>(color[w] * 4 + c);
          int at = cnt++;
          while (at > 0 && item[at - 1] > b) {
            item[at] = item[at - 1];
            --at;
          }
          item[at] = b;
        }
        std::uint64_t key = static_cast<std::uint64_t>(color[v]);
        for (int i = 0; i < 7; ++i) key = (key << 8) | (i < cnt ? item[i] : 0);
        keys[v] = {key, v};
      }
      std::sort(keys.begin(), keys.end());
      std::vector<int> next(n);
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && keys[i].first != keys[i - 1].first) ++c;
        next[keys[i].second] = c;
      }
      if (next == color) return color;
      color = std::move(next);
    }
  }

  int find_orbit(int v) {
    while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
    return v;
  }

  void search(std::vector<int> color, int depth) {
    color = refine(color);
    // First non-singleton cell, by color index.
    std::vector<int> cell_size(n, 0);
    for (int c : color) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    if (target == -1) {
      // Discrete: color is a bijection onto 0..n-1.
      CanonicalForm sig = signature_under(g, color);
      if (first_label.empty()) {
        first_label = color;
        first_sig = sig;
        first_leaf_root = current_root;
      } else if (sig == first_sig) {
        // color and first_label agree on the edge multiset: the map sending
        // the vertex at each position in one labeling to the vertex at the
        // same position in the other is an automorphism
        std::vector<int> at_pos(n);
        for (int v = 0; v < n; ++v) at_pos[first_label[v]] = v;
        for (int v = 0; v < n; ++v) {
          int a = find_orbit(v), b = find_orbit(at_pos[color[v]]);
          if (a != b) orbit[std::max(a, b)] = std::min(a, b);
        }
        // the two leaves sit under different root branches: everything else
        // under the current branch repeats the first one up to the
        // automorphism just found
        if (current_root != first_leaf_root) abort_subtree = true;
      }
      if (!have_best || sig < best) {
        best = std::move(sig);
        have_best = true;
      }
      return;
    }
    // Orbit pruning is only valid where no vertex has been individualized
    // yet; deeper levels would need the stabilizer of the choices made.
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      if (depth == 0) {
        int root = find_orbit(v);
        bool seen_orbit = false;
        for (int t : tried)
          if (find_orbit(t) == root) seen_orbit = true;
        if (seen_orbit) continue;
        tried.push_back(v);
        current_root = v;
        abort_subtree = false;
      }
      std::vector<int> next = color;
      for (int w = 0; w < n; ++w)
        if (next[w] >= target && w != v) ++next[w];
      search(std::move(next), depth + 1);
      if (abort_subtree && depth > 0) return;
    }
    if (depth == 0) abort_subtree = false;
  }
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {0};
  Canonizer cz(g);
  // Initial coloring by (degree, loops, semis), isomorphism-invariant.
  std::vector<std::array<int, 3>> init(n);
  for (int v = 0; v < n; ++v) init[v] = {cz.deg[v], cz.loops[v], cz.semis[v]};
  auto sorted = init;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v)
    color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), init[v]) - sorted.begin());
  cz.orbit.resize(cz.n);
  std::iota(cz.orbit.begin(), cz.orbit.end(), 0);
  cz.search(std::move(color), 0);
  return cz.best;
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<int> automorphism_orbits(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw error("automorphism_orbits: graph too large for brute force");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm id_sig = signature_under(g, perm);
  std::vector<int> orbit(n);
  std::iota(orbit.begin(), orbit.end(), 0);
  auto find_root = [&](int v) {
    while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
    return v;
  };
  std::vector<int> p = perm;
  do {
    // p is an automorphism iff it maps the edge multiset to itself.
    if (signature_under(g, p) == id_sig)
      for (int v = 0; v < n; ++v) {
        int a = find_root(v), b = find_root(p[v]);
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
  } while (std::next_permutation(p.begin(), p.end()));
  for (int v = 0; v < n; ++v) orbit[v] = find_root(v);
  return orbit;
}

}  // namespace covers
