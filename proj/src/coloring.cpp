#include "covers/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace covers {

namespace {

struct ColorSearch {
  const Multigraph& g;
  int k;
  std::vector<std::vector<EdgeId>> conflicts;  // edges sharing a vertex
  std::vector<int> color;                      // -1 = unassigned
  std::vector<std::vector<int>> blocked;       // [edge][color] -> #conflicting neighbors using it
  int assigned = 0;
  int max_used = -1;  // colors 0..max_used are in use (canonical introduction order)

  ColorSearch(const Multigraph& graph, int palette) : g(graph), k(palette) {
    const int m = g.edge_count();
    std::vector<std::vector<EdgeId>> at(g.vertex_count());
    for (EdgeId i = 0; i < m; ++i) {
      const Edge& e = g.edge(i);
      at[e.u].push_back(i);
      if (e.kind == EdgeKind::Normal) at[e.v].push_back(i);
    }
    std::vector<std::vector<char>> seen(m, std::vector<char>(m, 0));
    conflicts.resize(m);
    for (auto& lst : at)
      for (EdgeId a : lst)
        for (EdgeId b : lst)
          if (a != b && !seen[a][b]) {
            seen[a][b] = 1;
            conflicts[a].push_back(b);
          }
    color.assign(m, -1);
    blocked.assign(m, std::vector<int>(k, 0));
  }

  int candidate_count(EdgeId e) const {
    int hi = std::min(k - 1, max_used + 1);
    int c = 0;
    for (int i = 0; i <= hi; ++i)
      if (blocked[e][i] == 0) ++c;
    return c;
  }

  bool search() {
    if (assigned == g.edge_count()) return true;
    // Fail-first: fewest available colors, ties by edge id.
    EdgeId pick = -1;
    int best = k + 2;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (color[e] != -1) continue;
      int c = candidate_count(e);
      if (c < best) {
        best = c;
        pick = e;
        if (c <= 1) break;
      }
    }
    if (best == 0) return false;
    int hi = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= hi; ++c) {
      if (blocked[pick][c] != 0) continue;
      int prev_max = max_used;
      color[pick] = c;
      max_used = std::max(max_used, c);
      ++assigned;
      for (EdgeId nb : conflicts[pick]) ++blocked[nb][c];
      if (search()) return true;
      for (EdgeId nb : conflicts[pick]) --blocked[nb][c];
      --assigned;
      color[pick] = -1;
      max_used = prev_max;
    }
    return false;
  }
};

// In a d-regular graph colored with exactly d colors and no semi-edges,
// every color class is a perfect matching, and a perfect matching crosses a
// one-edge cut with odd shore an odd number of times. Three or more classes
// cannot share a single cut edge, so such a palette is infeasible.
bool regular_parity_obstruction(const Multigraph& g, int k) {
  if (has_semi_edges(g)) return false;
  if (!is_regular(g, k)) return false;
  if (k < 2) return false;
  auto brs = bridges(g);
  if (brs.empty()) return false;
  auto labels = component_labels(g);
  for (EdgeId b : brs) {
    const Edge& e = g.edge(b);
    // Shore size of the cut: vertices reachable from e.u without crossing b.
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{e.u};
    seen[e.u] = 1;
    int size = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (EdgeId i = 0; i < g.edge_count(); ++i) {
        if (i == b) continue;
        const Edge& f = g.edge(i);
        if (f.kind != EdgeKind::Normal) continue;
        VertexId w;
        if (f.u == v) w = f.v;
        else if (f.v == v) w = f.u;
        else continue;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    (void)labels;
    if (size % 2 == 1) return true;
  }
  return false;
}

}  // namespace

std::optional<EdgeColoring> edge_coloring_with(const Multigraph& g, int k) {
  if (k < 0) throw error("palette size must be nonnegative");
  if (has_loops(g)) return std::nullopt;
  if (g.edge_count() == 0) return EdgeColoring{{}, 0};
  if (k == 0) return std::nullopt;
  if (regular_parity_obstruction(g, k)) return std::nullopt;
  ColorSearch cs(g, k);
  if (!cs.search()) return std::nullopt;
  EdgeColoring out{cs.color, cs.max_used + 1};
  return out;
}

ChromaticIndex chromatic_index(const Multigraph& g) {
  ChromaticIndex res;
  if (has_loops(g)) {
    res.finite = false;
    return res;
  }
  if (g.edge_count() == 0) {
    res.value = 0;
    res.witness = EdgeColoring{{}, 0};
    return res;
  }
  auto degs = degrees(g);
  int delta = *std::max_element(degs.begin(), degs.end());
  // Shannon's bound 3*delta/2 caps the search; a semi-edge behaves as an
  // edge to a private leaf, which does not change the bound.
  int upper = (3 * delta) / 2;
  for (int k = std::max(delta, 1); k <= upper; ++k) {
    auto witness = edge_coloring_with(g, k);
    if (witness) {
      res.value = k;
      res.witness = std::move(witness);
      if (!verify_edge_coloring(g, *res.witness))
        throw error("internal error: invalid coloring witness");
      return res;
    }
  }
  throw error("internal error: chromatic index above Shannon bound");
}

bool verify_edge_coloring(const Multigraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.edge_count()) return false;
  for (int col : c.colors)
    if (col < 0 || col >= c.palette_size) return false;
  // Each color class must have maximum degree 1.
  std::vector<std::vector<int>> load(c.palette_size, std::vector<int>(g.vertex_count(), 0));
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    auto& l = load[c.colors[i]];
    switch (e.kind) {
      case EdgeKind::Normal: ++l[e.u]; ++l[e.v]; break;
      case EdgeKind::Loop: return false;
      case EdgeKind::Semi: ++l[e.v]; break;
    }
  }
  for (auto& l : load)
    for (int x : l)
      if (x > 1) return false;
  return true;
}

std::string coloring_to_text(const EdgeColoring& c) {
  std::ostringstream out;
  for (size_t e = 0; e < c.colors.size(); ++e) out << "c " << e << " " << c.colors[e] << "\n";
  return out.str();
}

}  // namespace covers
