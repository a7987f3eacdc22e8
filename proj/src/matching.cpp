#include "covers/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "covers/catalog.hpp"
#include "covers/products.hpp"

namespace covers {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// Collapsed simple adjacency: loops dropped, parallel bundles mapped to the
// lowest original edge id.
struct SimpleView {
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_of_pair;
  BoostGraph graph;

  explicit SimpleView(const Multigraph& g) : graph(g.vertex_count()) {
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (e.kind != EdgeKind::Normal) continue;
      auto key = std::minmax(e.u, e.v);
      if (edge_of_pair.emplace(std::pair{key.first, key.second}, i).second)
        boost::add_edge(key.first, key.second, graph);
    }
  }
};

}  // namespace

std::optional<std::vector<EdgeId>> has_perfect_matching(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::vector<EdgeId>{};
  SimpleView view(g);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(n);
  bool ok = boost::checked_edmonds_maximum_cardinality_matching(view.graph, &mate[0]);
  if (!ok) throw error("internal error: matching algorithm self-check failed");
  std::vector<EdgeId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (mate[v] == boost::graph_traits<BoostGraph>::null_vertex()) return std::nullopt;
    VertexId w = static_cast<VertexId>(mate[v]);
    if (v < w) {
      auto key = std::minmax(v, w);
      out.push_back(view.edge_of_pair.at({key.first, key.second}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_semi_perfect_matching(const Multigraph& g, const std::vector<EdgeId>& edges) {
  std::vector<int> met(g.vertex_count(), 0);
  for (EdgeId i : edges) {
    if (i < 0 || i >= g.edge_count()) return false;
    const Edge& e = g.edge(i);
    switch (e.kind) {
      case EdgeKind::Normal: ++met[e.u]; ++met[e.v]; break;
      case EdgeKind::Loop: return false;
      case EdgeKind::Semi: ++met[e.v]; break;
    }
  }
  return std::all_of(met.begin(), met.end(), [](int x) { return x == 1; });
}

std::optional<SemiPerfectMatching> has_semi_perfect_matching(const Multigraph& g) {
  DoubleCover dc = parallel_double_cover(g);
  auto pm = has_perfect_matching(dc.graph);
  if (!pm) return std::nullopt;
  // Pull back along copy 0: vertex v0 = 2v is matched by exactly one edge of
  // the perfect matching, which is either the copy-0 lift of a normal edge
  // or the rung of a semi-edge.
  std::vector<char> picked(g.edge_count(), 0);
  for (EdgeId i : *pm) {
    EdgeId src = dc.projection.edge_map[i];
    const Edge& e = g.edge(src);
    if (e.kind == EdgeKind::Semi) {
      picked[src] = 1;
    } else if (e.kind == EdgeKind::Normal) {
      auto lifts = lifted_edges(dc, src);
      if (i == lifts.front()) picked[src] = 1;  // copy 0
    }
  }
  SemiPerfectMatching out;
  for (EdgeId i = 0; i < g.edge_count(); ++i)
    if (picked[i]) out.edges.push_back(i);
  if (!is_semi_perfect_matching(g, out.edges))
    throw error("internal error: pulled-back matching is not semi-perfect");
  return out;
}

F11CoverResult covers_f11(const Multigraph& g) {
  if (!is_cubic(g)) throw error("covers_f11: input must be cubic");
  F11CoverResult res;
  std::vector<EdgeId> matched;
  std::vector<char> has_semi(g.vertex_count(), 0);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Semi) continue;
    if (has_semi[e.v]) {
      res.refusal = "vertex " + std::to_string(e.v) +
                    " is incident with two semi-edges; both would have to map to the single semi-edge";
      return res;
    }
    has_semi[e.v] = 1;
    matched.push_back(i);
  }
  // Perfect matching on the semi-free vertices using only normal edges
  // between them.
  Multigraph rest(g.vertex_count());
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Normal && !has_semi[e.u] && !has_semi[e.v]) rest.add_normal(e.u, e.v);
  // Vertices with a semi-edge are already met; pad them with throwaway
  // pendant partners so the matching question is exactly about the rest.
  std::vector<EdgeId> rest_ids;
  {
    rest_ids.clear();
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (e.kind == EdgeKind::Normal && !has_semi[e.u] && !has_semi[e.v]) rest_ids.push_back(i);
    }
  }
  int pad = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (has_semi[v]) ++pad;
  Multigraph padded(g.vertex_count() + pad);
  for (const Edge& e : rest.edges()) padded.add_normal(e.u, e.v);
  {
    int next = g.vertex_count();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (has_semi[v]) padded.add_normal(v, next++);
  }
  auto pm = has_perfect_matching(padded);
  if (!pm) {
    res.refusal = "no perfect matching on the vertices without semi-edges";
    return res;
  }
  for (EdgeId i : *pm)
    if (i < static_cast<EdgeId>(rest.edge_count())) matched.push_back(rest_ids[i]);
  std::sort(matched.begin(), matched.end());
  if (!is_semi_perfect_matching(g, matched))
    throw error("internal error: covers_f11 produced a bad matching");

  Multigraph f11 = make_flower(1, 1);  // semi-edge id 0, loop id 1
  CoverProjection proj{g, f11, std::vector<VertexId>(g.vertex_count(), 0),
                       std::vector<EdgeId>(g.edge_count(), 1)};
  for (EdgeId i : matched) proj.edge_map[i] = 0;
  auto check = verify_cover(proj);
  if (!check.ok) throw error("internal error: covers_f11 certificate does not verify");
  res.covers = true;
  res.certificate = std::move(proj);
  return res;
}

int odd_components_without(const Multigraph& g, const std::vector<VertexId>& removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (VertexId v : removed) gone.at(v) = 1;
  std::vector<int> parent(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Normal || gone[e.u] || gone[e.v]) continue;
    VertexId a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> size(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) ++size[find(v)];
  int odd = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!gone[v] && find(v) == v && size[v] % 2 == 1) ++odd;
  return odd;
}

std::vector<GoodSet> minimal_good_sets(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw error("minimal_good_sets: graph exceeds the 20-vertex cap");
  std::vector<std::vector<VertexId>> good;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<VertexId> x;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) x.push_back(v);
    if (odd_components_without(g, x) > static_cast<int>(x.size())) good.push_back(std::move(x));
  }
  // Keep inclusion-minimal ones.
  auto subset_of = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<GoodSet> out;
  for (const auto& x : good) {
    bool minimal = true;
    for (const auto& y : good)
      if (y.size() < x.size() && subset_of(y, x)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    GoodSet gs;
    gs.vertices = x;
    gs.odd_component_count = odd_components_without(g, x);
    // Very good: no loop in X, no multiple edge touching X.
    std::vector<char> in_x(n, 0);
    for (VertexId v : x) in_x[v] = 1;
    bool very = true;
    for (VertexId v : x)
      if (loop_count_at(g, v) > 0) very = false;
    std::map<std::pair<VertexId, VertexId>, int> mult;
    for (const Edge& e : g.edges())
      if (e.kind == EdgeKind::Normal) {
        auto key = std::minmax(e.u, e.v);
        ++mult[{key.first, key.second}];
      }
    for (auto& [pair, count] : mult)
      if (count >= 2 && (in_x[pair.first] || in_x[pair.second])) very = false;
    gs.very_good = very;
    out.push_back(std::move(gs));
  }
  std::sort(out.begin(), out.end(), [](const GoodSet& a, const GoodSet& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

std::optional<std::vector<VertexId>> has_perfect_code(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::vector<VertexId>{};
  if (n > 25) throw error("has_perfect_code: graph too large for exhaustive search");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Normal) adj[e.u][e.v] = adj[e.v][e.u] = 1;

  std::vector<int> dominated(n, 0);  // #code neighbors
  std::vector<char> in_code(n, 0);
  std::vector<VertexId> code;
  // Include-first depth-first search yields the lexicographically least code.
  auto valid_final = [&]() {
    for (int v = 0; v < n; ++v) {
      if (in_code[v]) continue;
      if (dominated[v] != 1) return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return valid_final();
    // Include v: requires independence and no over-domination.
    bool can_include = dominated[v] == 0;
    if (can_include)
      for (int w = 0; w < v && can_include; ++w)
        if (in_code[w] && adj[v][w]) can_include = false;
    if (can_include) {
      bool over = false;
      for (int w = 0; w < n; ++w)
        if (adj[v][w] && (dominated[w] == 1 || in_code[w])) over = true;
      if (!over) {
        in_code[v] = 1;
        code.push_back(v);
        for (int w = 0; w < n; ++w)
          if (adj[v][w]) ++dominated[w];
        if (rec(v + 1)) return true;
        for (int w = 0; w < n; ++w)
          if (adj[v][w]) --dominated[w];
        code.pop_back();
        in_code[v] = 0;
      }
    }
    // Exclude v: still feasible only if v already dominated or a later
    // neighbor can dominate it.
    bool feasible = dominated[v] == 1;
    if (!feasible)
      for (int w = v + 1; w < n && !feasible; ++w)
        if (adj[v][w] && !in_code[w] && dominated[w] == 0) feasible = true;
    if (feasible && rec(v + 1)) return true;
    return false;
  };
  if (rec(0)) return code;
  return std::nullopt;
}

std::string matching_to_text(const std::vector<EdgeId>& edges) {
  std::ostringstream out;
  for (EdgeId e : edges) out << "m " << e << "\n";
  return out.str();
}

std::string vertex_set_to_text(const std::vector<VertexId>& vertices) {
  std::ostringstream out;
  for (VertexId v : vertices) out << "p " << v << "\n";
  return out.str();
}

}  // namespace covers
