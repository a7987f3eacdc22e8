#include "covers/multigraph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace covers {

int degree(const Multigraph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw error("vertex id out of range");
  int d = 0;
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Normal:
        if (e.u == v) ++d;
        if (e.v == v) ++d;
        break;
      case EdgeKind::Loop:
        if (e.v == v) d += 2;
        break;
      case EdgeKind::Semi:
        if (e.v == v) ++d;
        break;
    }
  }
  return d;
}

std::vector<int> degrees(const Multigraph& g) {
  std::vector<int> d(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Normal:
        ++d[e.u];
        ++d[e.v];
        break;
      case EdgeKind::Loop:
        d[e.v] += 2;
        break;
      case EdgeKind::Semi:
        ++d[e.v];
        break;
    }
  }
  return d;
}

bool is_regular(const Multigraph& g, int d) {
  auto ds = degrees(g);
  return std::all_of(ds.begin(), ds.end(), [d](int x) { return x == d; });
}

bool is_cubic(const Multigraph& g) { return is_regular(g, 3); }

int loop_count_at(const Multigraph& g, VertexId v) {
  int c = 0;
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Loop && e.v == v) ++c;
  return c;
}

int semi_count_at(const Multigraph& g, VertexId v) {
  int c = 0;
  for (const Edge& e : g.edges())
    if (e.kind == EdgeKind::Semi && e.v == v) ++c;
  return c;
}

bool has_loops(const Multigraph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.kind == EdgeKind::Loop; });
}

bool has_semi_edges(const Multigraph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.kind == EdgeKind::Semi; });
}

int max_edge_multiplicity(const Multigraph& g) {
  std::map<std::pair<VertexId, VertexId>, int> mult;
  int best = 0;
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Normal) continue;
    auto key = std::minmax(e.u, e.v);
    best = std::max(best, ++mult[{key.first, key.second}]);
  }
  return best;
}

bool is_simple(const Multigraph& g) {
  std::map<std::pair<VertexId, VertexId>, int> seen;
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Normal) return false;
    auto key = std::minmax(e.u, e.v);
    if (++seen[{key.first, key.second}] > 1) return false;
  }
  return true;
}

std::optional<std::vector<int>> bipartition(const Multigraph& g) {
  const int n = g.vertex_count();
  for (const Edge& e : g.edges())
    if (e.kind != EdgeKind::Normal) return std::nullopt;
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Multigraph& g) { return bipartition(g).has_value(); }

std::vector<int> component_labels(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> adj(n);
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Normal) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : adj[v])
        if (label[w] == -1) {
          label[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return label;
}

int component_count(const Multigraph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

bool is_connected(const Multigraph& g) {
  return g.vertex_count() <= 1 || component_count(g) == 1;
}

namespace {

// Lowpoint DFS over normal edges; a tree edge is a bridge unless a back edge
// (including a parallel mate, which uses a different edge id) reaches above.
struct BridgeDfs {
  const std::vector<std::vector<std::pair<VertexId, EdgeId>>>& adj;
  std::vector<int> disc, low;
  std::vector<EdgeId> out;
  int timer = 0;

  void run(VertexId v, EdgeId parent_edge) {
    disc[v] = low[v] = timer++;
    for (auto [w, e] : adj[v]) {
      if (e == parent_edge) continue;
      if (disc[w] == -1) {
        run(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

std::vector<EdgeId> bridges(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Normal) continue;
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  BridgeDfs dfs{adj, std::vector<int>(n, -1), std::vector<int>(n, -1), {}, 0};
  for (VertexId v = 0; v < n; ++v)
    if (dfs.disc[v] == -1) dfs.run(v, -1);
  std::sort(dfs.out.begin(), dfs.out.end());
  return dfs.out;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  Multigraph g(a.vertex_count() + b.vertex_count());
  const int shift = a.vertex_count();
  for (const Edge& e : a.edges()) {
    switch (e.kind) {
      case EdgeKind::Normal: g.add_normal(e.u, e.v); break;
      case EdgeKind::Loop: g.add_loop(e.v); break;
      case EdgeKind::Semi: g.add_semi(e.v); break;
    }
  }
  for (const Edge& e : b.edges()) {
    switch (e.kind) {
      case EdgeKind::Normal: g.add_normal(e.u + shift, e.v + shift); break;
      case EdgeKind::Loop: g.add_loop(e.v + shift); break;
      case EdgeKind::Semi: g.add_semi(e.v + shift); break;
    }
  }
  return g;
}

}  // namespace covers
