#include "covers/cover_search.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "covers/isomorphism.hpp"

namespace covers {

namespace {

struct TargetInfo {
  const Multigraph& H;
  std::vector<int> deg, loops, semis;
  std::map<std::pair<VertexId, VertexId>, int> mult;          // unordered pair -> multiplicity
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> normal_edges;
  std::vector<std::vector<EdgeId>> loop_edges, semi_edges;

  explicit TargetInfo(const Multigraph& h) : H(h) {
    deg = degrees(h);
    loops.assign(h.vertex_count(), 0);
    semis.assign(h.vertex_count(), 0);
    loop_edges.resize(h.vertex_count());
    semi_edges.resize(h.vertex_count());
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
      const Edge& e = h.edge(i);
      switch (e.kind) {
        case EdgeKind::Normal: {
          auto key = std::minmax(e.u, e.v);
          ++mult[{key.first, key.second}];
          normal_edges[{key.first, key.second}].push_back(i);
          break;
        }
        case EdgeKind::Loop:
          ++loops[e.v];
          loop_edges[e.v].push_back(i);
          break;
        case EdgeKind::Semi:
          ++semis[e.v];
          semi_edges[e.v].push_back(i);
          break;
      }
    }
  }

  int multiplicity(VertexId a, VertexId b) const {
    auto key = std::minmax(a, b);
    auto it = mult.find({key.first, key.second});
    return it == mult.end() ? 0 : it->second;
  }
};

// Search state for one connected source component.
struct ComponentSearch {
  const Multigraph& G;
  const TargetInfo& T;
  ProjectionKind kind;
  int fold;  // fiber size within this component

  std::vector<VertexId> order;          // BFS order of component vertices
  std::vector<VertexId> comp_vertices;  // ascending
  std::vector<EdgeId> comp_edges;       // ascending
  std::vector<int> src_deg, src_loops, src_semis;

  std::vector<VertexId> vmap;        // source vertex -> target vertex (-1 unassigned)
  std::vector<int> fiber_size;       // per target vertex
  std::vector<int> same_cnt;         // normal edges into own fiber, per source vertex
  std::vector<std::vector<int>> pair_cnt;  // [source vertex][target vertex]

  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj;  // normal adjacency

  std::vector<EdgeId> emap;  // source edge -> target edge (-1 unassigned)
  std::vector<VertexId> root_candidates;

  ComponentSearch(const Multigraph& g, const TargetInfo& t, ProjectionKind k,
                  const std::vector<VertexId>& vertices, int fold_count,
                  const std::vector<VertexId>& roots)
      : G(g), T(t), kind(k), fold(fold_count), comp_vertices(vertices), root_candidates(roots) {
    src_deg = degrees(g);
    src_loops.assign(g.vertex_count(), 0);
    src_semis.assign(g.vertex_count(), 0);
    adj.resize(g.vertex_count());
    std::vector<char> in_comp(g.vertex_count(), 0);
    for (VertexId v : vertices) in_comp[v] = 1;
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (!in_comp[e.u]) continue;
      switch (e.kind) {
        case EdgeKind::Normal:
          adj[e.u].push_back({e.v, i});
          adj[e.v].push_back({e.u, i});
          comp_edges.push_back(i);
          break;
        case EdgeKind::Loop:
          ++src_loops[e.v];
          comp_edges.push_back(i);
          break;
        case EdgeKind::Semi:
          ++src_semis[e.v];
          comp_edges.push_back(i);
          break;
      }
    }
    std::sort(comp_edges.begin(), comp_edges.end());
    comp_edges.erase(std::unique(comp_edges.begin(), comp_edges.end()), comp_edges.end());

    // BFS order from the least vertex.
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(vertices.front());
    seen[vertices.front()] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (auto [w, e] : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }

    vmap.assign(g.vertex_count(), -1);
    fiber_size.assign(t.H.vertex_count(), 0);
    same_cnt.assign(g.vertex_count(), 0);
    pair_cnt.assign(g.vertex_count(), std::vector<int>(t.H.vertex_count(), 0));
    emap.assign(g.edge_count(), -1);
  }

  // Per-vertex kind feasibility of mapping v onto t.
  bool kinds_fit(VertexId v, VertexId t) const {
    if (src_deg[v] != T.deg[t]) return false;
    if (src_loops[v] > T.loops[t]) return false;
    if (kind == ProjectionKind::Cover) {
      if (src_semis[v] > T.semis[t]) return false;
    } else {
      int overflow = std::max(0, src_semis[v] - T.semis[t]);
      if (2 * src_loops[v] + overflow > 2 * T.loops[t]) return false;
    }
    return true;
  }

  bool assign_vertex(VertexId v, VertexId t, std::vector<std::pair<VertexId, VertexId>>& touched) {
    vmap[v] = t;
    ++fiber_size[t];
    // Own-fiber capacity from loops/semis alone.
    if (same_cnt[v] + 2 * src_loops[v] + src_semis[v] > 2 * T.loops[t] + T.semis[t]) return false;
    for (auto [w, e] : adj[v]) {
      if (vmap[w] == -1) continue;
      VertexId tw = vmap[w];
      if (tw == t) {
        ++same_cnt[v];
        ++same_cnt[w];
        touched.push_back({v, w});
        if (same_cnt[v] + 2 * src_loops[v] + src_semis[v] > 2 * T.loops[t] + T.semis[t]) return false;
        if (same_cnt[w] + 2 * src_loops[w] + src_semis[w] > 2 * T.loops[tw] + T.semis[tw]) return false;
      } else {
        ++pair_cnt[v][tw];
        ++pair_cnt[w][t];
        touched.push_back({v, w});
        int cap = T.multiplicity(t, tw);
        if (pair_cnt[v][tw] > cap || pair_cnt[w][t] > cap) return false;
      }
    }
    return true;
  }

  void undo_vertex(VertexId v, VertexId t, const std::vector<std::pair<VertexId, VertexId>>& touched) {
    for (auto [x, w] : touched) {
      if (vmap[x] == vmap[w]) {
        --same_cnt[x];
        --same_cnt[w];
      } else {
        --pair_cnt[x][vmap[w]];
        --pair_cnt[w][vmap[x]];
      }
    }
    --fiber_size[t];
    vmap[v] = -1;
  }

  bool search_vertices(size_t idx) {
    if (idx == order.size()) return assign_edges();
    VertexId v = order[idx];
    const int limit = idx == 0 ? static_cast<int>(root_candidates.size()) : T.H.vertex_count();
    for (int ci = 0; ci < limit; ++ci) {
      VertexId t = idx == 0 ? root_candidates[ci] : ci;
      if (!kinds_fit(v, t)) continue;
      if (fiber_size[t] == fold) continue;
      std::vector<std::pair<VertexId, VertexId>> touched;
      bool ok = assign_vertex(v, t, touched);
      if (ok && search_vertices(idx + 1)) return true;
      undo_vertex(v, t, touched);
    }
    return false;
  }

  // Candidate target edges for a source edge under the current vertex map.
  void edge_candidates(EdgeId e, std::vector<EdgeId>& out) const {
    out.clear();
    const Edge& se = G.edge(e);
    VertexId a = vmap[se.u], b = vmap[se.v];
    switch (se.kind) {
      case EdgeKind::Normal:
        if (a != b) {
          auto key = std::minmax(a, b);
          auto it = T.normal_edges.find({key.first, key.second});
          if (it != T.normal_edges.end()) out = it->second;
        } else {
          out = T.loop_edges[a];
          out.insert(out.end(), T.semi_edges[a].begin(), T.semi_edges[a].end());
          std::sort(out.begin(), out.end());
        }
        break;
      case EdgeKind::Loop:
        out = T.loop_edges[a];
        break;
      case EdgeKind::Semi:
        out = T.semi_edges[a];
        if (kind == ProjectionKind::SemiCover) {
          out.insert(out.end(), T.loop_edges[a].begin(), T.loop_edges[a].end());
          std::sort(out.begin(), out.end());
        }
        break;
    }
  }

  // Remaining capacity of target edge t at source vertex v.
  // normal/semi images admit one incidence per fiber vertex, loop images two.
  std::vector<std::map<EdgeId, int>> load;  // per source vertex

  int capacity(VertexId v, EdgeId t) const {
    const Edge& te = T.H.edge(t);
    int cap = te.kind == EdgeKind::Loop ? 2 : 1;
    auto& l = load[v];
    auto it = l.find(t);
    return cap - (it == l.end() ? 0 : it->second);
  }

  bool fits(EdgeId e, EdgeId t) const {
    const Edge& se = G.edge(e);
    if (se.kind == EdgeKind::Normal) {
      if (se.u == se.v) return false;
      if (vmap[se.u] == vmap[se.v]) {
        // both incidences land in the same fiber
        if (capacity(se.u, t) < 1 || capacity(se.v, t) < 1) return false;
        return true;
      }
      return capacity(se.u, t) >= 1 && capacity(se.v, t) >= 1;
    }
    if (se.kind == EdgeKind::Loop) return capacity(se.v, t) >= 2;
    return capacity(se.v, t) >= 1;
  }

  void apply(EdgeId e, EdgeId t, int dir) {
    const Edge& se = G.edge(e);
    if (se.kind == EdgeKind::Normal) {
      load[se.u][t] += dir;
      load[se.v][t] += dir;
    } else if (se.kind == EdgeKind::Loop) {
      load[se.v][t] += 2 * dir;
    } else {
      load[se.v][t] += dir;
    }
  }

  bool assign_edges() {
    load.assign(G.vertex_count(), {});
    for (EdgeId e : comp_edges) emap[e] = -1;
    return edge_backtrack();
  }

  bool edge_backtrack() {
    // Fail-first: pick the unassigned edge with the fewest feasible
    // candidates.
    EdgeId pick = -1;
    int best = -1;
    std::vector<EdgeId> cands, best_cands;
    for (EdgeId e : comp_edges) {
      if (emap[e] != -1) continue;
      edge_candidates(e, cands);
      int feasible = 0;
      for (EdgeId t : cands)
        if (fits(e, t)) ++feasible;
      if (best == -1 || feasible < best) {
        best = feasible;
        pick = e;
        best_cands = cands;
        if (feasible == 0) return false;
        if (feasible == 1) break;
      }
    }
    if (pick == -1) return true;  // all assigned
    for (EdgeId t : best_cands) {
      if (!fits(pick, t)) continue;
      emap[pick] = t;
      apply(pick, t, +1);
      if (edge_backtrack()) return true;
      apply(pick, t, -1);
      emap[pick] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<CoverProjection> find_cover(const Multigraph& source, const Multigraph& target,
                                          ProjectionKind kind) {
  if (target.vertex_count() == 0) throw error("find_cover: target must be nonempty");
  if (!is_connected(target)) throw error("find_cover: target must be connected");
  if (source.vertex_count() == 0) return std::nullopt;
  if (source.vertex_count() % target.vertex_count() != 0) return std::nullopt;

  TargetInfo info(target);

  // Root symmetry breaking for tiny targets.
  std::vector<VertexId> roots;
  if (target.vertex_count() <= 4) {
    auto orbit = automorphism_orbits(target);
    for (VertexId v = 0; v < target.vertex_count(); ++v)
      if (orbit[v] == v) roots.push_back(v);
  } else {
    roots.resize(target.vertex_count());
    for (int i = 0; i < target.vertex_count(); ++i) roots[i] = i;
  }

  auto labels = component_labels(source);
  int comp_n = source.vertex_count() ? 1 + *std::max_element(labels.begin(), labels.end()) : 0;
  std::vector<std::vector<VertexId>> comps(comp_n);
  for (VertexId v = 0; v < source.vertex_count(); ++v) comps[labels[v]].push_back(v);

  CoverProjection proj{source, target, std::vector<VertexId>(source.vertex_count(), -1),
                       std::vector<EdgeId>(source.edge_count(), -1)};
  for (auto& comp : comps) {
    if (static_cast<int>(comp.size()) % target.vertex_count() != 0) return std::nullopt;
    int fold = static_cast<int>(comp.size()) / target.vertex_count();
    ComponentSearch cs(source, info, kind, comp, fold, roots);
    if (!cs.search_vertices(0)) return std::nullopt;
    for (VertexId v : comp) proj.vertex_map[v] = cs.vmap[v];
    for (EdgeId e : cs.comp_edges) proj.edge_map[e] = cs.emap[e];
  }

  auto check = verify_projection(proj, kind);
  if (!check.ok) throw error("internal error: find_cover produced an invalid projection");
  return proj;
}

}  // namespace covers
