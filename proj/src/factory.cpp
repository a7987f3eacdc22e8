#include "covers/factory.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "covers/coloring.hpp"
#include "covers/matching.hpp"
#include "covers/products.hpp"

namespace covers {

namespace {

int max_loops_at_vertex(const Multigraph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, loop_count_at(g, v));
  return best;
}

// Components of g minus the marked vertices: dense labels in order of first
// appearance by vertex id (-1 on removed vertices), plus the count.
std::pair<std::vector<int>, int> components_without(const Multigraph& g,
                                                    const std::vector<char>& removed) {
  const int n = g.vertex_count();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    if (e.kind != EdgeKind::Normal || removed[e.u] || removed[e.v]) continue;
    VertexId a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> labels(n, -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (removed[v]) continue;
    VertexId root = find(v);
    if (labels[root] == -1) labels[root] = next++;
    labels[v] = labels[root];
  }
  return {labels, next};
}

int local_bound(const Multigraph& g) {  // q = max over v of semis + 2*loops
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, semi_count_at(g, v) + 2 * loop_count_at(g, v));
  return best;
}

// Rounds of the circle-method proper edge coloring of K_p (p even): vertex
// p-1 is fixed, round r pairs it with r and pairs (r+t, r-t) mod (p-1).
std::vector<std::pair<int, int>> round_robin_matching(int p, int r) {
  std::vector<std::pair<int, int>> pairs;
  pairs.push_back({p - 1, r});
  for (int t = 1; t <= p / 2 - 1; ++t) {
    int a = (r + t) % (p - 1);
    int b = ((r - t) % (p - 1) + (p - 1)) % (p - 1);
    pairs.push_back({a, b});
  }
  return pairs;
}

// Emits the pinned p-fold lift of the edges of g induced by `in_comp`.
// Copy i of vertex v gets id v*stride + levels[i]; p = levels.size().
// The emitted lift of a component without semi-edges is simple for any
// p >= max(d, q+1); with semi-edges p must also be even.
void emit_pfold(const Multigraph& g, const std::vector<char>& in_comp,
                const std::vector<int>& levels, int stride, Multigraph& out,
                std::vector<EdgeId>& edge_map_out) {
  const int p = static_cast<int>(levels.size());
  auto vid = [&](VertexId v, int i) { return v * stride + levels[i]; };

  // Factor index of each edge within its parallel bundle / loop list / semi
  // list, in edge id order.
  std::map<std::pair<VertexId, VertexId>, int> bundle_seen;
  std::vector<int> loops_seen(g.vertex_count(), 0), semis_seen(g.vertex_count(), 0);
  std::vector<char> vertex_has_semi(g.vertex_count(), 0);
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (in_comp[e.u] && e.kind == EdgeKind::Semi) vertex_has_semi[e.v] = 1;
  }

  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (!in_comp[e.u] || !in_comp[e.v]) continue;
    switch (e.kind) {
      case EdgeKind::Normal: {
        VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        int j = bundle_seen[{a, b}]++;
        if (j >= p) throw error("p-fold cover: fold below edge multiplicity");
        for (int i2 = 0; i2 < p; ++i2) {
          out.add_normal(vid(a, i2), vid(b, (i2 + j) % p));
          edge_map_out.push_back(i);
        }
        break;
      }
      case EdgeKind::Loop: {
        VertexId v = e.v;
        int idx = loops_seen[v]++;
        if (!vertex_has_semi[v]) {
          int j = idx + 1;  // shifted orbit u_i u_{i+j}
          assert(2 * j != p && "degenerate loop orbit excluded by the fold bound");
          if (j >= p) throw error("p-fold cover: fold too small for loops");
          for (int i2 = 0; i2 < p; ++i2) {
            out.add_normal(vid(v, i2), vid(v, (i2 + j) % p));
            edge_map_out.push_back(i);
          }
        } else {
          if (p % 2 != 0) throw error("p-fold cover: even fold required with semi-edges");
          // colors 2*idx and 2*idx+1 of the K_p round-robin coloring
          for (int r : {2 * idx, 2 * idx + 1}) {
            if (r >= p - 1) throw error("p-fold cover: fold too small at a semi-edge vertex");
            for (auto [x, y] : round_robin_matching(p, r)) {
              out.add_normal(vid(v, x), vid(v, y));
              edge_map_out.push_back(i);
            }
          }
        }
        break;
      }
      case EdgeKind::Semi: {
        VertexId v = e.v;
        if (p % 2 != 0) throw error("p-fold cover: even fold required with semi-edges");
        int r = 2 * loop_count_at(g, v) + semis_seen[v]++;
        if (r >= p - 1) throw error("p-fold cover: fold too small at a semi-edge vertex");
        for (auto [x, y] : round_robin_matching(p, r)) {
          out.add_normal(vid(v, x), vid(v, y));
          edge_map_out.push_back(i);
        }
        break;
      }
    }
  }
}

FactoryResult finish(Multigraph graph, CoverProjection projection, bool expect_simple = true) {
  if (expect_simple && !is_simple(graph))
    throw error("internal error: factory output is not simple");
  auto check = verify_cover(projection);
  if (!check.ok) throw error("internal error: factory projection does not verify");
  return FactoryResult{std::move(graph), std::move(projection)};
}

}  // namespace

FactoryResult simple_pfold_cover(const Multigraph& g, int p) {
  const int d = max_edge_multiplicity(g);
  const int q = local_bound(g);
  const int bound = std::max(d, q + 1);
  if (p < bound)
    throw error("simple_pfold_cover: fold " + std::to_string(p) + " is below the bound " +
                std::to_string(bound));
  if (has_semi_edges(g) && p % 2 != 0)
    throw error("simple_pfold_cover: even fold required when semi-edges are present");

  Multigraph out(g.vertex_count() * p);
  std::vector<EdgeId> edge_map;
  std::vector<char> all(g.vertex_count(), 1);
  std::vector<int> levels(p);
  for (int i = 0; i < p; ++i) levels[i] = i;
  emit_pfold(g, all, levels, p, out, edge_map);

  std::vector<VertexId> vertex_map(out.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < p; ++i) vertex_map[v * p + i] = v;
  return finish(out, CoverProjection{out, g, std::move(vertex_map), std::move(edge_map)});
}

FactoryResult bridged_simple_cover(const Multigraph& g) {
  if (!is_connected(g)) throw error("bridged_simple_cover: input must be connected");
  if (has_semi_edges(g)) throw error("bridged_simple_cover: input must have no semi-edges");
  auto brs = bridges(g);
  if (brs.empty()) throw error("bridged_simple_cover: input has no bridge");
  if (is_simple(g)) return finish(g, identity_projection(g));

  const EdgeId bridge = brs.front();
  const Edge be = g.edge(bridge);
  const int p = max_edge_multiplicity(g) + 2 * max_loops_at_vertex(g) + 1;
  const int stride = 2 * p + 1;

  // Sides of the bridge.
  std::vector<int> parent(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i == bridge) continue;
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Normal) continue;
    VertexId a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<char> side_u(g.vertex_count(), 0), side_v(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    (find(v) == find(be.u) ? side_u : side_v)[v] = 1;

  Multigraph out(g.vertex_count() * stride);
  std::vector<EdgeId> edge_map;

  // Staggered level blocks: the u side is covered on {0..p} and {p+1..2p},
  // the v side on {1..p} and {0, p+1..2p}; exactly the index-0 rung joins
  // the two halves, so it is a bridge of the result.
  std::vector<int> lo(p + 1), hi(p), v_lo(p), v_hi(p + 1);
  for (int i = 0; i <= p; ++i) lo[i] = i;
  for (int i = 0; i < p; ++i) hi[i] = p + 1 + i;
  for (int i = 0; i < p; ++i) v_lo[i] = 1 + i;
  v_hi[0] = 0;
  for (int i = 0; i < p; ++i) v_hi[i + 1] = p + 1 + i;

  emit_pfold(g, side_u, lo, stride, out, edge_map);
  emit_pfold(g, side_u, hi, stride, out, edge_map);
  emit_pfold(g, side_v, v_lo, stride, out, edge_map);
  emit_pfold(g, side_v, v_hi, stride, out, edge_map);
  for (int i = 0; i < stride; ++i) {
    out.add_normal(be.u * stride + i, be.v * stride + i);
    edge_map.push_back(bridge);
  }

  std::vector<VertexId> vertex_map(out.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < stride; ++i) vertex_map[v * stride + i] = v;
  auto res = finish(out, CoverProjection{out, g, std::move(vertex_map), std::move(edge_map)});
  if (bridges(res.graph).empty()) throw error("internal error: bridged cover lost its bridge");
  return res;
}

namespace {

// One splitting step of the double-edge elimination: replace the second edge
// of a parallel pair by a crossing pair against a simple connected double
// cover. The result covers `g` and has one double edge fewer.
FactoryResult split_double_edge(const Multigraph& g) {
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundles;
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Normal) continue;
    auto key = std::minmax(e.u, e.v);
    bundles[{key.first, key.second}].push_back(i);
  }
  EdgeId doubled = -1;
  for (auto& [pair, ids] : bundles)
    if (ids.size() >= 2) {
      doubled = ids[1];
      break;
    }
  if (doubled == -1) throw error("internal error: no double edge to split");
  const Edge de = g.edge(doubled);

  FactoryResult dc = simple_pfold_cover(g, 2);
  if (!is_connected(dc.graph))
    throw error("internal error: double cover of a multi-edge graph must be connected");
  // Lowest-id preimage of the doubled edge; its endpoint over de.u.
  EdgeId lifted = -1;
  for (EdgeId i = 0; i < dc.graph.edge_count(); ++i)
    if (dc.projection.edge_map[i] == doubled) {
      lifted = i;
      break;
    }
  const Edge le = dc.graph.edge(lifted);
  VertexId xp = dc.projection.vertex_map[le.u] == de.u ? le.u : le.v;
  VertexId yp = xp == le.u ? le.v : le.u;

  const int shift = g.vertex_count();
  Multigraph out(g.vertex_count() + dc.graph.vertex_count());
  std::vector<EdgeId> edge_map;
  std::vector<VertexId> vertex_map(out.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertex_map[v] = v;
  for (VertexId v = 0; v < dc.graph.vertex_count(); ++v)
    vertex_map[shift + v] = dc.projection.vertex_map[v];

  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    if (i == doubled) continue;
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::Normal) out.add_normal(e.u, e.v);
    else if (e.kind == EdgeKind::Loop) out.add_loop(e.v);
    else out.add_semi(e.v);
    edge_map.push_back(i);
  }
  for (EdgeId i = 0; i < dc.graph.edge_count(); ++i) {
    if (i == lifted) continue;
    const Edge& e = dc.graph.edge(i);
    out.add_normal(shift + e.u, shift + e.v);
    edge_map.push_back(dc.projection.edge_map[i]);
  }
  out.add_normal(shift + xp, de.v);  // x' -- y
  edge_map.push_back(doubled);
  out.add_normal(de.u, shift + yp);  // x -- y'
  edge_map.push_back(doubled);

  CoverProjection proj{out, g, std::move(vertex_map), std::move(edge_map)};
  auto check = verify_cover(proj);
  if (!check.ok) throw error("internal error: double-edge split does not cover");
  return FactoryResult{out, std::move(proj)};
}

}  // namespace

FactoryResult snark_cover(const Multigraph& g) {
  if (!is_connected(g)) throw error("snark_cover: input must be connected");
  if (!is_cubic(g)) throw error("snark_cover: input must be cubic");
  auto chi = chromatic_index(g);
  if (chi.is(3)) throw error("snark_cover: input is 3-edge-colorable, no such cover exists");

  Multigraph current = g;
  CoverProjection onto_g = identity_projection(g);

  if (has_semi_edges(current)) {
    DoubleCover dc = parallel_double_cover(current);
    onto_g = dc.projection;
    current = dc.graph;
  }

  while (!is_simple(current)) {
    if (!bridges(current).empty()) {
      FactoryResult b = bridged_simple_cover(current);
      onto_g = compose(b.projection, onto_g);
      current = b.graph;
      break;
    }
    if (has_loops(current))
      throw error("anomaly: connected cubic graph with a loop but no bridge");
    FactoryResult s = split_double_edge(current);
    onto_g = compose(s.projection, onto_g);
    current = s.graph;
  }

  auto final_chi = chromatic_index(current);
  if (final_chi.is(3)) throw error("internal error: snark cover became 3-edge-colorable");
  return finish(current, std::move(onto_g));
}

FactoryResult no_pm_cover(const Multigraph& g) {
  if (!is_connected(g)) throw error("no_pm_cover: input must be connected");
  if (!is_cubic(g)) throw error("no_pm_cover: input must be cubic");
  if (has_semi_edges(g)) throw error("no_pm_cover: input must have no semi-edges");
  if (has_perfect_matching(g)) throw error("no_pm_cover: input has a perfect matching");
  if (is_simple(g)) return finish(g, identity_projection(g));

  auto good = minimal_good_sets(g);
  if (good.empty()) throw error("internal error: no good set in a matching-free cubic graph");
  const GoodSet* x = &good.front();
  for (const GoodSet& cand : good)
    if (cand.vertices < x->vertices) x = &cand;
  if (!x->very_good)
    throw error("anomaly: minimal good set is not very good");

  std::vector<char> in_x(g.vertex_count(), 0);
  for (VertexId v : x->vertices) in_x[v] = 1;
  auto labels = components_without(g, in_x);
  const int k = labels.second;
  const int stride = 3 * k + 1;

  Multigraph out(g.vertex_count() * stride);
  std::vector<EdgeId> edge_map;

  for (int j = 1; j <= k; ++j) {
    std::vector<char> comp(g.vertex_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!in_x[v] && labels.first[v] == j - 1) comp[v] = 1;
    for (int i = 1; i <= k; ++i) {
      std::vector<int> levels;
      if (i == j) levels = {0, 3 * j - 2, 3 * j - 1, 3 * j};
      else levels = {3 * i - 2, 3 * i - 1, 3 * i};
      emit_pfold(g, comp, levels, stride, out, edge_map);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.kind != EdgeKind::Normal) continue;
    if (!in_x[ed.u] && !in_x[ed.v]) continue;
    for (int i = 0; i < stride; ++i) {
      out.add_normal(ed.u * stride + i, ed.v * stride + i);
      edge_map.push_back(e);
    }
  }

  std::vector<VertexId> vertex_map(out.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (int i = 0; i < stride; ++i) vertex_map[v * stride + i] = v;
  auto res = finish(out, CoverProjection{out, g, std::move(vertex_map), std::move(edge_map)});

  // The copied good set certifies the absence of a perfect matching; the
  // matching algorithm re-checks independently.
  std::vector<VertexId> x0;
  for (VertexId v : x->vertices) x0.push_back(v * stride + 0);
  if (odd_components_without(res.graph, x0) <= static_cast<int>(x0.size()))
    throw error("internal error: copied good set is not good in the cover");
  if (has_perfect_matching(res.graph))
    throw error("internal error: no_pm_cover output has a perfect matching");
  return res;
}

FactoryResult witness_not_f11(const Multigraph& g) {
  if (!is_cubic(g)) throw error("witness_not_f11: input must be cubic");
  if (has_semi_perfect_matching(g))
    throw error("witness_not_f11: input has a semi-perfect matching");
  if (!has_semi_edges(g)) return no_pm_cover(g);
  DoubleCover dc = parallel_double_cover(g);
  if (has_perfect_matching(dc.graph))
    throw error("internal error: double cover of a matching-free graph has a matching");
  FactoryResult inner = no_pm_cover(dc.graph);
  return finish(inner.graph, compose(inner.projection, dc.projection));
}

}  // namespace covers
