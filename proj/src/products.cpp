#include "covers/products.hpp"

namespace covers {

namespace {

DoubleCover build(const Multigraph& g, bool crossing) {
  Multigraph out(2 * g.vertex_count());
  std::vector<EdgeId> edge_map;
  auto v0 = [](VertexId v) { return 2 * v; };
  auto v1 = [](VertexId v) { return 2 * v + 1; };
  for (EdgeId i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    switch (e.kind) {
      case EdgeKind::Normal:
        if (crossing) {
          out.add_normal(v0(e.u), v1(e.v));
          out.add_normal(v1(e.u), v0(e.v));
        } else {
          out.add_normal(v0(e.u), v0(e.v));
          out.add_normal(v1(e.u), v1(e.v));
        }
        edge_map.push_back(i);
        edge_map.push_back(i);
        break;
      case EdgeKind::Loop:
        if (crossing) {
          out.add_normal(v0(e.v), v1(e.v));
          out.add_normal(v0(e.v), v1(e.v));
        } else {
          out.add_loop(v0(e.v));
          out.add_loop(v1(e.v));
        }
        edge_map.push_back(i);
        edge_map.push_back(i);
        break;
      case EdgeKind::Semi:
        out.add_normal(v0(e.v), v1(e.v));
        edge_map.push_back(i);
        break;
    }
  }
  std::vector<VertexId> vertex_map(2 * g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    vertex_map[v0(v)] = v;
    vertex_map[v1(v)] = v;
  }
  return DoubleCover{out, CoverProjection{out, g, std::move(vertex_map), std::move(edge_map)}};
}

}  // namespace

DoubleCover bipartite_double_cover(const Multigraph& g) { return build(g, true); }

DoubleCover parallel_double_cover(const Multigraph& g) { return build(g, false); }

std::vector<EdgeId> lifted_edges(const DoubleCover& dc, EdgeId source_edge) {
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < static_cast<EdgeId>(dc.projection.edge_map.size()); ++i)
    if (dc.projection.edge_map[i] == source_edge) out.push_back(i);
  return out;
}

}  // namespace covers
