#include "covers/projection.hpp"

#include <algorithm>
#include <sstream>

namespace covers {

namespace {

std::string fiber_name(VertexId target_vertex) {
  return "fiber(" + std::to_string(target_vertex) + ")";
}

std::string edge_str(const Multigraph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  std::ostringstream out;
  switch (e.kind) {
    case EdgeKind::Normal: out << "normal " << id << " (" << e.u << "," << e.v << ")"; break;
    case EdgeKind::Loop: out << "loop " << id << " at " << e.v; break;
    case EdgeKind::Semi: out << "semi " << id << " at " << e.v; break;
  }
  return out.str();
}

}  // namespace

VerifyResult verify_projection(const CoverProjection& p, ProjectionKind kind) {
  const Multigraph& G = p.source;
  const Multigraph& H = p.target;
  if (static_cast<int>(p.vertex_map.size()) != G.vertex_count() ||
      static_cast<int>(p.edge_map.size()) != G.edge_count())
    throw error("malformed projection: maps not total");
  for (VertexId t : p.vertex_map)
    if (t < 0 || t >= H.vertex_count()) throw error("malformed projection: vertex image out of range");
  for (EdgeId t : p.edge_map)
    if (t < 0 || t >= H.edge_count()) throw error("malformed projection: edge image out of range");

  VerifyResult res;
  auto violate = [&](const std::string& rule, const std::string& detail) {
    res.violations.push_back({rule, detail});
  };

  // Degree preservation.
  auto dg = degrees(G);
  auto dh = degrees(H);
  for (VertexId v = 0; v < G.vertex_count(); ++v)
    if (dg[v] != dh[p.vertex_map[v]])
      violate("degree", "vertex " + std::to_string(v) + " has degree " + std::to_string(dg[v]) +
                            " but its image " + std::to_string(p.vertex_map[v]) + " has degree " +
                            std::to_string(dh[p.vertex_map[v]]));

  // Vertex surjectivity.
  std::vector<int> fiber_size(H.vertex_count(), 0);
  for (VertexId v = 0; v < G.vertex_count(); ++v) ++fiber_size[p.vertex_map[v]];
  for (VertexId t = 0; t < H.vertex_count(); ++t)
    if (fiber_size[t] == 0) violate("surjectivity", fiber_name(t) + " is empty");

  // Kind and incidence rules per source edge.
  for (EdgeId i = 0; i < G.edge_count(); ++i) {
    const Edge& e = G.edge(i);
    const Edge& img = H.edge(p.edge_map[i]);
    VertexId fu = p.vertex_map[e.u];
    VertexId fv = p.vertex_map[e.v];
    switch (e.kind) {
      case EdgeKind::Normal:
        if (img.kind == EdgeKind::Normal) {
          if (std::minmax(fu, fv) != std::minmax(img.u, img.v))
            violate("incidence", edge_str(G, i) + " maps to " + edge_str(H, p.edge_map[i]) +
                                     " with mismatched endpoints");
        } else {
          if (fu != fv || fu != img.v)
            violate("incidence", edge_str(G, i) + " maps to " + edge_str(H, p.edge_map[i]) +
                                     " but its endpoints do not both map there");
        }
        break;
      case EdgeKind::Loop:
        if (img.kind != EdgeKind::Loop)
          violate("kind", edge_str(G, i) + " must map to a loop");
        else if (fv != img.v)
          violate("incidence", edge_str(G, i) + " maps to a loop at a different vertex");
        break;
      case EdgeKind::Semi:
        if (img.kind == EdgeKind::Semi) {
          if (fv != img.v) violate("incidence", edge_str(G, i) + " maps to a semi-edge at a different vertex");
        } else if (img.kind == EdgeKind::Loop && kind == ProjectionKind::SemiCover) {
          if (fv != img.v) violate("incidence", edge_str(G, i) + " maps to a loop at a different vertex");
        } else {
          violate("kind", edge_str(G, i) +
                              (kind == ProjectionKind::Cover
                                   ? " must map to a semi-edge"
                                   : " must map to a semi-edge or a loop"));
        }
        break;
    }
  }
  if (!res.violations.empty()) {
    res.ok = false;
    return res;
  }

  // Fiber structure per target edge. With kinds and incidence already
  // checked, the structural rules reduce to exact per-vertex preimage
  // degrees: 1 over a normal or semi-edge image, 2 over a loop image.
  std::vector<std::vector<EdgeId>> preimage(H.edge_count());
  for (EdgeId i = 0; i < G.edge_count(); ++i) preimage[p.edge_map[i]].push_back(i);

  for (EdgeId t = 0; t < H.edge_count(); ++t) {
    const Edge& te = H.edge(t);
    if (preimage[t].empty()) {
      violate("surjectivity", "no edge maps onto " + edge_str(H, t));
      continue;
    }
    std::vector<int> load(G.vertex_count(), 0);
    for (EdgeId i : preimage[t]) {
      const Edge& e = G.edge(i);
      switch (e.kind) {
        case EdgeKind::Normal: ++load[e.u]; ++load[e.v]; break;
        case EdgeKind::Loop: load[e.v] += 2; break;
        case EdgeKind::Semi: ++load[e.v]; break;
      }
    }
    const int want = te.kind == EdgeKind::Loop ? 2 : 1;
    auto in_fiber = [&](VertexId v) {
      VertexId img = p.vertex_map[v];
      return img == te.u || img == te.v;
    };
    for (VertexId v = 0; v < G.vertex_count(); ++v) {
      int expected = in_fiber(v) ? want : 0;
      if (load[v] != expected) {
        std::string rule = te.kind == EdgeKind::Normal ? "matching-fiber"
                           : te.kind == EdgeKind::Loop ? "cycle-fiber"
                                                       : "semi-fiber";
        violate(rule, "over " + edge_str(H, t) + ": vertex " + std::to_string(v) + " in " +
                          fiber_name(p.vertex_map[v]) + " is met " + std::to_string(load[v]) +
                          " times, expected " + std::to_string(expected));
      }
    }
  }

  res.ok = res.violations.empty();
  return res;
}

VerifyResult verify_cover(const CoverProjection& p) {
  return verify_projection(p, ProjectionKind::Cover);
}

VerifyResult verify_semicover(const CoverProjection& p) {
  return verify_projection(p, ProjectionKind::SemiCover);
}

CoverProjection identity_projection(const Multigraph& g) {
  CoverProjection p{g, g, {}, {}};
  p.vertex_map.resize(g.vertex_count());
  p.edge_map.resize(g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) p.vertex_map[v] = v;
  for (EdgeId e = 0; e < g.edge_count(); ++e) p.edge_map[e] = e;
  return p;
}

CoverProjection compose(const CoverProjection& p, const CoverProjection& q) {
  if (!(p.target == q.source)) throw error("compose: middle graphs differ");
  CoverProjection r{p.source, q.target, {}, {}};
  r.vertex_map.resize(p.vertex_map.size());
  r.edge_map.resize(p.edge_map.size());
  for (size_t v = 0; v < p.vertex_map.size(); ++v) r.vertex_map[v] = q.vertex_map[p.vertex_map[v]];
  for (size_t e = 0; e < p.edge_map.size(); ++e) r.edge_map[e] = q.edge_map[p.edge_map[e]];
  return r;
}

int fold_count(const CoverProjection& p, ProjectionKind kind) {
  auto res = verify_projection(p, kind);
  if (!res.ok) throw error("fold_count: projection does not verify");
  if (!is_connected(p.target)) throw error("fold_count: target not connected");
  std::vector<int> fiber_size(p.target.vertex_count(), 0);
  for (VertexId t : p.vertex_map) ++fiber_size[t];
  int k = p.source.vertex_count() / p.target.vertex_count();
  for (int s : fiber_size)
    if (s != k) throw error("fold_count: non-uniform fibers");
  return k;
}

std::string projection_to_text(const CoverProjection& p) {
  std::ostringstream out;
  for (size_t v = 0; v < p.vertex_map.size(); ++v) out << "v " << v << " " << p.vertex_map[v] << "\n";
  for (size_t e = 0; e < p.edge_map.size(); ++e) out << "e " << e << " " << p.edge_map[e] << "\n";
  return out.str();
}

CoverProjection projection_from_text(const Multigraph& source, const Multigraph& target,
                                     const std::string& text) {
  CoverProjection p{source, target,
                    std::vector<VertexId>(source.vertex_count(), -1),
                    std::vector<EdgeId>(source.edge_count(), -1)};
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ss(line);
    std::string tag;
    long long src, dst;
    if (!(ss >> tag >> src >> dst) || (tag != "v" && tag != "e"))
      throw error("certificate parse error at line " + std::to_string(lineno));
    if (tag == "v") {
      if (src < 0 || src >= source.vertex_count()) throw error("certificate: source vertex out of range");
      p.vertex_map[static_cast<size_t>(src)] = static_cast<VertexId>(dst);
    } else {
      if (src < 0 || src >= source.edge_count()) throw error("certificate: source edge out of range");
      p.edge_map[static_cast<size_t>(src)] = static_cast<EdgeId>(dst);
    }
  }
  for (VertexId t : p.vertex_map)
    if (t < 0) throw error("certificate: vertex map not total");
  for (EdgeId t : p.edge_map)
    if (t < 0) throw error("certificate: edge map not total");
  return p;
}

}  // namespace covers
