// Multigraph with loops and semi-edges: the base data model.
// A normal edge joins two distinct vertices (degree 1 each), a loop adds 2
// to its vertex, a semi-edge has one endpoint and a free end (degree 1).
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covers {

using VertexId = int;
using EdgeId = int;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

enum class EdgeKind : std::uint8_t { Normal, Loop, Semi };

struct Edge {
  EdgeKind kind;
  VertexId u;  // for Loop/Semi, u == v
  VertexId v;

  bool operator==(const Edge&) const = default;
};

// Vertices are dense 0..n-1, edge ids dense 0..m-1 in insertion order.
// Instances are treated as immutable once built; all operations below are
// pure functions.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw error("vertex count must be nonnegative");
  }

  EdgeId add_normal(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw error("normal edge endpoints must differ (declare a loop instead)");
    edges_.push_back({EdgeKind::Normal, u, v});
    return static_cast<EdgeId>(edges_.size()) - 1;
  }
  EdgeId add_loop(VertexId v) {
    check_vertex(v);
    edges_.push_back({EdgeKind::Loop, v, v});
    return static_cast<EdgeId>(edges_.size()) - 1;
  }
  EdgeId add_semi(VertexId v) {
    check_vertex(v);
    edges_.push_back({EdgeKind::Semi, v, v});
    return static_cast<EdgeId>(edges_.size()) - 1;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Multigraph&) const = default;

 private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw error("vertex id out of range");
  }

  int n_ = 0;
  std::vector<Edge> edges_;
};

// Normal edges count 1 per endpoint, loops 2, semi-edges 1.
int degree(const Multigraph& g, VertexId v);
std::vector<int> degrees(const Multigraph& g);
bool is_regular(const Multigraph& g, int d);
bool is_cubic(const Multigraph& g);

int loop_count_at(const Multigraph& g, VertexId v);
int semi_count_at(const Multigraph& g, VertexId v);
bool has_loops(const Multigraph& g);
bool has_semi_edges(const Multigraph& g);

// Maximum number of parallel normal edges over any vertex pair.
int max_edge_multiplicity(const Multigraph& g);

// No loops, no semi-edges, no repeated unordered endpoint pair.
bool is_simple(const Multigraph& g);

// A 2-coloring of the vertices, or nullopt. Graphs with a loop or a
// semi-edge are never bipartite; parallel edges form even (2-)cycles and do
// not obstruct.
std::optional<std::vector<int>> bipartition(const Multigraph& g);
bool is_bipartite(const Multigraph& g);

// Component labels (dense, in order of first appearance by vertex id).
// Only normal edges connect distinct vertices.
std::vector<int> component_labels(const Multigraph& g);
int component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Normal edges whose removal increases the component count. Parallel edges
// are never bridges.
std::vector<EdgeId> bridges(const Multigraph& g);

// Disjoint union; vertices of b are shifted by a.vertex_count(), edges of b
// follow edges of a.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

}  // namespace covers
