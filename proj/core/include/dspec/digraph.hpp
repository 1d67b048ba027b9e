#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dspec {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  std::string id;
  VertexIndex source;
  VertexIndex range;

  bool is_loop() const { return source == range; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite directed multigraph with loops. Vertices and edges carry string ids and
// keep insertion order, which fixes the row/column order of every matrix.
// Instances are immutable; use DigraphBuilder to make one.
class Digraph {
 public:
  Digraph() = default;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  // Throw UnknownIdentifier when absent.
  VertexIndex vertex_index(std::string_view name) const;
  EdgeIndex edge_index(std::string_view id) const;

  bool has_vertex(std::string_view name) const { return find_vertex(name).has_value(); }
  bool has_edge(std::string_view id) const { return find_edge(id).has_value(); }
  // True if the name is used by a vertex or an edge.
  bool has_identifier(std::string_view name) const { return has_vertex(name) || has_edge(name); }

  // Edge indices in edge order.
  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const { return out_.at(v); }
  const std::vector<EdgeIndex>& in_edges(VertexIndex v) const { return in_.at(v); }

  // Exact structural equality: same vertex list, same edge list (ids, endpoints, order).
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend class DigraphBuilder;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
};

class DigraphBuilder {
 public:
  DigraphBuilder() = default;
  explicit DigraphBuilder(const Digraph& start);

  // Throws IdentifierClash if the name is already a vertex id. Vertex and edge ids live in
  // separate namespaces.
  VertexIndex add_vertex(std::string name);
  // Throws UnknownIdentifier for unknown endpoints, IdentifierClash for a reused edge id.
  EdgeIndex add_edge(std::string id, std::string_view source, std::string_view range);
  EdgeIndex add_edge(std::string id, VertexIndex source, VertexIndex range);

  bool has_identifier(std::string_view name) const { return g_.has_identifier(name); }
  const Digraph& peek() const { return g_; }

  Digraph build() &&;
  Digraph build() const&;

 private:
  Digraph g_;
};

struct Degrees {
  std::size_t in = 0;   // edges with r(e) = v
  std::size_t out = 0;  // edges with s(e) = v
  std::size_t binary_in = 0;   // distinct in-neighbours
  std::size_t binary_out = 0;  // distinct out-neighbours

  friend bool operator==(const Degrees&, const Degrees&) = default;
};

struct VertexClassification {
  bool is_source = false;   // no edge ends here
  bool is_sink = false;     // no edge starts here
  bool is_regular = false;  // some edge starts here

  friend bool operator==(const VertexClassification&, const VertexClassification&) = default;
};

Degrees degrees(const Digraph& d, VertexIndex v);
Degrees degrees(const Digraph& d, std::string_view v);
VertexClassification classify_vertex(const Digraph& d, VertexIndex v);
VertexClassification classify_vertex(const Digraph& d, std::string_view v);

// Line digraph: one vertex per edge (same id), one edge e|f for each pair with r(e) = s(f),
// ordered lexicographically by the positions of (e, f).
Digraph line_digraph(const Digraph& d);

// Keeps the first edge (in edge order) of each (source, range) class.
Digraph unparalleled(const Digraph& d);

// Tarjan components; component ids are dense and start at 0.
std::vector<std::size_t> strongly_connected_components(const Digraph& d, std::size_t* count = nullptr);
// Exactly one component containing every vertex. A lone vertex counts (empty path); the
// empty digraph has no component and does not.
bool is_strongly_connected(const Digraph& d);

// Number of closed paths v = x0 -> x1 -> ... -> xk = v, k >= 1, with xi != v for 0 < i < k and
// k <= 2|V|, counted as distinct edge sequences and truncated at cap (cap >= 1).
std::size_t return_path_count_capped(const Digraph& d, std::string_view v, std::size_t cap);

// Requires at least one loop at v; true when v also has some other out-edge.
bool loop_has_exit(const Digraph& d, std::string_view v);

// Text format helpers (text_format.cpp).
Digraph parse_digraph(std::string_view text);
std::string to_text(const Digraph& d);
std::string to_dot(const Digraph& d);
Digraph read_digraph_file(const std::string& path);

}  // namespace dspec
