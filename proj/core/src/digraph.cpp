#include "dspec/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "dspec/error.hpp"

namespace dspec {

std::optional<VertexIndex> Digraph::find_vertex(std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Digraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Digraph::vertex_index(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw UnknownIdentifier("unknown vertex '" + std::string(name) + "'");
}

EdgeIndex Digraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw UnknownIdentifier("unknown edge '" + std::string(id) + "'");
}

DigraphBuilder::DigraphBuilder(const Digraph& start) : g_(start) {}

VertexIndex DigraphBuilder::add_vertex(std::string name) {
  if (name.empty()) throw InvalidArgument("empty vertex id");
  if (g_.vertex_lookup_.count(name)) throw IdentifierClash("duplicate vertex id '" + name + "'");
  VertexIndex v = g_.vertices_.size();
  g_.vertex_lookup_.emplace(name, v);
  g_.vertices_.push_back(std::move(name));
  g_.out_.emplace_back();
  g_.in_.emplace_back();
  return v;
}

EdgeIndex DigraphBuilder::add_edge(std::string id, std::string_view source, std::string_view range) {
  VertexIndex s = g_.vertex_index(source);
  VertexIndex r = g_.vertex_index(range);
  return add_edge(std::move(id), s, r);
}

EdgeIndex DigraphBuilder::add_edge(std::string id, VertexIndex source, VertexIndex range) {
  if (id.empty()) throw InvalidArgument("empty edge id");
  if (source >= g_.vertices_.size() || range >= g_.vertices_.size())
    throw UnknownIdentifier("edge '" + id + "' has an endpoint outside the vertex list");
  if (g_.edge_lookup_.count(id)) throw IdentifierClash("duplicate edge id '" + id + "'");
  EdgeIndex e = g_.edges_.size();
  g_.edge_lookup_.emplace(id, e);
  g_.edges_.push_back(Edge{std::move(id), source, range});
  g_.out_[source].push_back(e);
  g_.in_[range].push_back(e);
  return e;
}

Digraph DigraphBuilder::build() && { return std::move(g_); }
Digraph DigraphBuilder::build() const& { return g_; }

Degrees degrees(const Digraph& d, VertexIndex v) {
  Degrees q;
  q.in = d.in_edges(v).size();
  q.out = d.out_edges(v).size();
  std::set<VertexIndex> from, to;
  for (EdgeIndex e : d.in_edges(v)) from.insert(d.edge(e).source);
  for (EdgeIndex e : d.out_edges(v)) to.insert(d.edge(e).range);
  q.binary_in = from.size();
  q.binary_out = to.size();
  return q;
}

Degrees degrees(const Digraph& d, std::string_view v) { return degrees(d, d.vertex_index(v)); }

VertexClassification classify_vertex(const Digraph& d, VertexIndex v) {
  VertexClassification c;
  c.is_source = d.in_edges(v).empty();
  c.is_sink = d.out_edges(v).empty();
  c.is_regular = !c.is_sink;
  return c;
}

VertexClassification classify_vertex(const Digraph& d, std::string_view v) {
  return classify_vertex(d, d.vertex_index(v));
}

Digraph line_digraph(const Digraph& d) {
  DigraphBuilder b;
  for (const Edge& e : d.edges()) b.add_vertex(e.id);
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    // out_edges is already in edge order, so this is lexicographic in (e, f).
    for (EdgeIndex f : d.out_edges(d.edge(e).range)) {
      b.add_edge(d.edge(e).id + "|" + d.edge(f).id, e, f);
    }
  }
  return std::move(b).build();
}

Digraph unparalleled(const Digraph& d) {
  DigraphBuilder b;
  for (const auto& v : d.vertices()) b.add_vertex(v);
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (const Edge& e : d.edges()) {
    if (seen.insert({e.source, e.range}).second) b.add_edge(e.id, e.source, e.range);
  }
  return std::move(b).build();
}

std::vector<std::size_t> strongly_connected_components(const Digraph& d, std::size_t* count) {
  // Iterative Tarjan.
  const std::size_t n = d.vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unset), low(n, 0), comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexIndex> stack;
  std::size_t next_index = 0, next_comp = 0;

  struct Frame {
    VertexIndex v;
    std::size_t pos;
  };
  std::vector<Frame> call;

  for (VertexIndex root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& fr = call.back();
      const auto& outs = d.out_edges(fr.v);
      if (fr.pos < outs.size()) {
        VertexIndex w = d.edge(outs[fr.pos++]).range;
        if (index[w] == unset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[fr.v] = std::min(low[fr.v], index[w]);
        }
        continue;
      }
      VertexIndex v = fr.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != v);
        ++next_comp;
      }
    }
  }
  if (count) *count = next_comp;
  return comp;
}

bool is_strongly_connected(const Digraph& d) {
  std::size_t count = 0;
  strongly_connected_components(d, &count);
  return count == 1;
}

std::size_t return_path_count_capped(const Digraph& d, std::string_view name, std::size_t cap) {
  if (cap == 0) throw InvalidArgument("return path cap must be positive");
  const VertexIndex v = d.vertex_index(name);
  const std::size_t n = d.vertex_count();
  const std::size_t max_len = 2 * n;

  // Vertices (other than v) that reach v through vertices other than v.
  std::vector<bool> reaches(n, false);
  std::vector<VertexIndex> queue;
  for (EdgeIndex e : d.in_edges(v)) {
    VertexIndex s = d.edge(e).source;
    if (s != v && !reaches[s]) {
      reaches[s] = true;
      queue.push_back(s);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (EdgeIndex e : d.in_edges(queue[i])) {
      VertexIndex s = d.edge(e).source;
      if (s != v && !reaches[s]) {
        reaches[s] = true;
        queue.push_back(s);
      }
    }
  }

  std::size_t found = 0;
  struct Frame {
    VertexIndex at;
    std::size_t len;  // edges used to reach `at`
    std::size_t pos;
  };
  std::vector<Frame> stack{{v, 0, 0}};
  while (!stack.empty() && found < cap) {
    Frame& fr = stack.back();
    const auto& outs = d.out_edges(fr.at);
    if (fr.pos == outs.size()) {
      stack.pop_back();
      continue;
    }
    VertexIndex w = d.edge(outs[fr.pos++]).range;
    std::size_t len = fr.len + 1;
    if (w == v) {
      ++found;
    } else if (reaches[w] && len < max_len) {
      stack.push_back({w, len, 0});
    }
  }
  return std::min(found, cap);
}

bool loop_has_exit(const Digraph& d, std::string_view name) {
  const VertexIndex v = d.vertex_index(name);
  const auto& outs = d.out_edges(v);
  bool has_loop = std::any_of(outs.begin(), outs.end(), [&](EdgeIndex e) { return d.edge(e).is_loop(); });
  if (!has_loop) throw InvalidArgument("vertex '" + std::string(name) + "' has no loop");
  return outs.size() >= 2;
}

}  // namespace dspec
