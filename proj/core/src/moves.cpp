#include "dspec/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dspec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Deterministic fresh names: the base name, then base', base'', ...
class NameSet {
 public:
  NameSet() = default;
  template <class It>
  NameSet(It first, It last) : used_(first, last) {}

  void erase(const std::string& s) { used_.erase(s); }
  bool contains(const std::string& s) const { return used_.count(s) != 0; }
  std::string fresh(std::string base) {
    while (used_.count(base)) base += '\'';
    used_.insert(base);
    return base;
  }

 private:
  std::set<std::string> used_;
};

NameSet edge_names(const Digraph& d) {
  NameSet s;
  for (const Edge& e : d.edges()) s.fresh(e.id);
  return s;
}

NameSet vertex_names(const Digraph& d) { return NameSet(d.vertices().begin(), d.vertices().end()); }

PreconditionViolation violation(MoveKind k, Clause c, std::string detail) { return {k, c, std::move(detail)}; }

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

// Each listed edge must exist; blocks nonempty and disjoint; union equals `required`.
std::optional<PreconditionViolation> check_partition(const Digraph& d, MoveKind kind,
                                                     const std::vector<std::vector<std::string>>& partition,
                                                     const std::vector<EdgeIndex>& required) {
  if (partition.empty()) return violation(kind, Clause::InvalidPartition, "partition has no blocks");
  std::set<EdgeIndex> need(required.begin(), required.end());
  std::set<EdgeIndex> seen;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b].empty())
      return violation(kind, Clause::InvalidPartition, "block " + std::to_string(b + 1) + " is empty");
    for (const auto& id : partition[b]) {
      EdgeIndex e = d.edge_index(id);
      if (!need.count(e))
        return violation(kind, Clause::InvalidPartition, "edge " + quote(id) + " is not in the edge set being split");
      if (!seen.insert(e).second)
        return violation(kind, Clause::InvalidPartition, "edge " + quote(id) + " appears twice");
    }
  }
  if (seen.size() != need.size()) {
    for (EdgeIndex e : required)
      if (!seen.count(e))
        return violation(kind, Clause::InvalidPartition, "edge " + quote(d.edge(e).id) + " is not covered");
  }
  return std::nullopt;
}

std::optional<PreconditionViolation> check_c(const Digraph& d, std::string_view v, bool force, MoveKind kind) {
  VertexIndex vi = d.vertex_index(v);
  if (!classify_vertex(d, vi).is_regular)
    return violation(kind, Clause::NotRegular, "vertex " + quote(v) + " emits no edge");
  if (!force && return_path_count_capped(d, v, 2) < 2)
    return violation(kind, Clause::TooFewReturnPaths, "vertex " + quote(v) + " supports fewer than two return paths");
  return std::nullopt;
}

// Out-neighbours other than v, in vertex order.
std::vector<VertexIndex> p_targets(const Digraph& d, VertexIndex v) {
  std::set<VertexIndex> s;
  for (EdgeIndex e : d.out_edges(v))
    if (d.edge(e).range != v) s.insert(d.edge(e).range);
  return {s.begin(), s.end()};
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::S& m) {
  VertexIndex v = d.vertex_index(m.vertex);
  auto c = classify_vertex(d, v);
  if (!c.is_source) return violation(MoveKind::S, Clause::NotSource, "vertex " + quote(m.vertex) + " is not a source");
  if (!c.is_regular) return violation(MoveKind::S, Clause::NotRegular, "vertex " + quote(m.vertex) + " emits no edge");
  return std::nullopt;
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::SInverse& m) {
  for (const auto& t : m.targets) d.vertex_index(t);
  if (d.has_vertex(m.new_vertex))
    return violation(MoveKind::SInverse, Clause::IdentifierInUse, "vertex " + quote(m.new_vertex) + " already exists");
  if (m.targets.empty()) return violation(MoveKind::SInverse, Clause::EmptyTargets, "no targets for the new source");
  return std::nullopt;
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::R& m) {
  VertexIndex v = d.vertex_index(m.vertex);
  const auto& outs = d.out_edges(v);
  if (outs.empty()) return violation(MoveKind::R, Clause::NotRegular, "vertex " + quote(m.vertex) + " emits no edge");
  if (outs.size() != 1)
    return violation(MoveKind::R, Clause::OutEdgeNotUnique, "vertex " + quote(m.vertex) + " emits more than one edge");
  std::set<VertexIndex> sources;
  for (EdgeIndex e : d.in_edges(v)) sources.insert(d.edge(e).source);
  if (sources.size() != 1)
    return violation(MoveKind::R, Clause::InSourceNotUnique,
                     "edges into " + quote(m.vertex) + " do not come from exactly one vertex");
  if (*sources.begin() == v)
    return violation(MoveKind::R, Clause::InSourceIsVertex, "the only edges into " + quote(m.vertex) + " are loops");
  return std::nullopt;
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::RInverse& m) {
  std::vector<EdgeIndex> es;
  for (const auto& id : m.edges) es.push_back(d.edge_index(id));
  if (d.has_vertex(m.new_vertex))
    return violation(MoveKind::RInverse, Clause::IdentifierInUse, "vertex " + quote(m.new_vertex) + " already exists");
  if (es.empty()) return violation(MoveKind::RInverse, Clause::EmptyEdgeSet, "no edges to subdivide");
  std::set<EdgeIndex> uniq(es.begin(), es.end());
  if (uniq.size() != es.size()) return violation(MoveKind::RInverse, Clause::RepeatedEdge, "an edge is listed twice");
  for (EdgeIndex e : es) {
    if (d.edge(e).source != d.edge(es[0]).source || d.edge(e).range != d.edge(es[0]).range)
      return violation(MoveKind::RInverse, Clause::EdgesNotParallel,
                       "edges " + quote(d.edge(es[0]).id) + " and " + quote(d.edge(e).id) + " are not parallel");
  }
  return std::nullopt;
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::O& m) {
  VertexIndex v = d.vertex_index(m.vertex);
  if (d.out_edges(v).empty()) return violation(MoveKind::O, Clause::IsSink, "vertex " + quote(m.vertex) + " is a sink");
  return check_partition(d, MoveKind::O, m.partition, d.out_edges(v));
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::I& m) {
  VertexIndex v = d.vertex_index(m.vertex);
  if (d.in_edges(v).empty()) return violation(MoveKind::I, Clause::IsSource, "vertex " + quote(m.vertex) + " is a source");
  return check_partition(d, MoveKind::I, m.partition, d.in_edges(v));
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::C& m) {
  return check_c(d, m.vertex, m.force, MoveKind::C);
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::CSet& m) {
  std::set<std::string> seen;
  for (const auto& v : m.vertices) {
    d.vertex_index(v);
    if (!seen.insert(v).second)
      return violation(MoveKind::CSet, Clause::RepeatedVertex, "vertex " + quote(v) + " is listed twice");
  }
  for (const auto& v : m.vertices)
    if (auto bad = check_c(d, v, m.force, MoveKind::CSet)) return bad;
  return std::nullopt;
}

std::optional<PreconditionViolation> check(const Digraph& d, const move::P& m) {
  VertexIndex v = d.vertex_index(m.vertex);
  bool has_loop = false;
  for (EdgeIndex e : d.out_edges(v)) has_loop = has_loop || d.edge(e).is_loop();
  if (!has_loop) return violation(MoveKind::P, Clause::NoLoop, "vertex " + quote(m.vertex) + " has no loop");
  if (return_path_count_capped(d, m.vertex, 2) != 1)
    return violation(MoveKind::P, Clause::OtherReturnPath,
                     "vertex " + quote(m.vertex) + " supports a return path other than its loop");
  if (!loop_has_exit(d, m.vertex))
    return violation(MoveKind::P, Clause::LoopWithoutExit, "the loop at " + quote(m.vertex) + " has no exit");
  for (VertexIndex w : p_targets(d, v)) {
    if (check_c(d, d.vertex_name(w), false, MoveKind::P))
      return violation(MoveKind::P, Clause::NeighbourNotEligible,
                       "out-neighbour " + quote(d.vertex_name(w)) +
                           " is not regular with at least two return paths");
  }
  return std::nullopt;
}

void require(const Digraph& d, const MoveApplication& m) {
  if (auto bad = check_precondition(d, m)) throw PreconditionError(*bad);
}

// Appends the splice at v to b. Returns the name given to u2.
std::string splice(DigraphBuilder& b, NameSet& vnames, NameSet& enames, const std::string& v) {
  std::string u1 = vnames.fresh("u1@" + v);
  std::string u2 = vnames.fresh("u2@" + v);
  b.add_vertex(u1);
  b.add_vertex(u2);
  b.add_edge(enames.fresh("e1@" + v), v, u1);
  b.add_edge(enames.fresh("e2@" + v), u1, v);
  b.add_edge(enames.fresh("f1@" + v), u1, u1);
  b.add_edge(enames.fresh("f2@" + v), u1, u2);
  b.add_edge(enames.fresh("h1@" + v), u2, u1);
  b.add_edge(enames.fresh("h2@" + v), u2, u2);
  return u2;
}

Digraph do_s(const Digraph& d, VertexIndex v) {
  DigraphBuilder b;
  for (VertexIndex x = 0; x < d.vertex_count(); ++x)
    if (x != v) b.add_vertex(d.vertex_name(x));
  for (const Edge& e : d.edges())
    if (e.source != v) b.add_edge(e.id, d.vertex_name(e.source), d.vertex_name(e.range));
  return std::move(b).build();
}

// Shared implementation of the out-split (outsplit = true) and in-split.
Digraph do_split(const Digraph& d, VertexIndex v, const std::vector<std::vector<std::string>>& partition,
                 bool outsplit) {
  const std::size_t n = partition.size();
  std::map<EdgeIndex, std::size_t> block;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& id : partition[i]) block[d.edge_index(id)] = i;

  NameSet vnames = vertex_names(d);
  vnames.erase(d.vertex_name(v));
  NameSet enames = edge_names(d);
  const std::string& vname = d.vertex_name(v);

  DigraphBuilder b;
  std::vector<std::string> copies(n);
  for (VertexIndex x = 0; x < d.vertex_count(); ++x) {
    if (x != v) {
      b.add_vertex(d.vertex_name(x));
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      copies[i] = vnames.fresh(vname + "^" + std::to_string(i + 1));
      b.add_vertex(copies[i]);
    }
  }
  auto name = [&](VertexIndex x) -> const std::string& { return d.vertex_name(x); };

  for (EdgeIndex ei = 0; ei < d.edge_count(); ++ei) {
    const Edge& e = d.edge(ei);
    // For the out-split the copied end is the range; for the in-split it is the source.
    VertexIndex copied_end = outsplit ? e.range : e.source;
    VertexIndex split_end = outsplit ? e.source : e.range;
    if (copied_end == v) {
      enames.erase(e.id);
      for (std::size_t j = 0; j < n; ++j) {
        std::string id = enames.fresh(e.id + "^" + std::to_string(j + 1));
        const std::string& other = split_end == v ? copies[block.at(ei)] : name(split_end);
        if (outsplit)
          b.add_edge(id, other, copies[j]);
        else
          b.add_edge(id, copies[j], other);
      }
    } else if (split_end == v) {
      const std::string& here = copies[block.at(ei)];
      if (outsplit)
        b.add_edge(e.id, here, name(e.range));
      else
        b.add_edge(e.id, name(e.source), here);
    } else {
      b.add_edge(e.id, name(e.source), name(e.range));
    }
  }
  return std::move(b).build();
}

Digraph do_c_set(const Digraph& d, const std::vector<std::string>& vs) {
  DigraphBuilder b(d);
  NameSet vnames = vertex_names(d);
  NameSet enames = edge_names(d);
  for (const auto& v : vs) splice(b, vnames, enames, v);
  return std::move(b).build();
}

Digraph do_p(const Digraph& d, VertexIndex v) {
  DigraphBuilder b(d);
  NameSet vnames = vertex_names(d);
  NameSet enames = edge_names(d);
  auto targets = p_targets(d, v);
  std::vector<std::string> u2(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) u2[k] = splice(b, vnames, enames, d.vertex_name(targets[k]));
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const std::string& w = d.vertex_name(targets[k]);
    for (EdgeIndex ei : d.out_edges(v)) {
      const Edge& e = d.edge(ei);
      if (e.range != targets[k]) continue;
      b.add_edge(enames.fresh("bar(" + e.id + ")@" + w), v, b.peek().vertex_index(u2[k]));
      b.add_edge(enames.fresh("tilde(" + e.id + ")@" + w), v, b.peek().vertex_index(u2[k]));
    }
  }
  return std::move(b).build();
}

Digraph do_r(const Digraph& d, VertexIndex v) {
  EdgeIndex f = d.out_edges(v).front();
  const auto& ins = d.in_edges(v);
  VertexIndex u = d.edge(ins.front()).source;
  NameSet enames = edge_names(d);
  enames.erase(d.edge(f).id);
  for (EdgeIndex e : ins) enames.erase(d.edge(e).id);

  DigraphBuilder b;
  for (VertexIndex x = 0; x < d.vertex_count(); ++x)
    if (x != v) b.add_vertex(d.vertex_name(x));
  for (const Edge& e : d.edges())
    if (e.source != v && e.range != v) b.add_edge(e.id, d.vertex_name(e.source), d.vertex_name(e.range));
  for (EdgeIndex e : ins)
    b.add_edge(enames.fresh(d.edge(e).id + "·" + d.edge(f).id), d.vertex_name(u), d.vertex_name(d.edge(f).range));
  return std::move(b).build();
}

Digraph do_r_inverse(const Digraph& d, const std::string& nv, const std::vector<std::string>& ids) {
  std::set<EdgeIndex> removed;
  for (const auto& id : ids) removed.insert(d.edge_index(id));
  const Edge& first = d.edge(d.edge_index(ids.front()));
  std::string u = d.vertex_name(first.source);
  std::string w = d.vertex_name(first.range);

  DigraphBuilder b;
  for (const auto& x : d.vertices()) b.add_vertex(x);
  b.add_vertex(nv);
  for (EdgeIndex e = 0; e < d.edge_count(); ++e)
    if (!removed.count(e)) b.add_edge(d.edge(e).id, d.vertex_name(d.edge(e).source), d.vertex_name(d.edge(e).range));
  NameSet enames = edge_names(d);
  for (const auto& id : ids) b.add_edge(id, u, nv);
  b.add_edge(enames.fresh("f@" + nv), nv, w);
  return std::move(b).build();
}

Digraph do_s_inverse(const Digraph& d, const std::string& nv, const std::vector<std::string>& targets) {
  DigraphBuilder b(d);
  b.add_vertex(nv);
  NameSet enames = edge_names(d);
  for (std::size_t k = 0; k < targets.size(); ++k)
    b.add_edge(enames.fresh("s" + std::to_string(k + 1) + "@" + nv), nv, targets[k]);
  return std::move(b).build();
}

}  // namespace

MoveKind kind_of(const MoveApplication& m) { return static_cast<MoveKind>(m.index()); }

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::S: return "S";
    case MoveKind::SInverse: return "Sinv";
    case MoveKind::R: return "R";
    case MoveKind::RInverse: return "Rinv";
    case MoveKind::O: return "O";
    case MoveKind::I: return "I";
    case MoveKind::C: return "C";
    case MoveKind::CSet: return "CS";
    case MoveKind::P: return "P";
  }
  return "?";
}

std::string_view to_string(Clause c) {
  switch (c) {
    case Clause::NotSource: return "not-source";
    case Clause::NotRegular: return "not-regular";
    case Clause::OutEdgeNotUnique: return "out-edge-not-unique";
    case Clause::InSourceNotUnique: return "in-source-not-unique";
    case Clause::InSourceIsVertex: return "in-source-is-vertex";
    case Clause::IsSink: return "is-sink";
    case Clause::IsSource: return "is-source";
    case Clause::InvalidPartition: return "invalid-partition";
    case Clause::TooFewReturnPaths: return "too-few-return-paths";
    case Clause::NoLoop: return "no-loop";
    case Clause::OtherReturnPath: return "other-return-path";
    case Clause::LoopWithoutExit: return "loop-without-exit";
    case Clause::NeighbourNotEligible: return "neighbour-not-eligible";
    case Clause::IdentifierInUse: return "identifier-in-use";
    case Clause::EmptyTargets: return "empty-targets";
    case Clause::EmptyEdgeSet: return "empty-edge-set";
    case Clause::EdgesNotParallel: return "edges-not-parallel";
    case Clause::RepeatedEdge: return "repeated-edge";
    case Clause::RepeatedVertex: return "repeated-vertex";
  }
  return "?";
}

std::optional<PreconditionViolation> check_precondition(const Digraph& d, const MoveApplication& m) {
  return std::visit([&](const auto& mv) { return check(d, mv); }, m);
}

Digraph apply_move(const Digraph& d, const MoveApplication& m) {
  require(d, m);
  return std::visit(overloaded{
                        [&](const move::S& mv) { return do_s(d, d.vertex_index(mv.vertex)); },
                        [&](const move::SInverse& mv) { return do_s_inverse(d, mv.new_vertex, mv.targets); },
                        [&](const move::R& mv) { return do_r(d, d.vertex_index(mv.vertex)); },
                        [&](const move::RInverse& mv) { return do_r_inverse(d, mv.new_vertex, mv.edges); },
                        [&](const move::O& mv) { return do_split(d, d.vertex_index(mv.vertex), mv.partition, true); },
                        [&](const move::I& mv) { return do_split(d, d.vertex_index(mv.vertex), mv.partition, false); },
                        [&](const move::C& mv) { return do_c_set(d, {mv.vertex}); },
                        [&](const move::CSet& mv) { return do_c_set(d, mv.vertices); },
                        [&](const move::P& mv) { return do_p(d, d.vertex_index(mv.vertex)); },
                    },
                    m);
}

Digraph move_s(const Digraph& d, std::string_view v_s) { return apply_move(d, move::S{std::string(v_s)}); }

Digraph move_s_inverse(const Digraph& d, std::string_view new_vertex, const std::vector<std::string>& targets) {
  return apply_move(d, move::SInverse{std::string(new_vertex), targets});
}

Digraph move_r(const Digraph& d, std::string_view v_r) { return apply_move(d, move::R{std::string(v_r)}); }

Digraph move_r_inverse(const Digraph& d, std::string_view new_vertex, const std::vector<std::string>& edges) {
  return apply_move(d, move::RInverse{std::string(new_vertex), edges});
}

Digraph move_o(const Digraph& d, std::string_view v, const std::vector<std::vector<std::string>>& partition) {
  return apply_move(d, move::O{std::string(v), partition});
}

Digraph move_i(const Digraph& d, std::string_view v, const std::vector<std::vector<std::string>>& partition) {
  return apply_move(d, move::I{std::string(v), partition});
}

Digraph move_c(const Digraph& d, std::string_view v, bool force) { return apply_move(d, move::C{std::string(v), force}); }

Digraph move_c_set(const Digraph& d, const std::vector<std::string>& vertices, bool force) {
  return apply_move(d, move::CSet{vertices, force});
}

Digraph move_p(const Digraph& d, std::string_view v) { return apply_move(d, move::P{std::string(v)}); }

bool equal_up_to_edge_renaming(const Digraph& a, const Digraph& b) {
  if (a.vertices() != b.vertices() || a.edge_count() != b.edge_count()) return false;
  std::multiset<std::pair<VertexIndex, VertexIndex>> ea, eb;
  for (const Edge& e : a.edges()) ea.insert({e.source, e.range});
  for (const Edge& e : b.edges()) eb.insert({e.source, e.range});
  return ea == eb;
}

}  // namespace dspec
