#include "dspec/random_digraph.hpp"

#include <algorithm>

#include "dspec/error.hpp"

namespace dspec {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::vector<std::string>> random_partition(const Digraph& d, const std::vector<EdgeIndex>& edges,
                                                       std::mt19937_64& rng) {
  std::size_t blocks = uniform(rng, 1, edges.size());
  std::vector<EdgeIndex> order = edges;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<std::string>> out(blocks);
  // First seed each block, then scatter the rest so no block is empty.
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t b = i < blocks ? i : uniform(rng, 0, blocks - 1);
    out[b].push_back(d.edge(order[i]).id);
  }
  return out;
}

template <class Pred>
std::optional<VertexIndex> pick_vertex(const Digraph& d, std::mt19937_64& rng, Pred ok) {
  std::vector<VertexIndex> candidates;
  for (VertexIndex v = 0; v < d.vertex_count(); ++v)
    if (ok(v)) candidates.push_back(v);
  if (candidates.empty()) return std::nullopt;
  return candidates[uniform(rng, 0, candidates.size() - 1)];
}

}  // namespace

Digraph random_digraph(std::mt19937_64& rng, const RandomDigraphOptions& options) {
  if (options.min_vertices == 0 || options.min_vertices > options.max_vertices)
    throw InvalidArgument("bad vertex range for random digraphs");
  while (true) {
    DigraphBuilder b;
    std::size_t n = uniform(rng, options.min_vertices, options.max_vertices);
    std::size_t m = uniform(rng, 0, options.max_edges);
    for (std::size_t v = 0; v < n; ++v) b.add_vertex("x" + std::to_string(v));
    for (std::size_t e = 0; e < m; ++e) b.add_edge("e" + std::to_string(e), uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
    Digraph d = std::move(b).build();
    if (!options.strongly_connected || is_strongly_connected(d)) return d;
  }
}

std::optional<MoveApplication> random_move(const Digraph& d, MoveKind kind, std::mt19937_64& rng) {
  auto name = [&](VertexIndex v) { return d.vertex_name(v); };
  switch (kind) {
    case MoveKind::S: {
      auto v = pick_vertex(d, rng, [&](VertexIndex x) {
        auto c = classify_vertex(d, x);
        return c.is_source && c.is_regular;
      });
      if (!v) return std::nullopt;
      return move::S{name(*v)};
    }
    case MoveKind::R: {
      auto v = pick_vertex(d, rng, [&](VertexIndex x) { return !check_precondition(d, move::R{name(x)}); });
      if (!v) return std::nullopt;
      return move::R{name(*v)};
    }
    case MoveKind::O: {
      auto v = pick_vertex(d, rng, [&](VertexIndex x) { return !d.out_edges(x).empty(); });
      if (!v) return std::nullopt;
      return move::O{name(*v), random_partition(d, d.out_edges(*v), rng)};
    }
    case MoveKind::I: {
      auto v = pick_vertex(d, rng, [&](VertexIndex x) { return !d.in_edges(x).empty(); });
      if (!v) return std::nullopt;
      return move::I{name(*v), random_partition(d, d.in_edges(*v), rng)};
    }
    case MoveKind::C: {
      auto v = pick_vertex(d, rng, [&](VertexIndex x) { return !check_precondition(d, move::C{name(x), false}); });
      if (!v) return std::nullopt;
      return move::C{name(*v), false};
    }
    case MoveKind::P: {
      auto v = pick_vertex(d, rng, [&](VertexIndex x) { return !check_precondition(d, move::P{name(x)}); });
      if (!v) return std::nullopt;
      return move::P{name(*v)};
    }
    default:
      throw InvalidArgument("random applications of " + std::string(to_string(kind)) + " are not supported");
  }
}

std::optional<RandomCase> random_case(std::mt19937_64& rng, MoveKind kind, const RandomDigraphOptions& options,
                                      std::size_t max_attempts) {
  for (std::size_t i = 0; i < max_attempts; ++i) {
    Digraph d = random_digraph(rng, options);
    if (auto m = random_move(d, kind, rng)) return RandomCase{std::move(d), std::move(*m)};
  }
  return std::nullopt;
}

}  // namespace dspec
