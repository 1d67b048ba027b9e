#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "dspec/digraph.hpp"
#include "dspec/moves.hpp"

namespace dspec {

struct RandomDigraphOptions {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 6;
  std::size_t max_edges = 12;
  bool strongly_connected = false;  // resample until strongly connected
};

// Uniform vertex count, uniform edge count, endpoints uniform (loops and parallels allowed).
// Vertex ids x0, x1, ...; edge ids e0, e1, ...
Digraph random_digraph(std::mt19937_64& rng, const RandomDigraphOptions& options = {});

// A random valid application of the given move kind, or nullopt if the digraph admits none.
// S: a regular source. O / I: a random partition of s^-1(v) / r^-1(v). C: an eligible vertex.
// R and P use their precondition directly. The inverse kinds and C_set are not supported.
std::optional<MoveApplication> random_move(const Digraph& d, MoveKind kind, std::mt19937_64& rng);

// Draw (digraph, move) pairs until one admits the kind; gives up after max_attempts.
struct RandomCase {
  Digraph digraph;
  MoveApplication move;
};
std::optional<RandomCase> random_case(std::mt19937_64& rng, MoveKind kind, const RandomDigraphOptions& options = {},
                                      std::size_t max_attempts = 10000);

}  // namespace dspec
