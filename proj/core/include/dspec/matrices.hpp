#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "dspec/digraph.hpp"
#include "dspec/matrix.hpp"

namespace dspec {

enum class MatrixKind {
  Laplacian,
  Adjacency,
  BinaryAdjacency,
  SymmetricAdjacency,
  SymmetricBinaryAdjacency,
  LineAdjacency,
  Hermitian,
  Skew,
  BinarySkew,
  SkewLaplacian,
  BinarySkewLaplacian,
  NormalizedLaplacian,
  BinaryNormalizedLaplacian,
  CombinatorialLaplacian,
  BinaryCombinatorialLaplacian,
};

inline constexpr std::array<MatrixKind, 15> all_matrix_kinds = {
    MatrixKind::Laplacian,           MatrixKind::Adjacency,
    MatrixKind::BinaryAdjacency,     MatrixKind::SymmetricAdjacency,
    MatrixKind::SymmetricBinaryAdjacency, MatrixKind::LineAdjacency,
    MatrixKind::Hermitian,           MatrixKind::Skew,
    MatrixKind::BinarySkew,          MatrixKind::SkewLaplacian,
    MatrixKind::BinarySkewLaplacian, MatrixKind::NormalizedLaplacian,
    MatrixKind::BinaryNormalizedLaplacian, MatrixKind::CombinatorialLaplacian,
    MatrixKind::BinaryCombinatorialLaplacian,
};

// CLI token, e.g. "skew-laplacian".
std::string_view kind_name(MatrixKind k);
std::optional<MatrixKind> parse_kind(std::string_view name);

// The four kinds built from the Perron vector.
bool requires_strong_connectivity(MatrixKind k);

enum class Field { Rational, Gaussian, Float };
Field field_of(MatrixKind k);

struct BuildOptions {
  // SymmetricAdjacency / SymmetricBinaryAdjacency only: build A^T A instead of A A^T.
  bool right_symmetric = false;
};

using AnyMatrix = std::variant<ExactMatrix, GaussianMatrix, FloatMatrix>;

// |V| x |E|: +1 at the source row, -1 at the range row, zero columns for loops.
ExactMatrix incidence_matrix(const Digraph& d);
ExactMatrix adjacency_matrix(const Digraph& d, bool binary = false);
ExactMatrix laplacian_matrix(const Digraph& d);
ExactMatrix symmetric_adjacency_matrix(const Digraph& d, bool binary = false, bool right = false);
ExactMatrix line_adjacency_matrix(const Digraph& d);
GaussianMatrix hermitian_matrix(const Digraph& d);
ExactMatrix skew_matrix(const Digraph& d, bool binary = false);
// diag(d_out - d_in) - S, using the binary degrees for the binary variant.
ExactMatrix skew_laplacian_matrix(const Digraph& d, bool binary = false);

// Row-stochastic; throws SinkVertex when a vertex has no out-edge.
ExactMatrix transition_matrix(const Digraph& d, bool binary = false);
// Left fixed vector of the transition matrix, positive, summing to 1.
// Throws NotStronglyConnected, or NullspaceDimension if the exact solve is not unique.
std::vector<Rational> perron_vector(const Digraph& d, bool binary = false);
ExactMatrix combinatorial_laplacian_matrix(const Digraph& d, bool binary = false);
FloatMatrix normalized_laplacian_matrix(const Digraph& d, bool binary = false);

// Throws NotStronglyConnected for the Perron kinds on digraphs that are not strongly connected.
AnyMatrix build_matrix(const Digraph& d, MatrixKind kind, BuildOptions options = {});

std::string format_grid(const AnyMatrix& m);
std::string format_csv(const AnyMatrix& m);

}  // namespace dspec
