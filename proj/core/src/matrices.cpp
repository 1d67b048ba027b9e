#include "dspec/matrices.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "dspec/error.hpp"

namespace dspec {

namespace {

struct KindInfo {
  MatrixKind kind;
  std::string_view name;
};

constexpr KindInfo kind_table[] = {
    {MatrixKind::Laplacian, "laplacian"},
    {MatrixKind::Adjacency, "adjacency"},
    {MatrixKind::BinaryAdjacency, "binary-adjacency"},
    {MatrixKind::SymmetricAdjacency, "symmetric-adjacency"},
    {MatrixKind::SymmetricBinaryAdjacency, "symmetric-binary-adjacency"},
    {MatrixKind::LineAdjacency, "line-adjacency"},
    {MatrixKind::Hermitian, "hermitian"},
    {MatrixKind::Skew, "skew"},
    {MatrixKind::BinarySkew, "binary-skew"},
    {MatrixKind::SkewLaplacian, "skew-laplacian"},
    {MatrixKind::BinarySkewLaplacian, "binary-skew-laplacian"},
    {MatrixKind::NormalizedLaplacian, "normalized-laplacian"},
    {MatrixKind::BinaryNormalizedLaplacian, "binary-normalized-laplacian"},
    {MatrixKind::CombinatorialLaplacian, "combinatorial-laplacian"},
    {MatrixKind::BinaryCombinatorialLaplacian, "binary-combinatorial-laplacian"},
};

const Digraph& maybe_unparalleled(const Digraph& d, bool binary, Digraph& storage) {
  if (!binary) return d;
  storage = unparalleled(d);
  return storage;
}

// Unique solution of a x = b over Q, or NullspaceDimension.
std::vector<Rational> solve_unique(ExactMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      std::swap(b[p], b[r]);
    }
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != cols) throw NullspaceDimension("fixed-vector system has a solution space of dimension " + std::to_string(cols - r));
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) throw NullspaceDimension("fixed-vector system is inconsistent");
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

void require_strongly_connected(const Digraph& d) {
  if (!is_strongly_connected(d)) throw NotStronglyConnected("digraph is not strongly connected");
}

std::string format_double(double x) {
  if (x == 0) x = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

template <class T, class F>
std::string grid(const Matrix<T>& m, F fmt) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = fmt(m(i, j));
      width[j] = std::max(width[j], cells[i * m.cols() + j].size());
    }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      if (j) out += "  ";
      out.append(width[j] - c.size(), ' ');
      out += c;
    }
    out += '\n';
  }
  return out;
}

template <class T, class F>
std::string csv(const Matrix<T>& m, F fmt) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += fmt(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string_view kind_name(MatrixKind k) {
  for (const auto& info : kind_table)
    if (info.kind == k) return info.name;
  return "?";
}

std::optional<MatrixKind> parse_kind(std::string_view name) {
  for (const auto& info : kind_table)
    if (info.name == name) return info.kind;
  return std::nullopt;
}

bool requires_strong_connectivity(MatrixKind k) {
  switch (k) {
    case MatrixKind::NormalizedLaplacian:
    case MatrixKind::BinaryNormalizedLaplacian:
    case MatrixKind::CombinatorialLaplacian:
    case MatrixKind::BinaryCombinatorialLaplacian:
      return true;
    default:
      return false;
  }
}

Field field_of(MatrixKind k) {
  switch (k) {
    case MatrixKind::Hermitian: return Field::Gaussian;
    case MatrixKind::NormalizedLaplacian:
    case MatrixKind::BinaryNormalizedLaplacian: return Field::Float;
    default: return Field::Rational;
  }
}

ExactMatrix incidence_matrix(const Digraph& d) {
  ExactMatrix m(d.vertex_count(), d.edge_count());
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edge(e);
    if (ed.is_loop()) continue;
    m(ed.source, e) = 1;
    m(ed.range, e) = -1;
  }
  return m;
}

ExactMatrix adjacency_matrix(const Digraph& d, bool binary) {
  ExactMatrix m(d.vertex_count(), d.vertex_count());
  for (const Edge& e : d.edges()) {
    if (binary)
      m(e.source, e.range) = 1;
    else
      m(e.source, e.range) += 1;
  }
  return m;
}

ExactMatrix laplacian_matrix(const Digraph& d) {
  ExactMatrix m = incidence_matrix(d);
  return m * m.transpose();
}

ExactMatrix symmetric_adjacency_matrix(const Digraph& d, bool binary, bool right) {
  ExactMatrix a = adjacency_matrix(d, binary);
  return right ? a.transpose() * a : a * a.transpose();
}

ExactMatrix line_adjacency_matrix(const Digraph& d) { return adjacency_matrix(line_digraph(d)); }

GaussianMatrix hermitian_matrix(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  ExactMatrix ab = adjacency_matrix(d, true);
  GaussianMatrix h(n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      bool fwd = ab(v, w) != 0, back = ab(w, v) != 0;
      if (fwd && back)
        h(v, w) = Gaussian(1);
      else if (fwd)
        h(v, w) = Gaussian(0, 1);
      else if (back)
        h(v, w) = Gaussian(0, -1);
    }
  return h;
}

ExactMatrix skew_matrix(const Digraph& d, bool binary) {
  ExactMatrix a = adjacency_matrix(d, binary);
  return a - a.transpose();
}

ExactMatrix skew_laplacian_matrix(const Digraph& d, bool binary) {
  ExactMatrix m = skew_matrix(d, binary);
  ExactMatrix out(m.rows(), m.cols());
  out -= m;
  for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
    Degrees q = degrees(d, v);
    long diff = binary ? static_cast<long>(q.binary_out) - static_cast<long>(q.binary_in)
                       : static_cast<long>(q.out) - static_cast<long>(q.in);
    out(v, v) += diff;
  }
  return out;
}

ExactMatrix transition_matrix(const Digraph& d, bool binary) {
  Digraph storage;
  const Digraph& g = maybe_unparalleled(d, binary, storage);
  ExactMatrix p = adjacency_matrix(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::size_t out = g.out_edges(v).size();
    if (out == 0) throw SinkVertex("vertex '" + g.vertex_name(v) + "' has no out-edge");
    for (std::size_t w = 0; w < g.vertex_count(); ++w) p(v, w) /= static_cast<unsigned long>(out);
  }
  return p;
}

std::vector<Rational> perron_vector(const Digraph& d, bool binary) {
  require_strongly_connected(d);
  ExactMatrix p = transition_matrix(d, binary);
  const std::size_t n = p.rows();
  ExactMatrix sys(n + 1, n);
  std::vector<Rational> rhs(n + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sys(i, j) = p(j, i) - (i == j ? 1 : 0);
  for (std::size_t j = 0; j < n; ++j) sys(n, j) = 1;
  rhs[n] = 1;
  auto phi = solve_unique(std::move(sys), std::move(rhs));
  for (const auto& x : phi)
    if (sgn(x) <= 0) throw NullspaceDimension("fixed vector has a non-positive entry");
  return phi;
}

ExactMatrix combinatorial_laplacian_matrix(const Digraph& d, bool binary) {
  auto phi = perron_vector(d, binary);
  ExactMatrix p = transition_matrix(d, binary);
  const std::size_t n = p.rows();
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational sym = (phi[i] * p(i, j) + p(j, i) * phi[j]) / 2;
      out(i, j) = (i == j ? phi[i] : Rational(0)) - sym;
    }
  return out;
}

FloatMatrix normalized_laplacian_matrix(const Digraph& d, bool binary) {
  auto phi = perron_vector(d, binary);
  ExactMatrix p = transition_matrix(d, binary);
  const std::size_t n = p.rows();
  std::vector<double> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = std::sqrt(phi[i].get_d());
  FloatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double a_ij = root[i] * p(i, j).get_d() / root[j];
      double a_ji = root[j] * p(j, i).get_d() / root[i];
      double x = (i == j ? 1.0 : 0.0) - (a_ij + a_ji) / 2;
      out(i, j) = x;
      out(j, i) = x;
    }
  return out;
}

AnyMatrix build_matrix(const Digraph& d, MatrixKind kind, BuildOptions options) {
  if (requires_strong_connectivity(kind)) require_strongly_connected(d);
  switch (kind) {
    case MatrixKind::Laplacian: return laplacian_matrix(d);
    case MatrixKind::Adjacency: return adjacency_matrix(d, false);
    case MatrixKind::BinaryAdjacency: return adjacency_matrix(d, true);
    case MatrixKind::SymmetricAdjacency: return symmetric_adjacency_matrix(d, false, options.right_symmetric);
    case MatrixKind::SymmetricBinaryAdjacency: return symmetric_adjacency_matrix(d, true, options.right_symmetric);
    case MatrixKind::LineAdjacency: return line_adjacency_matrix(d);
    case MatrixKind::Hermitian: return hermitian_matrix(d);
    case MatrixKind::Skew: return skew_matrix(d, false);
    case MatrixKind::BinarySkew: return skew_matrix(d, true);
    case MatrixKind::SkewLaplacian: return skew_laplacian_matrix(d, false);
    case MatrixKind::BinarySkewLaplacian: return skew_laplacian_matrix(d, true);
    case MatrixKind::NormalizedLaplacian: return normalized_laplacian_matrix(d, false);
    case MatrixKind::BinaryNormalizedLaplacian: return normalized_laplacian_matrix(d, true);
    case MatrixKind::CombinatorialLaplacian: return combinatorial_laplacian_matrix(d, false);
    case MatrixKind::BinaryCombinatorialLaplacian: return combinatorial_laplacian_matrix(d, true);
  }
  throw InvalidArgument("unknown matrix kind");
}

std::string format_grid(const ExactMatrix& m) { return grid(m, [](const Rational& q) { return to_string(q); }); }
std::string format_grid(const GaussianMatrix& m) { return grid(m, [](const Gaussian& g) { return to_string(g); }); }
std::string format_grid(const FloatMatrix& m) { return grid(m, format_double); }
std::string format_csv(const ExactMatrix& m) { return csv(m, [](const Rational& q) { return to_string(q); }); }
std::string format_csv(const GaussianMatrix& m) { return csv(m, [](const Gaussian& g) { return to_string(g); }); }
std::string format_csv(const FloatMatrix& m) { return csv(m, format_double); }

std::string format_grid(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return format_grid(x); }, m);
}
std::string format_csv(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return format_csv(x); }, m);
}

Rational determinant(ExactMatrix m) {
  if (!m.square()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

bool is_integral(const ExactMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rational& q) { return q.get_den() == 1; });
}

IntegerMatrix to_integer_matrix(const ExactMatrix& m) {
  IntegerMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InvalidArgument("matrix entry is not an integer");
      z(i, j) = m(i, j).get_num();
    }
  return z;
}

}  // namespace dspec
