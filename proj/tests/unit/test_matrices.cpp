#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dspec/corpus.hpp"
#include "dspec/error.hpp"
#include "dspec/matrices.hpp"
#include "dspec/random_digraph.hpp"
#include "dspec/spectra.hpp"
#include "oracles.hpp"

using namespace dspec;

namespace {

ExactMatrix Q(std::initializer_list<std::initializer_list<Rational>> rows) {
  ExactMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::vector<Digraph> strongly_connected_sample(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  RandomDigraphOptions o;
  o.strongly_connected = true;
  std::vector<Digraph> out;
  // A lone vertex without edges counts as strongly connected but has no transition matrix.
  while (out.size() < static_cast<std::size_t>(n)) {
    Digraph d = random_digraph(rng, o);
    if (d.edge_count() > 0) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

TEST(Matrices, D1Explicit) {
  Digraph d1 = corpus::load("d1");
  EXPECT_EQ(adjacency_matrix(d1), Q({{1, 1, 2}, {0, 2, 1}, {0, 0, 1}}));
  EXPECT_EQ(adjacency_matrix(d1, true), Q({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(laplacian_matrix(d1), Q({{3, -1, -2}, {-1, 2, -1}, {-2, -1, 3}}));
  EXPECT_EQ(skew_matrix(d1), Q({{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}}));
  EXPECT_EQ(skew_matrix(d1, true), Q({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}));
  EXPECT_EQ(symmetric_adjacency_matrix(d1), Q({{6, 4, 2}, {4, 5, 1}, {2, 1, 1}}));
  GaussianMatrix h = hermitian_matrix(d1);
  EXPECT_EQ(h(0, 0), Gaussian(1));
  EXPECT_EQ(h(0, 1), Gaussian(0, 1));
  EXPECT_EQ(h(1, 0), Gaussian(0, -1));
  EXPECT_EQ(h(2, 0), Gaussian(0, -1));
}

TEST(Matrices, HermitianBothDirectionsIsOne) {
  GaussianMatrix h = hermitian_matrix(corpus::load("d0"));
  EXPECT_EQ(h(0, 1), Gaussian(1));
  EXPECT_EQ(h(1, 0), Gaussian(1));
  EXPECT_EQ(h(0, 0), Gaussian(0));
}

TEST(Matrices, IncidenceAndLaplacian) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    Digraph d = random_digraph(rng);
    ExactMatrix m = incidence_matrix(d);
    ASSERT_EQ(m.rows(), d.vertex_count());
    ASSERT_EQ(m.cols(), d.edge_count());
    for (std::size_t e = 0; e < d.edge_count(); ++e) {
      Rational col_sum = 0;
      for (std::size_t v = 0; v < d.vertex_count(); ++v) col_sum += m(v, e);
      EXPECT_EQ(col_sum, 0);
      if (!d.edge(e).is_loop()) {
        EXPECT_EQ(m(d.edge(e).source, e), 1);
        EXPECT_EQ(m(d.edge(e).range, e), -1);
      }
    }
    EXPECT_EQ(laplacian_matrix(d), m * m.transpose());
    EXPECT_EQ(line_adjacency_matrix(d), oracle::line_adjacency(d));
    EXPECT_EQ(adjacency_matrix(d), oracle::adjacency(d, false));
  }
}

TEST(Matrices, SymmetryShapes) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    Digraph d = random_digraph(rng);
    ExactMatrix s = skew_matrix(d), sb = skew_matrix(d, true);
    EXPECT_EQ(s.transpose(), ExactMatrix(s.rows(), s.cols()) - s);
    EXPECT_EQ(sb.transpose(), ExactMatrix(sb.rows(), sb.cols()) - sb);
    EXPECT_EQ(s, adjacency_matrix(d) - adjacency_matrix(d).transpose());
    GaussianMatrix h = hermitian_matrix(d);
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) EXPECT_EQ(h(i, j), h(j, i).conj());
    ExactMatrix a = adjacency_matrix(d);
    EXPECT_EQ(symmetric_adjacency_matrix(d), a * a.transpose());
    EXPECT_EQ(symmetric_adjacency_matrix(d, false, true), a.transpose() * a);
    EXPECT_EQ(char_poly(symmetric_adjacency_matrix(d)), char_poly(symmetric_adjacency_matrix(d, false, true)));
  }
}

TEST(Matrices, SkewLaplacianUsesDegreeDifference) {
  Digraph d1 = corpus::load("d1");
  // out - in: v1 4-1, v2 3-3, v3 1-4.
  ExactMatrix l = skew_laplacian_matrix(d1);
  EXPECT_EQ(l(0, 0), 3);
  EXPECT_EQ(l(1, 1), 0);
  EXPECT_EQ(l(2, 2), -3);
  ExactMatrix s = skew_matrix(d1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        EXPECT_EQ(l(i, j), -s(i, j));
      }
  // binary: out 3-1, 2-2, 1-3 among distinct neighbours
  ExactMatrix lb = skew_laplacian_matrix(d1, true);
  EXPECT_EQ(lb(0, 0), 2);
  EXPECT_EQ(lb(1, 1), 0);
  EXPECT_EQ(lb(2, 2), -2);
}

TEST(Matrices, PerronD4) {
  Digraph d4 = corpus::load("d4");
  EXPECT_EQ(transition_matrix(d4), Q({{Rational(1, 2), Rational(1, 2)}, {1, 0}}));
  EXPECT_EQ(perron_vector(d4), (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(combinatorial_laplacian_matrix(d4),
            Q({{Rational(1, 3), Rational(-1, 3)}, {Rational(-1, 3), Rational(1, 3)}}));
  EXPECT_EQ(format_csv(AnyMatrix(combinatorial_laplacian_matrix(d4))), "1/3,-1/3\n-1/3,1/3\n");
}

TEST(Matrices, PerronVectorIsExactFixedPoint) {
  for (const auto& d : strongly_connected_sample(3, 80)) {
    for (bool binary : {false, true}) {
      auto phi = perron_vector(d, binary);
      ExactMatrix p = transition_matrix(d, binary);
      Rational total = 0;
      for (std::size_t j = 0; j < phi.size(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < phi.size(); ++i) s += phi[i] * p(i, j);
        EXPECT_EQ(s, phi[j]);
        EXPECT_GT(phi[j], 0);
        total += phi[j];
      }
      EXPECT_EQ(total, 1);
      auto approx = oracle::perron_power(d, binary);
      for (std::size_t j = 0; j < phi.size(); ++j) EXPECT_NEAR(phi[j].get_d(), approx[j], 1e-4);
    }
  }
}

TEST(Matrices, TransitionRowsSumToOne) {
  for (const auto& d : strongly_connected_sample(4, 50)) {
    ExactMatrix p = transition_matrix(d);
    for (std::size_t i = 0; i < p.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < p.cols(); ++j) s += p(i, j);
      EXPECT_EQ(s, 1);
    }
  }
}

TEST(Matrices, PerronKindsNeedStrongConnectivity) {
  Digraph d1 = corpus::load("d1");
  for (auto k : all_matrix_kinds) {
    if (requires_strong_connectivity(k))
      EXPECT_THROW(build_matrix(d1, k), NotStronglyConnected) << kind_name(k);
    else
      EXPECT_NO_THROW(build_matrix(d1, k)) << kind_name(k);
  }
  EXPECT_THROW(transition_matrix(parse_digraph("vertices a b\nedge e a b\n")), SinkVertex);
  EXPECT_THROW(perron_vector(d1), NotStronglyConnected);
}

TEST(Matrices, NormalizedLaplacianIsSymmetricWithZeroEigenvalue) {
  for (const auto& d : strongly_connected_sample(5, 40)) {
    FloatMatrix l = normalized_laplacian_matrix(d);
    for (std::size_t i = 0; i < l.rows(); ++i)
      for (std::size_t j = 0; j < l.cols(); ++j) EXPECT_DOUBLE_EQ(l(i, j), l(j, i));
    auto r = spectrum(d, MatrixKind::NormalizedLaplacian);
    double smallest = 1e9;
    for (auto z : r.floats) smallest = std::min(smallest, std::abs(z));
    EXPECT_LT(smallest, 1e-9);
  }
}

TEST(Matrices, CombinatorialLaplacianIsSymmetricWithZeroRowSums) {
  for (const auto& d : strongly_connected_sample(6, 40)) {
    ExactMatrix l = combinatorial_laplacian_matrix(d, true);
    EXPECT_EQ(l, l.transpose());
    for (std::size_t i = 0; i < l.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < l.cols(); ++j) s += l(i, j);
      EXPECT_EQ(s, 0);
    }
  }
}

TEST(Matrices, KindNames) {
  for (auto k : all_matrix_kinds) EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_FALSE(parse_kind("bogus"));
  EXPECT_EQ(field_of(MatrixKind::Hermitian), Field::Gaussian);
  EXPECT_EQ(field_of(MatrixKind::NormalizedLaplacian), Field::Float);
  EXPECT_EQ(field_of(MatrixKind::CombinatorialLaplacian), Field::Rational);
}

TEST(Matrices, GridAndCsvFormats) {
  Digraph d0 = corpus::load("d0");
  EXPECT_EQ(format_csv(AnyMatrix(laplacian_matrix(d0))), "2,-2\n-2,2\n");
  std::string grid = format_grid(AnyMatrix(laplacian_matrix(d0)));
  EXPECT_NE(grid.find("-2"), std::string::npos);
  EXPECT_EQ(std::count(grid.begin(), grid.end(), '\n'), 2);
  std::string h = format_csv(AnyMatrix(hermitian_matrix(corpus::load("d1"))));
  EXPECT_NE(h.find("0+1*i"), std::string::npos);
}

TEST(Matrices, DeterminantAgreesWithOracle) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    Digraph d = random_digraph(rng);
    ExactMatrix m = laplacian_matrix(d) + ExactMatrix::identity(d.vertex_count());
    EXPECT_EQ(determinant(m), oracle::determinant(m));
  }
}
