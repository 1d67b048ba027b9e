#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <random>

#include "dspec/corpus.hpp"
#include "dspec/error.hpp"
#include "dspec/random_digraph.hpp"
#include "dspec/spectra.hpp"
#include "oracles.hpp"

using namespace dspec;

namespace {

Polynomial P(std::initializer_list<long> descending) {
  std::vector<Rational> c;
  for (long x : descending) c.emplace_back(x);
  return Polynomial::from_descending(c);
}

// Real 2n x 2n form [[Re, -Im], [Im, Re]] of a Gaussian matrix; its char poly is p(t)^2.
ExactMatrix realify(const GaussianMatrix& h) {
  std::size_t n = h.rows();
  ExactMatrix r(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r(i, j) = h(i, j).re;
      r(i + n, j + n) = h(i, j).re;
      r(i, j + n) = -h(i, j).im;
      r(i + n, j) = h(i, j).im;
    }
  return r;
}

std::vector<std::complex<double>> eigen_values(const ExactMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(i, j) = m(i, j).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(e, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

}  // namespace

TEST(Spectra, CharPolyMatchesInterpolationOnCorpus) {
  for (const auto& entry : corpus::entries()) {
    Digraph d = corpus::load(entry.name);
    for (auto k : all_matrix_kinds) {
      if (field_of(k) != Field::Rational) continue;
      if (requires_strong_connectivity(k) && !is_strongly_connected(d)) continue;
      auto m = std::get<ExactMatrix>(build_matrix(d, k));
      EXPECT_EQ(char_poly(m).polynomial(), oracle::char_poly(m)) << entry.name << " " << kind_name(k);
    }
  }
}

TEST(Spectra, CharPolyMatchesInterpolationOnRandomMatrices) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 7;
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        m(i, j) = q;
      }
    EXPECT_EQ(char_poly(m).polynomial(), oracle::char_poly(m));
  }
}

TEST(Spectra, HermitianCharPolyViaRealForm) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    Digraph d = random_digraph(rng);
    GaussianMatrix h = hermitian_matrix(d);
    Polynomial p = char_poly(h).polynomial();
    EXPECT_EQ(p * p, oracle::char_poly(realify(h)));
  }
}

TEST(Spectra, NonHermitianGaussianInputIsRejected) {
  GaussianMatrix g(1, 1);
  g(0, 0) = Gaussian(0, 1);
  EXPECT_THROW(char_poly(g), NonRealCoefficient);
}

TEST(Spectra, ClosedFormsOnD1) {
  Digraph d1 = corpus::load("d1");
  EXPECT_EQ(spectrum(d1, MatrixKind::Laplacian).exact->polynomial(), P({1, -8, 15, 0}));
  EXPECT_EQ(spectrum(d1, MatrixKind::Adjacency).exact->polynomial(), P({1, -4, 5, -2}));
  EXPECT_EQ(spectrum(d1, MatrixKind::Skew).exact->polynomial(), P({1, 0, 6, 0}));
  EXPECT_EQ(spectrum(d1, MatrixKind::Laplacian).exact->zero_multiplicity(), 1u);
}

TEST(Spectra, FloatRootsAgreeWithEigen) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    Digraph d = random_digraph(rng);
    for (auto k : {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SymmetricAdjacency, MatrixKind::Skew,
                   MatrixKind::SkewLaplacian}) {
      bool normal = k != MatrixKind::Adjacency && k != MatrixKind::SkewLaplacian;
      auto m = std::get<ExactMatrix>(build_matrix(d, k));
      auto ours = spectrum(d, k).floats;
      auto ref = eigen_values(m);
      ASSERT_EQ(ours.size(), ref.size());
      // Defective eigenvalues of nonnormal matrices limit Eigen's own accuracy, hence the
      // loose bound there.
      std::vector<bool> used(ours.size(), false);
      for (auto z : ref) {
        std::size_t best = 0;
        double dist = 1e9;
        for (std::size_t i = 0; i < ours.size(); ++i)
          if (!used[i] && std::abs(ours[i] - z) < dist) dist = std::abs(ours[i] - z), best = i;
        used[best] = true;
        EXPECT_LT(dist, normal ? 1e-8 : 5e-2) << kind_name(k);
      }
    }
  }
}

TEST(Spectra, ReportsAreSortedAndSized) {
  Digraph d1c = corpus::load("d1_c");
  for (auto k : all_matrix_kinds) {
    if (requires_strong_connectivity(k)) continue;
    auto r = spectrum(d1c, k);
    std::size_t dim = k == MatrixKind::LineAdjacency ? d1c.edge_count() : d1c.vertex_count();
    EXPECT_EQ(r.floats.size(), dim);
    for (std::size_t i = 1; i < r.floats.size(); ++i) {
      bool ordered = r.floats[i - 1].real() > r.floats[i].real() ||
                     (r.floats[i - 1].real() == r.floats[i].real() && r.floats[i - 1].imag() >= r.floats[i].imag());
      EXPECT_TRUE(ordered) << kind_name(k);
    }
  }
}

TEST(Spectra, NonzeroEqualityIsAnEquivalence) {
  std::vector<Digraph> sample;
  for (const auto& e : corpus::entries()) sample.push_back(corpus::load(e.name));
  for (auto k : all_matrix_kinds) {
    std::vector<SpectrumReport> reports;
    for (const auto& d : sample)
      if (!requires_strong_connectivity(k) || is_strongly_connected(d)) reports.push_back(spectrum(d, k));
    for (const auto& a : reports) {
      EXPECT_TRUE(nonzero_spectra_equal(a, a));
      for (const auto& b : reports) {
        bool ab = nonzero_spectra_equal(a, b);
        EXPECT_EQ(ab, nonzero_spectra_equal(b, a));
        if (!ab) continue;
        for (const auto& c : reports)
          if (nonzero_spectra_equal(b, c)) {
            EXPECT_TRUE(nonzero_spectra_equal(a, c));
          }
      }
    }
  }
  EXPECT_THROW(nonzero_spectra_equal(spectrum(sample[0], MatrixKind::Adjacency), spectrum(sample[0], MatrixKind::Skew)),
               KindMismatch);
}

TEST(Spectra, NonzeroPart) {
  CharPoly p(P({1, -3, 2, 0, 0}));
  EXPECT_EQ(nonzero_part(p).polynomial(), P({1, -3, 2}));
  EXPECT_EQ(p.zero_multiplicity(), 2u);
  EXPECT_EQ(p.coefficients().size(), 5u);
  EXPECT_THROW(CharPoly(P({2, 1})), InvalidArgument);
}

TEST(Spectra, FloatKindsUseTolerance) {
  Digraph d4 = corpus::load("d4");
  auto a = spectrum(d4, MatrixKind::NormalizedLaplacian);
  EXPECT_FALSE(a.exact);
  ASSERT_EQ(a.floats.size(), 2u);
  EXPECT_NEAR(a.floats[0].real(), 1.5, 1e-12);
  EXPECT_NEAR(a.floats[1].real(), 0.0, 1e-12);
  EXPECT_EQ(nonzero_floats(a).size(), 1u);
  // Binary and weighted normalized Laplacians agree on D4.
  EXPECT_TRUE(nonzero_spectra_equal(a, [&] {
    auto b = spectrum(d4, MatrixKind::BinaryNormalizedLaplacian);
    b.kind = MatrixKind::NormalizedLaplacian;
    return b;
  }()));
}

TEST(Spectra, Formatting) {
  EXPECT_EQ(format_value({5, 0}), "5");
  EXPECT_EQ(format_value({-0.24698, 0}), "-0.24698");
  EXPECT_EQ(format_value({0, 2.449489742783178}), "2.44949i");
  EXPECT_EQ(format_value({1, -2}), "1-2i");
  EXPECT_EQ(format_value({0, 0}), "0");
  EXPECT_EQ(to_line(spectrum(corpus::load("d1"), MatrixKind::Laplacian)), "laplacian; poly=1,-8,15,0; roots=5,3,0");
  std::string nl = to_line(spectrum(corpus::load("d4"), MatrixKind::NormalizedLaplacian));
  EXPECT_EQ(nl.find("poly="), std::string::npos);
  EXPECT_EQ(nl, "normalized-laplacian; roots=1.5,0");
}
