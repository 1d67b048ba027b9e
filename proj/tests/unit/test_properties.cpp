#include <gtest/gtest.h>

#include <random>

#include "dspec/corpus.hpp"
#include "dspec/cycles.hpp"
#include "dspec/random_digraph.hpp"
#include "dspec/spectra.hpp"
#include "dspec/verifier.hpp"
#include "oracles.hpp"

using namespace dspec;

namespace {

struct Invariance {
  MoveKind move;
  MatrixKind kind;
};

std::string name_of(const Invariance& p) {
  std::string s = std::string(to_string(p.move)) + "_" + std::string(kind_name(p.kind));
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
}

// ctest shows parameter values in test names.
void PrintTo(const Invariance& p, std::ostream* os) { *os << name_of(p); }

Polynomial nonzero_poly(const Digraph& d, MatrixKind k) { return nonzero_part(*spectrum(d, k).exact).polynomial(); }

}  // namespace

class MoveInvariance : public ::testing::TestWithParam<Invariance> {};

// Exact nonzero-spectrum equality on random digraphs admitting the move, checked against the
// interpolation oracle rather than the library's own char poly.
TEST_P(MoveInvariance, NonzeroSpectrumUnchanged) {
  const auto p = GetParam();
  std::mt19937_64 rng(1000 + static_cast<unsigned>(p.move) * 31 + static_cast<unsigned>(p.kind));
  for (int t = 0; t < 100; ++t) {
    auto c = random_case(rng, p.move);
    ASSERT_TRUE(c);
    Digraph out = apply_move(c->digraph, c->move);
    auto before = std::get<ExactMatrix>(build_matrix(c->digraph, p.kind));
    auto after = std::get<ExactMatrix>(build_matrix(out, p.kind));
    EXPECT_EQ(oracle::strip_zeros(oracle::char_poly(before)), oracle::strip_zeros(oracle::char_poly(after)))
        << to_text(c->digraph) << to_string(c->move);
    EXPECT_EQ(nonzero_poly(c->digraph, p.kind), nonzero_poly(out, p.kind));
  }
}

INSTANTIATE_TEST_SUITE_P(
    RandomCases, MoveInvariance,
    ::testing::Values(Invariance{MoveKind::S, MatrixKind::Adjacency}, Invariance{MoveKind::O, MatrixKind::Adjacency},
                      Invariance{MoveKind::I, MatrixKind::Adjacency}, Invariance{MoveKind::S, MatrixKind::LineAdjacency},
                      Invariance{MoveKind::O, MatrixKind::LineAdjacency},
                      Invariance{MoveKind::I, MatrixKind::LineAdjacency},
                      Invariance{MoveKind::S, MatrixKind::BinaryAdjacency}, Invariance{MoveKind::C, MatrixKind::Skew},
                      Invariance{MoveKind::C, MatrixKind::BinarySkew},
                      Invariance{MoveKind::C, MatrixKind::SkewLaplacian},
                      Invariance{MoveKind::C, MatrixKind::BinarySkewLaplacian}),
    [](const auto& info) { return name_of(info.param); });

TEST(Properties, LineDigraphKeepsNonzeroAdjacencySpectrum) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    Digraph d = random_digraph(rng);
    EXPECT_EQ(oracle::strip_zeros(oracle::char_poly(adjacency_matrix(d))),
              oracle::strip_zeros(oracle::char_poly(line_adjacency_matrix(d))));
    EXPECT_EQ(nonzero_poly(d, MatrixKind::Adjacency), nonzero_poly(d, MatrixKind::LineAdjacency));
  }
}

TEST(Properties, PerronKindsOnlyApplyWithStrongConnectivity) {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 100; ++t) {
    auto c = random_case(rng, MoveKind::O);
    ASSERT_TRUE(c);
    auto r = preservation_check(c->digraph, c->move, MatrixKind::CombinatorialLaplacian);
    bool sc = is_strongly_connected(c->digraph) && is_strongly_connected(apply_move(c->digraph, c->move));
    EXPECT_EQ(r.verdict == Verdict::NotApplicable, !sc);
  }
}

TEST(Properties, MovesPreserveStrongConnectivityWhereApplicable) {
  RandomDigraphOptions o;
  o.strongly_connected = true;
  std::mt19937_64 rng(79);
  for (auto kind : {MoveKind::R, MoveKind::O, MoveKind::I, MoveKind::C}) {
    for (int t = 0; t < 50; ++t) {
      auto c = random_case(rng, kind, o);
      ASSERT_TRUE(c);
      EXPECT_TRUE(is_strongly_connected(apply_move(c->digraph, c->move))) << to_string(c->move);
    }
  }
}

TEST(Properties, SpectraAreDeterministic) {
  for (const auto& e : corpus::entries()) {
    Digraph d = corpus::load(e.name);
    for (auto k : all_matrix_kinds) {
      if (requires_strong_connectivity(k) && !is_strongly_connected(d)) continue;
      EXPECT_EQ(to_line(spectrum(d, k)), to_line(spectrum(d, k)));
    }
  }
}
