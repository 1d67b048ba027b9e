#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dspec/corpus.hpp"
#include "dspec/error.hpp"
#include "dspec/verifier.hpp"

using namespace dspec;

namespace {

const TableCell& cell(const TableReport& r, int table, MatrixKind row, char col) {
  auto it = std::find_if(r.cells.begin(), r.cells.end(),
                         [&](const TableCell& c) { return c.table == table && c.row == row && c.column == col; });
  if (it == r.cells.end()) throw std::runtime_error("missing cell");
  return *it;
}

const TableReport& tables() {
  static const TableReport r = theorem_tables();
  return r;
}

}  // namespace

class ExampleReproduction : public ::testing::TestWithParam<std::string> {};

TEST_P(ExampleReproduction, AllChecksPass) {
  ExampleReport r = reproduce_example(GetParam());
  EXPECT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.label << ": " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(Examples, ExampleReproduction,
                         ::testing::Values("D0", "D1", "D2", "D2prime", "D3", "D4", "D5", "Dm", "Dm(12)"),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace_if(s.begin(), s.end(), [](char c) { return !std::isalnum(static_cast<unsigned char>(c)); }, '_');
                           return s;
                         });

TEST(Verifier, ExampleIds) {
  auto ids = example_ids();
  for (const char* id : {"D0", "D1", "D2", "D2prime", "D3", "D4", "D5", "Dm"})
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  EXPECT_THROW(reproduce_example("D9"), UnknownIdentifier);
  EXPECT_THROW(paper_example("Dm"), UnknownIdentifier);
}

TEST(Verifier, DmFamily) {
  EXPECT_EQ(dm_digraph(0), corpus::load("d0"));
  for (std::size_t m = 1; m <= 10; ++m) EXPECT_EQ(move_s(dm_digraph(m), "v" + std::to_string(m)), dm_digraph(m - 1));
}

TEST(Verifier, PreservationCheck) {
  Digraph d4 = corpus::load("d4");
  auto r = preservation_check(d4, parse_move("C v2"), MatrixKind::Skew, "D4");
  EXPECT_EQ(r.verdict, Verdict::Preserved);
  ASSERT_TRUE(r.before && r.after);
  EXPECT_EQ(r.digraph, "D4");
  EXPECT_EQ(preservation_check(d4, parse_move("R v2"), MatrixKind::Adjacency).verdict, Verdict::NotPreserved);
  Digraph d1 = corpus::load("d1");
  auto na = preservation_check(d1, parse_move("C v2"), MatrixKind::NormalizedLaplacian);
  EXPECT_EQ(na.verdict, Verdict::NotApplicable);
  EXPECT_FALSE(na.before);
  EXPECT_THROW(preservation_check(d1, parse_move("S v1"), MatrixKind::Adjacency), PreconditionError);
}

TEST(Verifier, NonzeroContained) {
  auto a = spectrum(corpus::load("d1"), MatrixKind::Adjacency);
  auto b = spectrum(corpus::load("d1_s"), MatrixKind::Adjacency);
  auto c = spectrum(corpus::load("d1_c"), MatrixKind::Adjacency);
  EXPECT_TRUE(nonzero_contained(*a.exact, *b.exact));
  EXPECT_TRUE(nonzero_contained(*b.exact, *a.exact));
  EXPECT_FALSE(nonzero_contained(*a.exact, *c.exact));
  auto p = spectrum(corpus::load("d2prime"), MatrixKind::BinaryAdjacency);
  auto q = spectrum(corpus::load("d2prime_p"), MatrixKind::BinaryAdjacency);
  EXPECT_FALSE(nonzero_contained(*p.exact, *q.exact));
}

TEST(Verifier, ExpectedVerdictShape) {
  std::size_t preserved = 0, na = 0;
  for (auto k : all_matrix_kinds)
    for (char c : std::string("SROICP")) {
      preserved += expected_verdict(1, k, c) == Verdict::Preserved;
      na += expected_verdict(1, k, c) == Verdict::NotApplicable;
    }
  EXPECT_EQ(preserved, 11u);
  EXPECT_EQ(na, 8u);
  for (auto k : all_matrix_kinds)
    for (char c : std::string("ROIC")) EXPECT_NE(expected_verdict(2, k, c), Verdict::NotApplicable);
}

TEST(Verifier, TablesPass) {
  const auto& r = tables();
  EXPECT_EQ(r.cells.size(), 15u * 6 + 15u * 4);
  for (const auto& c : r.cells)
    EXPECT_TRUE(c.pass()) << "table " << c.table << " " << kind_name(c.row) << " " << c.column << " " << c.error;
  EXPECT_TRUE(r.passed());
}

TEST(Verifier, TableAnchors) {
  const auto& r = tables();
  EXPECT_EQ(cell(r, 1, MatrixKind::Adjacency, 'R').verdict, Verdict::NotPreserved);
  EXPECT_EQ(cell(r, 1, MatrixKind::BinaryAdjacency, 'S').verdict, Verdict::Preserved);
  EXPECT_EQ(cell(r, 1, MatrixKind::NormalizedLaplacian, 'S').verdict, Verdict::NotApplicable);
  EXPECT_EQ(cell(r, 1, MatrixKind::Adjacency, 'P').example, "D2");
  EXPECT_EQ(cell(r, 1, MatrixKind::Skew, 'R').example, "D5");
  EXPECT_EQ(cell(r, 2, MatrixKind::BinaryAdjacency, 'O').example, "D3");
  EXPECT_EQ(cell(r, 2, MatrixKind::BinaryAdjacency, 'I').example, "D3");
  EXPECT_EQ(cell(r, 2, MatrixKind::CombinatorialLaplacian, 'C').example, "D4");
}

TEST(Verifier, PreservedCellsAreRandomTested) {
  for (const auto& c : tables().cells) {
    if (c.expected != Verdict::Preserved) {
      EXPECT_EQ(c.random_trials, 0u);
      continue;
    }
    EXPECT_EQ(c.random_trials, TableOptions{}.random_trials) << kind_name(c.row) << " " << c.column;
    EXPECT_EQ(c.random_failures, 0u);
  }
}

TEST(Verifier, CsvFormat) {
  std::string csv = format_tables_csv(tables());
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "table,row,col,verdict,expected,pass");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5);
    EXPECT_EQ(line.substr(line.size() - 4), "true");
  }
  EXPECT_EQ(rows, 150u);
  EXPECT_NE(csv.find("1,normalized-laplacian,S,NotApplicable,NotApplicable,true"), std::string::npos);
  std::string text = format_tables_text(tables());
  EXPECT_NE(text.find("150/150 cells pass"), std::string::npos);
}
