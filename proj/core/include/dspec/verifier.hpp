#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dspec/digraph.hpp"
#include "dspec/matrices.hpp"
#include "dspec/moves.hpp"
#include "dspec/spectra.hpp"

namespace dspec {

enum class Verdict { Preserved, NotPreserved, NotApplicable };
std::string_view to_string(Verdict v);

struct PreservationResult {
  std::string digraph;  // label of the input digraph, may be empty
  MoveApplication move;
  MatrixKind kind{};
  Verdict verdict = Verdict::NotApplicable;
  std::optional<SpectrumReport> before;
  std::optional<SpectrumReport> after;
};

// Applies the move (precondition enforced) and compares nonzero spectra. Perron kinds on a pair
// where either side is not strongly connected give NotApplicable.
PreservationResult preservation_check(const Digraph& d, const MoveApplication& m, MatrixKind kind,
                                      std::string label = {});

// One of the worked examples: a base digraph and the moves applied to it. Each derived digraph
// has a golden transcription in the corpus.
struct NamedMove {
  std::string label;      // e.g. "D1^(O)"
  std::string move_text;  // applied to the base
  std::string golden;     // corpus entry
};

struct PaperExample {
  std::string id;    // "D1", "D2prime", ...
  std::string base;  // corpus entry of the base digraph
  std::string label; // display label of the base digraph
  std::vector<NamedMove> moves;
};

const std::vector<PaperExample>& paper_examples();
// Accepts the ids of paper_examples(); throws UnknownIdentifier otherwise.
const PaperExample& paper_example(std::string_view id);

// D_m: the 2-cycle w1 <-> w2 with m extra sources v_i, each with one edge to w1 and one to w2.
Digraph dm_digraph(std::size_t m);

struct CheckResult {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct ExampleReport {
  std::string id;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Ids: D0..D5, D2prime, Dm(k) for k >= 0, and Dm (k = 0..10).
ExampleReport reproduce_example(std::string_view id);
std::vector<std::string> example_ids();

struct TableCell {
  int table = 1;  // 1: general digraphs, 2: strongly connected
  MatrixKind row{};
  char column = 'S';  // S R O I C P
  std::string example;  // digraph the cell is checked on
  std::string move_text;
  Verdict expected = Verdict::NotApplicable;
  Verdict verdict = Verdict::NotApplicable;
  std::size_t random_trials = 0;  // extra random checks run for Preserved cells
  std::size_t random_failures = 0;
  std::string error;  // set if the check threw
  bool pass() const { return error.empty() && verdict == expected && random_failures == 0; }
};

struct TableOptions {
  std::size_t random_trials = 20;
  std::uint64_t seed = 20240607;
};

struct TableReport {
  std::vector<TableCell> cells;
  bool passed() const;
};

TableReport theorem_tables(const TableOptions& options = {});
// The verdict predicted for a cell.
Verdict expected_verdict(int table, MatrixKind row, char column);

// Both grids followed by a pass count.
std::string format_tables_text(const TableReport& r);
// Header plus one "table,row,col,verdict,expected,pass" line per cell.
std::string format_tables_csv(const TableReport& r);

// Nonzero multiset of a is contained in that of b (exact, with multiplicity).
bool nonzero_contained(const CharPoly& a, const CharPoly& b);

}  // namespace dspec
