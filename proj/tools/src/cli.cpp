#include "dspec/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "dspec/cycles.hpp"
#include "dspec/error.hpp"
#include "dspec/spectra.hpp"
#include "dspec/verifier.hpp"

namespace dspec::cli {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

std::string kind_list() {
  std::string s;
  for (auto k : all_matrix_kinds) s += (s.empty() ? "" : ", ") + std::string(kind_name(k));
  return s;
}

// "all" or a single kind; throws InvalidArgument for anything else.
std::vector<MatrixKind> kinds_from(const std::string& text) {
  if (text == "all") return {all_matrix_kinds.begin(), all_matrix_kinds.end()};
  if (auto k = parse_kind(text)) return {*k};
  throw InvalidArgument("unknown kind '" + text + "' (expected all, " + kind_list() + ")");
}

int cmd_spectra(const std::string& file, const std::string& kind, std::ostream& out) {
  Digraph d = read_digraph_file(file);
  auto kinds = kinds_from(kind);
  bool sc = is_strongly_connected(d);
  for (auto k : kinds) {
    if (requires_strong_connectivity(k) && !sc) {
      if (kinds.size() == 1) throw NotStronglyConnected(std::string(kind_name(k)) + " needs a strongly connected digraph");
      out << kind_name(k) << "; NA (not strongly connected)\n";
      continue;
    }
    out << to_line(spectrum(d, k)) << "\n";
  }
  return kOk;
}

int cmd_matrix(const std::string& file, const std::string& kind, bool csv, std::ostream& out) {
  Digraph d = read_digraph_file(file);
  auto k = parse_kind(kind);
  if (!k) throw InvalidArgument("unknown kind '" + kind + "'");
  AnyMatrix m = build_matrix(d, *k);
  out << (csv ? format_csv(m) : format_grid(m));
  return kOk;
}

int cmd_move(const std::string& file, const std::string& move_text, const std::string& output, std::ostream& out) {
  Digraph d = read_digraph_file(file);
  Digraph result = apply_move(d, parse_move(move_text));
  if (output.empty()) {
    out << to_text(result);
  } else {
    std::ofstream f(output);
    if (!f) throw InvalidArgument("cannot write '" + output + "'");
    f << to_text(result);
  }
  return kOk;
}

int cmd_check(const std::string& file, const std::string& move_text, const std::string& kind, std::ostream& out) {
  Digraph d = read_digraph_file(file);
  MoveApplication m = parse_move(move_text);
  auto kinds = kinds_from(kind);
  for (auto k : kinds) {
    Verdict v = preservation_check(d, m, k).verdict;
    if (kinds.size() > 1) out << kind_name(k) << ": ";
    out << to_string(v) << "\n";
  }
  return kOk;
}

int cmd_cycles(const std::string& file, std::size_t order, std::ostream& out) {
  Digraph d = read_digraph_file(file);
  auto counts = count_cycles(d, order);
  for (std::size_t m = 1; m <= counts.order(); ++m) out << "N_" << m << "=" << counts[m].get_str() << "\n";
  return kOk;
}

int print_example(const ExampleReport& r, std::ostream& out) {
  for (const auto& c : r.checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.label << "\n";
    if (!c.passed && !c.detail.empty()) out << "     " << c.detail << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.passed;
  out << r.id << ": " << passed << "/" << r.checks.size() << " checks pass\n";
  return r.passed() ? kOk : kMismatch;
}

int cmd_paper(const std::string& example, bool tables, bool csv, std::size_t trials, std::ostream& out) {
  int code = kOk;
  bool all = example.empty() && !tables;
  if (!example.empty() || all) {
    std::vector<std::string> ids = all ? example_ids() : std::vector<std::string>{example};
    for (const auto& id : ids) code = std::max(code, print_example(reproduce_example(id), out));
  }
  if (tables || all) {
    TableOptions options;
    options.random_trials = trials;
    TableReport r = theorem_tables(options);
    out << (csv ? format_tables_csv(r) : format_tables_text(r));
    if (!r.passed()) code = kMismatch;
  }
  return code;
}

int cmd_export_dot(const std::string& file, std::ostream& out) {
  out << to_dot(read_digraph_file(file));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of directed multigraphs under graph moves"};
  app.require_subcommand(1);

  std::string file, kind = "all", move_text, output, example;
  std::size_t order = 10, trials = TableOptions{}.random_trials;
  bool tables = false, csv = false;

  auto* spectra = app.add_subcommand("spectra", "Print characteristic polynomials and eigenvalues");
  spectra->add_option("file", file, "Digraph file")->required();
  spectra->add_option("--kind", kind, "Matrix kind or 'all'");

  auto* matrix = app.add_subcommand("matrix", "Print one matrix of a digraph");
  matrix->add_option("file", file, "Digraph file")->required();
  matrix->add_option("--kind", kind, "Matrix kind")->required();
  matrix->add_flag("--csv", csv, "CSV rows instead of an aligned grid");

  auto* move = app.add_subcommand("move", "Apply a move and print the resulting digraph");
  move->add_option("file", file, "Digraph file")->required();
  move->add_option("--apply", move_text, "Move, e.g. \"O v1 {e1}{e2,e3}\"")->required();
  move->add_option("-o,--output", output, "Write the result here instead of stdout");

  auto* checkc = app.add_subcommand("check", "Is the nonzero spectrum preserved by a move?");
  checkc->add_option("file", file, "Digraph file")->required();
  checkc->add_option("--apply", move_text, "Move text")->required();
  checkc->add_option("--kind", kind, "Matrix kind or 'all'")->required();

  auto* cycles = app.add_subcommand("cycles", "Closed-walk counts N_1..N_M");
  cycles->add_option("file", file, "Digraph file")->required();
  cycles->add_option("-m", order, "Largest order M")->required()->check(CLI::PositiveNumber);

  auto* paper = app.add_subcommand("paper", "Reproduce the worked examples and the preservation tables");
  auto* ex_opt = paper->add_option("--example", example, "One example id (D0..D5, D2prime, Dm, Dm(k))");
  paper->add_flag("--tables", tables, "Only the preservation tables")->excludes(ex_opt);
  paper->add_flag("--csv", csv, "Tables as table,row,col,verdict,expected,pass lines");
  paper->add_option("--random-trials", trials, "Random checks per Preserved cell");

  auto* dot = app.add_subcommand("export-dot", "Graphviz output");
  dot->add_option("file", file, "Digraph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (spectra->parsed()) return cmd_spectra(file, kind, out);
    if (matrix->parsed()) return cmd_matrix(file, kind, csv, out);
    if (move->parsed()) return cmd_move(file, move_text, output, out);
    if (checkc->parsed()) return cmd_check(file, move_text, kind, out);
    if (cycles->parsed()) return cmd_cycles(file, order, out);
    if (paper->parsed()) return cmd_paper(example, tables, csv, trials, out);
    if (dot->parsed()) return cmd_export_dot(file, out);
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace dspec::cli
