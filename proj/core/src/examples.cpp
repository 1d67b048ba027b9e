#include <charconv>

#include "dspec/corpus.hpp"
#include "dspec/error.hpp"
#include "dspec/expectation.hpp"
#include "dspec/verifier.hpp"

namespace dspec {

namespace {

using K = MatrixKind;

// One listed spectrum per digraph of an example: index 0 is the base, then one per move.
// nullptr marks a digraph the example does not list for that kind.
struct SpectrumRow {
  MatrixKind kind;
  std::vector<const char*> values;
};

struct ExampleData {
  PaperExample example;
  std::vector<SpectrumRow> spectra;
};

const std::vector<ExampleData>& registry() {
  static const std::vector<ExampleData> data = [] {
    std::vector<ExampleData> out;

    out.push_back({{"D1", "d1", "D1",
                    {{"D1^(S)", "Sinv v_s {v1,v2,v3}", "d1_s"},
                     {"D1^(R)", "Rinv v_r {loop2a}", "d1_r"},
                     {"D1^(O)", "O v1 {loop1,e12}{e13a,e13b}", "d1_o"},
                     {"D1^(I)", "I v2 {loop2a,e12}{loop2b}", "d1_i"},
                     {"D1^(C)", "C v2", "d1_c"}}},
                   {
                       {K::Laplacian,
                        {"5,3,0", "6,4,4,0", "pm(7/2,1/2,17),5,0", "pm(4,1,2),2,0", "6,pm(4,1,2),0",
                         "~6.6262,5,~3.51514,~0.858664,0"}},
                       {K::Adjacency,
                        {"2,1,1", "2,1,1,0", "pm(1/2,1/2,5),1,1", "2,1,1,0", "2,1,1,0",
                         "~2.80194,~1.44504,1,1,~-0.24698"}},
                       {K::BinaryAdjacency,
                        {"1,1,1", "1,1,1,0", "pm(1/2,1/2,5),1,1", "1,1,1,0", "2,1,1,0", "pm(1,1,2),1,1,1"}},
                       {K::SymmetricAdjacency,
                        {"~10.0494,~1.719,~0.231548", "~12.7148,~1.74411,~0.541128,0",
                         "~8.73968,~1.46182,~0.684079,~0.114421", "pm(9/2,1/2,41),4,0",
                         "~10.8363,~1.86713,~0.296548,0", "~11.5864,~4.6524,~1.42213,~0.294867,~0.0442395"}},
                       {K::SymmetricBinaryAdjacency,
                        {"~5.04892,~0.643104,~0.307979", "~7.89167,~0.785825,~0.322504,0", "pm(3,2,2),1,1",
                         "4,pm(3/2,1/2,5),0", "~8.12071,~1.31922,~0.560067,0",
                         "~7.19584,~3.35194,~0.844535,~0.511755,~0.0959274"}},
                       {K::LineAdjacency,
                        {"2,1,1,0^5", "2,1,1,0^8", "pm(1/2,1/2,5),1,1,0^5", "2,1,1,0^6", "2,1,1,0^8",
                         "~2.80194,~1.44504,1,1,~-0.24698,0^9"}},
                       {K::Hermitian,
                        {"pm(1,1,3),1", "~3.22001,~-1.74108,~1.23136,~0.289713", "~2.86081,~1.2541,~-1.11491,0",
                         "~2.81361,~-1.34292,1,~0.529317", "~3.34292,~1.47068,~-0.813607,0", "3,2,-1,1,0"}},
                       {K::Skew,
                        {"pm(0,1,-6),0", "pm(0,3,-1),0,0", "pm(0,1,-6),0,0", "nested(0,-7/2,3/2,5)",
                         "nested(0,-7/2,3/2,5)", "pm(0,1,-6),0,0,0"}},
                       {K::BinarySkew,
                        {"pm(0,1,-3),0", "nested(0,-3,2,2)", "pm(0,1,-3),0,0", "pm(0,2,-1),0,0", "nested(0,-2,1,3)",
                         "pm(0,1,-3),0,0,0"}},
                       {K::SkewLaplacian,
                        {"pm(0,1,3),0", "pm(-1,1,3),2,0", "pm(0,1,3),0,0", "0^4", "pm(-1,1,3),2,0",
                         "pm(0,1,3),0,0,0"}},
                       {K::BinarySkewLaplacian, {"-1,1,0", "-2,2,0,0", "-1,1,0,0", "0^4", "-2,1,1,0", "-1,1,0,0,0"}},
                   }});

    out.push_back({{"D2", "d2", "D2", {{"D2^(P)", "P v1", "d2_p"}}},
                   {
                       {K::Laplacian, {"3,1,0", "~7.43874,~4.451,~3.15208,~0.958176,0"}},
                       {K::Adjacency, {"2,1,1", "~2.80194,~1.44504,1,1,~-0.24698"}},
                       {K::BinaryAdjacency, {"1,1,1", "pm(1,1,2),1,1,1"}},
                       {K::SymmetricAdjacency,
                        {"~6.15633,~1.3691,~0.474572", "~11.3293,~4.32428,~1.50561,~0.824316,~0.0164465"}},
                       {K::SymmetricBinaryAdjacency,
                        {"~3.24698,~1.55496,~0.198062", "~7.45504,~2.40912,~1.52115,~0.547884,~0.0668084"}},
                       {K::LineAdjacency, {"2,1,1,0^3", "~2.80194,~1.44504,1,1,~-0.24698,0^9"}},
                       {K::Hermitian, {"pm(1,1,2),1", "nested(1,5/2,1/2,17),1"}},
                       {K::Skew, {"pm(0,1,-2),0", "nested(0,-3,1,5),0"}},
                       {K::BinarySkew, {"pm(0,1,-2),0", "nested(0,-3/2,1/2,5),0"}},
                       {K::SkewLaplacian, {"pm(0,1,-1),0", "-1,1,0,0,0"}},
                       {K::BinarySkewLaplacian, {"pm(0,1,-1),0", "0^5"}},
                   }});

    out.push_back({{"D2prime", "d2prime", "D2'", {{"D2'^(P)", "P v1", "d2prime_p"}}},
                   {
                       {K::BinaryAdjacency, {"2,1,1,0", "pm(3/2,1/2,5),pm(1,1,2),pm(1/2,1/2,5),1,1"}},
                   }});

    out.push_back({{"D3", "d3", "D3",
                    {{"D3^(O)", "O v2 {e21,loop2a}{loop2b}", "d3_o"},
                     {"D3^(I)", "I v2 {e12,loop2a}{loop2b}", "d3_i"}}},
                   {
                       {K::BinaryAdjacency, {"pm(1/2,1/2,5)", "pm(1,1,2),0", "pm(1,1,2),0"}},
                       {K::NormalizedLaplacian, {"4/3,0", "pm(13/12,1/6,2),0", "pm(7/6,1/6,3),0"}},
                       {K::CombinatorialLaplacian, {"1/2,0", "pm(9/28,1/14,3),0", "pm(3/8,1/12,3),0"}},
                       {K::BinaryNormalizedLaplacian, {"3/2,0", "pm(13/12,1/6,2),0", "pm(7/6,1/6,3),0"}},
                       {K::BinaryCombinatorialLaplacian, {"2/3,0", "pm(9/28,1/14,3),0", "pm(3/8,1/12,3),0"}},
                   }});

    const char* d4c_a = "~2.35567,~1.47726,~-1.09529,~0.26236";
    const char* d4c_as = "~5.5492,~2.1823,~1.19967,~0.0688326";
    out.push_back({{"D4", "d4", "D4",
                    {{"D4^(R)", "R v2", "d4_r"},
                     {"D4^(O)", "O v1 {loop1}{e12}", "d4_o"},
                     {"D4^(I)", "I v1 {loop1}{e21}", "d4_i"},
                     {"D4^(C)", "C v2", "d4_c"}}},
                   {
                       {K::Laplacian, {"4,0", "0", "5,3,0", "5,3,0", "pm(4,2,2),4,0"}},
                       {K::Adjacency, {"pm(1/2,1/2,5)", "2", "pm(1/2,1/2,5),0", "pm(1/2,1/2,5),0", d4c_a}},
                       {K::BinaryAdjacency, {"pm(1/2,1/2,5)", "1", "pm(1/2,1/2,5),0", "pm(1/2,1/2,5),0", d4c_a}},
                       {K::SymmetricAdjacency, {"pm(3/2,1/2,5)", "4", "4,1,0", "4,1,0", d4c_as}},
                       {K::SymmetricBinaryAdjacency, {"pm(3/2,1/2,5)", "1", "4,1,0", "4,1,0", d4c_as}},
                       {K::LineAdjacency,
                        {"pm(1/2,1/2,5),0", "2,0", "pm(1/2,1/2,5),0,0,0", "pm(1/2,1/2,5),0,0,0",
                         "~2.35567,~1.47726,~-1.09529,~0.26236,0^5"}},
                       {K::Hermitian, {"pm(1/2,1/2,5)", "1", "pm(0,1,3),1", "pm(0,1,3),1", d4c_a}},
                       {K::Skew, {"0,0", "0", "pm(0,1,-2),0", "pm(0,1,-2),0", "0^4"}},
                       {K::BinarySkew, {"0,0", "0", "pm(0,1,-2),0", "pm(0,1,-2),0", "0^4"}},
                       {K::SkewLaplacian, {"0,0", "0", "pm(0,1,-1),0", "pm(0,1,-1),0", "0^4"}},
                       {K::BinarySkewLaplacian, {"0,0", "0", "pm(0,1,-1),0", "pm(0,1,-1),0", "0^4"}},
                       {K::NormalizedLaplacian, {"3/2,0", "0", "7/4,3/4,0", "7/4,3/4,0", "3/2,pm(7/12,1/12,13),0"}},
                       {K::BinaryNormalizedLaplacian,
                        {"3/2,0", "0", "7/4,3/4,0", "7/4,3/4,0", "3/2,pm(7/12,1/12,13),0"}},
                       {K::CombinatorialLaplacian, {"2/3,0", "0", "7/12,1/4,0", "7/12,1/4,0", "pm(2/9,1/9,2),2/9,0"}},
                       {K::BinaryCombinatorialLaplacian,
                        {"2/3,0", "0", "7/12,1/4,0", "7/12,1/4,0", "pm(2/9,1/9,2),2/9,0"}},
                   }});

    out.push_back({{"D5", "d5", "D5", {{"D5^(R)", "R v_r", "d5_r"}}},
                   {
                       {K::Skew, {"pm(0,1,-3),0", "0,0"}},
                       {K::BinarySkew, {"pm(0,1,-3),0", "0,0"}},
                       {K::SkewLaplacian, {"pm(0,1,-3),0", "0,0"}},
                       {K::BinarySkewLaplacian, {"pm(0,1,-3),0", "0,0"}},
                   }});

    out.push_back({{"D0", "d0", "D0", {}}, {{K::Laplacian, {"4,0"}}}});
    return out;
  }();
  return data;
}

const ExampleData& example_data(std::string_view id) {
  for (const auto& e : registry())
    if (e.example.id == id) return e;
  throw UnknownIdentifier("unknown example '" + std::string(id) + "'");
}

CheckResult check(std::string label, bool ok, std::string detail = {}) {
  return {std::move(label), ok, ok ? std::string() : std::move(detail)};
}

// Runs f and turns an exception into a failed check.
template <class F>
CheckResult guarded(const std::string& label, F f) {
  try {
    return f();
  } catch (const std::exception& ex) {
    return {label, false, ex.what()};
  }
}

CheckResult spectrum_check(const Digraph& d, const std::string& label, MatrixKind kind, const char* text) {
  std::string what = "Spec[" + std::string(kind_name(kind)) + "](" + label + ") = {" + text + "}";
  return guarded(what, [&] {
    auto m = match_spectrum(spectrum(d, kind), parse_expected(text));
    return check(what, m.ok, m.detail);
  });
}

IntegerMatrix dm_incidence_expected(std::size_t m) {
  IntegerMatrix mm(2 + m, 2 + 2 * m);
  mm(0, 0) = 1;
  mm(0, 1) = -1;
  mm(1, 0) = -1;
  mm(1, 1) = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t c = 2 + 2 * i;
    mm(0, c) = -1;
    mm(1, c + 1) = -1;
    mm(2 + i, c) = 1;
    mm(2 + i, c + 1) = 1;
  }
  return mm;
}

IntegerMatrix dm_laplacian_expected(std::size_t m) {
  IntegerMatrix l(2 + m, 2 + m);
  long k = static_cast<long>(m);
  l(0, 0) = k + 2;
  l(1, 1) = k + 2;
  l(0, 1) = -2;
  l(1, 0) = -2;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t w = 0; w < 2; ++w) {
      l(w, 2 + i) = -1;
      l(2 + i, w) = -1;
    }
    l(2 + i, 2 + i) = 2;
  }
  return l;
}

std::string dm_spectrum_text(std::size_t m) {
  if (m == 0) return "4,0";
  std::string s = std::to_string(m + 4) + "," + std::to_string(m + 2) + ",";
  if (m > 1) s += "2^" + std::to_string(m - 1) + ",";
  return s + "0";
}

void add_dm_checks(std::size_t m, std::vector<CheckResult>& checks) {
  std::string name = "D_" + std::to_string(m);
  Digraph d = dm_digraph(m);
  checks.push_back(guarded("M(" + name + ") block form", [&] {
    return check("M(" + name + ") block form", to_integer_matrix(incidence_matrix(d)) == dm_incidence_expected(m),
                 format_grid(AnyMatrix(incidence_matrix(d))));
  }));
  checks.push_back(guarded("Delta(" + name + ") block form", [&] {
    return check("Delta(" + name + ") block form",
                 to_integer_matrix(laplacian_matrix(d)) == dm_laplacian_expected(m),
                 format_grid(AnyMatrix(laplacian_matrix(d))));
  }));
  std::string text = dm_spectrum_text(m);
  checks.push_back(spectrum_check(d, name, MatrixKind::Laplacian, text.c_str()));
  if (m >= 1) {
    std::string label = "S at v" + std::to_string(m) + " on " + name + " gives D_" + std::to_string(m - 1);
    checks.push_back(guarded(label, [&] {
      return check(label, move_s(d, "v" + std::to_string(m)) == dm_digraph(m - 1), to_text(move_s(d, "v" + std::to_string(m))));
    }));
  }
}

std::optional<std::size_t> parse_dm(std::string_view id) {
  if (id.size() < 5 || id.substr(0, 3) != "Dm(" || id.back() != ')') return std::nullopt;
  std::string_view num = id.substr(3, id.size() - 4);
  std::size_t k = 0;
  auto res = std::from_chars(num.data(), num.data() + num.size(), k);
  if (res.ec != std::errc() || res.ptr != num.data() + num.size()) return std::nullopt;
  return k;
}

}  // namespace

const std::vector<PaperExample>& paper_examples() {
  static const std::vector<PaperExample> list = [] {
    std::vector<PaperExample> out;
    for (const auto& e : registry()) out.push_back(e.example);
    return out;
  }();
  return list;
}

const PaperExample& paper_example(std::string_view id) { return example_data(id).example; }

Digraph dm_digraph(std::size_t m) {
  DigraphBuilder b;
  b.add_vertex("w1");
  b.add_vertex("w2");
  for (std::size_t i = 1; i <= m; ++i) b.add_vertex("v" + std::to_string(i));
  b.add_edge("e1", "w1", "w2");
  b.add_edge("e2", "w2", "w1");
  for (std::size_t i = 1; i <= m; ++i) {
    std::string v = "v" + std::to_string(i);
    b.add_edge("f1_" + std::to_string(i), v, "w1");
    b.add_edge("f2_" + std::to_string(i), v, "w2");
  }
  return std::move(b).build();
}

bool ExampleReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

std::vector<std::string> example_ids() {
  std::vector<std::string> ids;
  for (const auto& e : registry()) ids.push_back(e.example.id);
  std::sort(ids.begin(), ids.end());
  ids.push_back("Dm");
  return ids;
}

ExampleReport reproduce_example(std::string_view id) {
  ExampleReport report;
  report.id = std::string(id);
  auto& checks = report.checks;

  if (id == "Dm") {
    for (std::size_t m = 0; m <= 10; ++m) add_dm_checks(m, checks);
    return report;
  }
  if (auto m = parse_dm(id)) {
    add_dm_checks(*m, checks);
    return report;
  }

  const ExampleData& data = example_data(id);
  const PaperExample& ex = data.example;
  Digraph base = corpus::load(ex.base);

  std::vector<std::optional<Digraph>> digraphs{base};
  std::vector<std::string> labels{ex.label};
  for (const auto& nm : ex.moves) {
    labels.push_back(nm.label);
    std::string what = nm.label + " from '" + nm.move_text + "' matches " + nm.golden;
    try {
      Digraph out = apply_move(base, parse_move(nm.move_text));
      Digraph golden = corpus::load(nm.golden);
      checks.push_back(check(what, out == golden, "got\n" + to_text(out)));
      digraphs.emplace_back(std::move(out));
    } catch (const std::exception& e) {
      checks.push_back({what, false, e.what()});
      digraphs.emplace_back(std::nullopt);
    }
  }

  for (const auto& row : data.spectra) {
    for (std::size_t i = 0; i < row.values.size() && i < digraphs.size(); ++i) {
      if (!row.values[i] || !digraphs[i]) continue;
      checks.push_back(spectrum_check(*digraphs[i], labels[i], row.kind, row.values[i]));
    }
  }

  if (id == "D0") {
    checks.push_back(check("D0 equals D_m at m = 0", base == dm_digraph(0)));
    IntegerMatrix m(2, 2), l(2, 2);
    m(0, 0) = 1, m(0, 1) = -1, m(1, 0) = -1, m(1, 1) = 1;
    l(0, 0) = 2, l(0, 1) = -2, l(1, 0) = -2, l(1, 1) = 2;
    checks.push_back(check("M(D0)", to_integer_matrix(incidence_matrix(base)) == m));
    checks.push_back(check("Delta(D0)", to_integer_matrix(laplacian_matrix(base)) == l));
  }

  if (id == "D2prime" && digraphs[1]) {
    std::string what = "nonzero Spec[binary-adjacency](D2') not contained in that of D2'^(P)";
    checks.push_back(guarded(what, [&] {
      auto a = spectrum(base, MatrixKind::BinaryAdjacency);
      auto b = spectrum(*digraphs[1], MatrixKind::BinaryAdjacency);
      return check(what, !nonzero_contained(*a.exact, *b.exact), "contained");
    }));
  }
  return report;
}

}  // namespace dspec
