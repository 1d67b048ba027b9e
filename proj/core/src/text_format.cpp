#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dspec/digraph.hpp"
#include "dspec/error.hpp"

namespace dspec {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  DigraphBuilder b;
  bool seen_vertices = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') {
      if (end == text.size()) break;
      continue;
    }
    try {
      if (tokens[0] == "vertices") {
        if (seen_vertices) throw ParseError(line_no, "second 'vertices' line");
        seen_vertices = true;
        for (std::size_t i = 1; i < tokens.size(); ++i) b.add_vertex(tokens[i]);
      } else if (tokens[0] == "edge") {
        if (!seen_vertices) throw ParseError(line_no, "'edge' before the 'vertices' line");
        if (tokens.size() != 4) throw ParseError(line_no, "expected 'edge <id> <source> <range>'");
        b.add_edge(tokens[1], tokens[2], tokens[3]);
      } else {
        throw ParseError(line_no, "unrecognised line starting with '" + tokens[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (end == text.size()) break;
  }
  if (!seen_vertices) throw ParseError(0, "missing 'vertices' line");
  return std::move(b).build();
}

std::string to_text(const Digraph& d) {
  std::string out = "vertices";
  for (const auto& v : d.vertices()) {
    out += ' ';
    out += v;
  }
  out += '\n';
  for (const Edge& e : d.edges()) {
    out += "edge " + e.id + ' ' + d.vertex_name(e.source) + ' ' + d.vertex_name(e.range) + '\n';
  }
  return out;
}

std::string to_dot(const Digraph& d) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& v : d.vertices()) os << "  " << dot_quote(v) << ";\n";
  for (const Edge& e : d.edges()) {
    os << "  " << dot_quote(d.vertex_name(e.source)) << " -> " << dot_quote(d.vertex_name(e.range))
       << " [label=" << dot_quote(e.id) << "];\n";
  }
  os << "}\n";
  return os.str();
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_digraph(buf.str());
}

}  // namespace dspec
