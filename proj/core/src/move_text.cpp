#include <cctype>

#include "dspec/moves.hpp"

namespace dspec {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view t) : t_(t) {}

  void skip_ws() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ == t_.size();
  }
  bool peek_brace() {
    skip_ws();
    return i_ < t_.size() && t_[i_] == '{';
  }

  std::string word(const char* what) {
    skip_ws();
    std::size_t j = i_;
    while (j < t_.size() && !std::isspace(static_cast<unsigned char>(t_[j])) && t_[j] != '{' && t_[j] != '}' &&
           t_[j] != ',')
      ++j;
    if (j == i_) fail(std::string("expected ") + what);
    std::string w(t_.substr(i_, j - i_));
    i_ = j;
    return w;
  }

  // {a,b,c}; whitespace around ids is ignored, {} gives an empty list.
  std::vector<std::string> group() {
    skip_ws();
    if (i_ >= t_.size() || t_[i_] != '{') fail("expected '{'");
    ++i_;
    std::vector<std::string> out;
    skip_ws();
    if (i_ < t_.size() && t_[i_] == '}') {
      ++i_;
      return out;
    }
    while (true) {
      out.push_back(word("identifier"));
      skip_ws();
      if (i_ >= t_.size()) fail("unterminated '{'");
      if (t_[i_] == ',') {
        ++i_;
        continue;
      }
      if (t_[i_] == '}') {
        ++i_;
        return out;
      }
      fail("expected ',' or '}'");
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "move text '" + std::string(t_) + "': " + what);
  }

 private:
  std::string_view t_;
  std::size_t i_ = 0;
};

std::string join_group(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += xs[k];
  }
  return out + "}";
}

}  // namespace

MoveApplication parse_move(std::string_view text) {
  Lexer lx(text);
  std::string kw = lx.word("move name");
  MoveApplication m;
  auto partition = [&] {
    std::vector<std::vector<std::string>> blocks;
    while (lx.peek_brace()) blocks.push_back(lx.group());
    if (blocks.empty()) lx.fail("expected at least one partition block");
    return blocks;
  };
  if (kw == "S") {
    m = move::S{lx.word("vertex")};
  } else if (kw == "Sinv") {
    std::string v = lx.word("new vertex");
    m = move::SInverse{v, lx.group()};
  } else if (kw == "R") {
    m = move::R{lx.word("vertex")};
  } else if (kw == "Rinv") {
    std::string v = lx.word("new vertex");
    m = move::RInverse{v, lx.group()};
  } else if (kw == "O") {
    std::string v = lx.word("vertex");
    m = move::O{v, partition()};
  } else if (kw == "I") {
    std::string v = lx.word("vertex");
    m = move::I{v, partition()};
  } else if (kw == "C" || kw == "C!") {
    m = move::C{lx.word("vertex"), kw == "C!"};
  } else if (kw == "CS" || kw == "CS!") {
    m = move::CSet{lx.group(), kw == "CS!"};
  } else if (kw == "P") {
    m = move::P{lx.word("vertex")};
  } else {
    lx.fail("unknown move '" + kw + "' (expected S, Sinv, R, Rinv, O, I, C, C!, CS, CS!, P)");
  }
  if (!lx.at_end()) lx.fail("trailing text");
  return m;
}

std::string to_string(const MoveApplication& m) {
  struct Printer {
    std::string operator()(const move::S& x) const { return "S " + x.vertex; }
    std::string operator()(const move::SInverse& x) const { return "Sinv " + x.new_vertex + " " + join_group(x.targets); }
    std::string operator()(const move::R& x) const { return "R " + x.vertex; }
    std::string operator()(const move::RInverse& x) const { return "Rinv " + x.new_vertex + " " + join_group(x.edges); }
    std::string operator()(const move::O& x) const { return "O " + x.vertex + " " + blocks(x.partition); }
    std::string operator()(const move::I& x) const { return "I " + x.vertex + " " + blocks(x.partition); }
    std::string operator()(const move::C& x) const { return (x.force ? "C! " : "C ") + x.vertex; }
    std::string operator()(const move::CSet& x) const { return (x.force ? "CS! " : "CS ") + join_group(x.vertices); }
    std::string operator()(const move::P& x) const { return "P " + x.vertex; }

    static std::string blocks(const std::vector<std::vector<std::string>>& p) {
      std::string out;
      for (const auto& b : p) out += join_group(b);
      return out;
    }
  };
  return std::visit(Printer{}, m);
}

}  // namespace dspec
