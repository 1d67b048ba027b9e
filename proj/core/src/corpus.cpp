#include "dspec/corpus.hpp"

#include "dspec/error.hpp"

namespace dspec::corpus {

std::string_view text(std::string_view name) {
  for (const auto& e : entries())
    if (name == e.name) return e.text;
  throw UnknownIdentifier("no corpus digraph named '" + std::string(name) + "'");
}

Digraph load(std::string_view name) { return parse_digraph(text(name)); }

}  // namespace dspec::corpus
