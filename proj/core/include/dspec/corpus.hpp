#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dspec/digraph.hpp"

namespace dspec::corpus {

// Contents of corpus/*.dg, embedded at build time.
struct Entry {
  const char* name;  // file stem, e.g. "d1_c"
  const char* text;
};

const std::vector<Entry>& entries();

// Throws UnknownIdentifier for an unknown name.
std::string_view text(std::string_view name);
Digraph load(std::string_view name);

}  // namespace dspec::corpus
