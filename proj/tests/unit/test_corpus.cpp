#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "dspec/corpus.hpp"
#include "dspec/error.hpp"
#include "dspec/verifier.hpp"

using namespace dspec;

namespace fs = std::filesystem;

TEST(Corpus, EmbeddedTextMatchesFiles) {
  std::set<std::string> on_disk;
  for (const auto& p : fs::directory_iterator(DSPEC_CORPUS_DIR)) {
    if (p.path().extension() != ".dg") continue;
    on_disk.insert(p.path().stem().string());
    std::ifstream f(p.path());
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(corpus::text(p.path().stem().string()), ss.str()) << p.path();
  }
  std::set<std::string> embedded;
  for (const auto& e : corpus::entries()) embedded.insert(e.name);
  EXPECT_EQ(on_disk, embedded);
}

TEST(Corpus, EveryEntryParsesAndMatchesReadFile) {
  for (const auto& e : corpus::entries()) {
    Digraph d = corpus::load(e.name);
    EXPECT_EQ(d, read_digraph_file(std::string(DSPEC_CORPUS_DIR) + "/" + e.name + ".dg"));
  }
  EXPECT_THROW(corpus::load("nope"), UnknownIdentifier);
}

TEST(Corpus, EveryExampleDigraphIsPresent) {
  for (const auto& ex : paper_examples()) {
    EXPECT_NO_THROW(corpus::load(ex.base));
    for (const auto& m : ex.moves) EXPECT_NO_THROW(corpus::load(m.golden)) << m.golden;
  }
}

TEST(Corpus, ShapesOfSelectedEntries) {
  Digraph d2p = corpus::load("d2prime_p");
  EXPECT_EQ(d2p.vertex_count(), 8u);
  Digraph d4r = corpus::load("d4_r");
  EXPECT_EQ(d4r.vertex_count(), 1u);
  EXPECT_EQ(d4r.edge_count(), 2u);
  Digraph d5r = corpus::load("d5_r");
  EXPECT_EQ(d5r.vertex_count(), 2u);
  EXPECT_EQ(d5r.edge_count(), 2u);
}
