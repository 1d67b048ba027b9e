#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dspec/digraph.hpp"
#include "dspec/error.hpp"

namespace dspec {

namespace move {

struct S {
  std::string vertex;
};
// Adjoin a source `new_vertex` with one edge to each listed target (repeats allowed).
struct SInverse {
  std::string new_vertex;
  std::vector<std::string> targets;
};
struct R {
  std::string vertex;
};
// Subdivide the listed parallel edges u->w through a new vertex.
struct RInverse {
  std::string new_vertex;
  std::vector<std::string> edges;
};
// Out-split: partition of s^-1(v).
struct O {
  std::string vertex;
  std::vector<std::vector<std::string>> partition;
};
// In-split: partition of r^-1(v).
struct I {
  std::string vertex;
  std::vector<std::vector<std::string>> partition;
};
struct C {
  std::string vertex;
  bool force = false;
};
struct CSet {
  std::vector<std::string> vertices;
  bool force = false;
};
struct P {
  std::string vertex;
};

}  // namespace move

using MoveApplication =
    std::variant<move::S, move::SInverse, move::R, move::RInverse, move::O, move::I, move::C, move::CSet, move::P>;

enum class MoveKind { S, SInverse, R, RInverse, O, I, C, CSet, P };

MoveKind kind_of(const MoveApplication& m);
std::string_view to_string(MoveKind k);

enum class Clause {
  NotSource,            // S: vertex receives an edge
  NotRegular,           // S, R, C: vertex emits no edge
  OutEdgeNotUnique,     // R: |s^-1(v_r)| != 1
  InSourceNotUnique,    // R: s(r^-1(v_r)) is not a single vertex
  InSourceIsVertex,     // R: the unique in-source is v_r itself
  IsSink,               // O
  IsSource,             // I
  InvalidPartition,     // O, I
  TooFewReturnPaths,    // C
  NoLoop,               // P
  OtherReturnPath,      // P: v supports a return path besides one loop
  LoopWithoutExit,      // P
  NeighbourNotEligible, // P: some w in S fails the Move (C) hypotheses
  NoNeighbours,         // P: S is empty
  IdentifierInUse,      // S^-1, R^-1
  EmptyTargets,         // S^-1
  EmptyEdgeSet,         // R^-1
  EdgesNotParallel,     // R^-1
  RepeatedEdge,         // R^-1
  RepeatedVertex,       // C_set
};

std::string_view to_string(Clause c);

struct PreconditionViolation {
  MoveKind move;
  Clause clause;
  std::string detail;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(PreconditionViolation v)
      : Error(std::string(to_string(v.move)) + ": " + v.detail), violation_(std::move(v)) {}
  const PreconditionViolation& violation() const { return violation_; }

 private:
  PreconditionViolation violation_;
};

// nullopt means the move applies. Unknown vertex/edge ids throw UnknownIdentifier.
std::optional<PreconditionViolation> check_precondition(const Digraph& d, const MoveApplication& m);

// Checks the precondition (throwing PreconditionError) and applies the move.
Digraph apply_move(const Digraph& d, const MoveApplication& m);

Digraph move_s(const Digraph& d, std::string_view v_s);
Digraph move_s_inverse(const Digraph& d, std::string_view new_vertex, const std::vector<std::string>& targets);
Digraph move_r(const Digraph& d, std::string_view v_r);
Digraph move_r_inverse(const Digraph& d, std::string_view new_vertex, const std::vector<std::string>& edges);
Digraph move_o(const Digraph& d, std::string_view v, const std::vector<std::vector<std::string>>& partition);
Digraph move_i(const Digraph& d, std::string_view v, const std::vector<std::vector<std::string>>& partition);
Digraph move_c(const Digraph& d, std::string_view v, bool force = false);
Digraph move_c_set(const Digraph& d, const std::vector<std::string>& vertices, bool force = false);
Digraph move_p(const Digraph& d, std::string_view v);

// Text form used by the CLI:
//   S v | Sinv new {t1,t2} | R v | Rinv new {e1} | O v {e1,e2}{e3} | I v {..}{..}
//   C v | C! v | CS {v1,v2} | CS! {v1,v2} | P v
// Throws ParseError (line 0) on malformed input.
MoveApplication parse_move(std::string_view text);
std::string to_string(const MoveApplication& m);

// Order-insensitive equality of vertex names plus a bijection between edge sets that
// preserves endpoints. Used for "up to edge renaming" round trips.
bool equal_up_to_edge_renaming(const Digraph& a, const Digraph& b);

}  // namespace dspec
