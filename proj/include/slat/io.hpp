#pragma once

#include <string>
#include <vector>

#include "slat/semilattice.hpp"

namespace slat {

// Line-oriented presentation of a structure.  '#' starts a comment, blank
// lines are ignored.  The first line is `n <count>`, optionally followed by
// `elements <name>...` (n unique tokens).  The body is either
//   join            followed by n rows of n indices (the join table), or
//   cover i j       one line per covering; j covers i (zero or more lines).
// A join-table body is validated like any table.  A cover body must be
// acyclic (ValidationError) and every pair of elements must have a least
// upper bound (NoJoinExists); the join table is then derived.  Malformed
// text raises SyntaxError with 1-based line and column.
Semilattice parse_slat(const std::string& text);

// Join-table form with names when present.  parse_slat(emit_slat(a)) == a,
// and the bytes are identical on a second emit.
std::string emit_slat(const Semilattice& a);

// Hasse diagram in DOT, bottom-up ranks, covers as edges sorted by endpoint
// pair, nodes labeled by element names.  Each group becomes a cluster
// referencing its member nodes.  Byte-for-byte deterministic.
std::string emit_dot(const Semilattice& a,
                     const std::vector<std::vector<int>>& groups = {});

}  // namespace slat
