#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slat/directsum.hpp"
#include "slat/semilattice.hpp"

namespace slat {

// All join-semilattices on n elements up to isomorphism, presented by their
// canonical tables in ascending table order.  Generation walks naturally
// labeled structures (every element's strict down-set precedes it) and prunes
// any prefix in which two elements acquire a second minimal upper bound,
// which can never be repaired by later elements.  Throws CapExceeded when n
// is outside 1..enumerate_cap().  The parallel variant distributes the
// canonicalization of labeled tables across threads; results are identical.
std::vector<Semilattice> enumerate_semilattices(int n);
std::vector<Semilattice> enumerate_semilattices_serial(int n);

// Nonempty join-closed subsets, ascending in bitmask encoding (bit x set
// means element x included); each subset is an ascending element list.
std::vector<std::vector<int>> join_closed_subsets(const Semilattice& a);

// Outcome of a successful independence search: a structure and a summand
// pair on which exactly one axiom fails.
struct Witness {
  Semilattice a;
  SummandPair sp;
  std::string failed_axiom;
  AxiomReport report;
};

// Smallest witness for the independence of `axiom` from the remaining four:
// scans carriers of size 1..max_n in corpus order, base elements ascending,
// then summand subsets in bitmask order, and returns the first candidate
// where `axiom` fails while the other four hold.  Axiom names as in
// axiom_names(); throws UnknownAxiom otherwise.  The parallel variant scans
// structures of one size concurrently and keeps the earliest hit.
std::optional<Witness> independence_search(const std::string& axiom, int max_n);
std::optional<Witness> independence_search_serial(const std::string& axiom,
                                                  int max_n);

}  // namespace slat
