#pragma once

#include <vector>

#include "slat/congruence.hpp"
#include "slat/directsum.hpp"
#include "slat/semilattice.hpp"

namespace slat {

// Which complementary pair to split on when several nontrivial ones exist.
// MinDelta takes a pair whose second quotient is smallest, ties broken by
// canonical pair order; First/Last take the extremes of that order.
enum class PairStrategy { MinDelta, First, Last };

// A complete decomposition into directly indecomposable factors.  `iso` sends
// each element to its mixed-radix coordinate tuple over `factors` (leftmost
// factor most significant), an isomorphism onto the iterated product.  The
// factor list is sorted by canonical table, so isomorphic inputs factor into
// identically presented lists.
struct Factorization {
  std::vector<Semilattice> factors;
  ElementMap iso;
  int base_c = 0;
};

// Splits recursively along complementary congruence pairs of the quotients,
// carrying the base element through the class maps.  A structure with no
// nontrivial pair is returned as its own single factor.  Throws CapExceeded
// past the size cap.
Factorization factorize(const Semilattice& a, int c,
                        PairStrategy strategy = PairStrategy::MinDelta);

// Left fold of direct_product over the list; mixed-radix indexing matches
// Factorization::iso.  The list must be nonempty.
Semilattice iterated_product(const std::vector<Semilattice>& factors);

// Join of second summands across two decompositions of the same structure at
// the same base element: the first decomposition's coordinates pull the
// second's lower summand back to {x : pi1(x) in pi1(J2)}.  Paired with the
// meet of the upper summands this refines the two decompositions into one.
struct RefineResult {
  std::vector<int> joined;  // i2 of first joined with i2 of second
  std::vector<int> met;     // i1 of first intersected with i1 of second
  bool verdict = false;     // the refined pair decomposes the structure again
  AxiomReport report;
};

// Both arguments must decompose `a` (NotADirectSum otherwise) and share the
// base element (Error otherwise).
RefineResult refine_join(const Semilattice& a, const SummandPair& first,
                         const SummandPair& second);

// The congruences occurring in complementary factor pairs, ordered by
// refinement, form a Boolean algebra: bounded by the identity and full
// partitions, pairwise meets/joins exist inside the set, distributive, and
// complemented.  Returns true when all of that holds.
bool factor_congruence_boolean_check(const Semilattice& a);

}  // namespace slat
