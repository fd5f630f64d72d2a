#pragma once

#include <vector>

#include "slat/directsum.hpp"
#include "slat/semilattice.hpp"

namespace slat {

// Simplified decomposition criteria available when the base element is the
// least or the greatest element.  `applicable` is false when the required
// bound does not exist (then no verdicts are computed and `verdict` is
// false).  `ideals` reports whether the summands are closed downward (least
// case) respectively upward (greatest case); a consequence of `verdict`, kept
// separate because it is informative on failing pairs too.
struct BoundedReport {
  bool applicable = false;
  int c = -1;  // the bound that plays the base-element role

  AxiomVerdict abs;   // least case:    x ^ (y v z) = x ^ y,  witness {x, y, z, side}
  AxiomVerdict exi;   // greatest case: x1 v x2 = top,        witness {x1, x2}
  AxiomVerdict mod1;  // greatest case: (x1 ^ x2) v y = (y v x1) ^ (y v x2),
                      //                witness {x1, x2, y}
  AxiomVerdict onto;  // both: joins (resp. meets) of summand pairs exhaust the
                      //       carrier, witness {x}

  bool ideals = false;
  std::vector<int> ideals_witness;  // {x, u, side}: x in the summand, u its
                                    // unincluded neighbour below resp. above

  bool verdict = false;
};

// Criteria for c = least element: the absorption equation plus surjectivity
// of join.  Equivalent to the full axiom set at that base element.
BoundedReport check_zero_case(const Semilattice& a, const std::vector<int>& i1,
                              const std::vector<int>& i2);

// Criteria for c = greatest element: all cross joins reach the top, meets of
// summand pairs exist and exhaust the carrier, and the one modularity
// equation.  Equivalent to the full axiom set at that base element.
BoundedReport check_one_case(const Semilattice& a, const std::vector<int>& i1,
                             const std::vector<int>& i2);

}  // namespace slat
