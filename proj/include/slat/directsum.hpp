#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slat/congruence.hpp"
#include "slat/semilattice.hpp"

namespace slat {

// Candidate decomposition data: a base element c together with two join-closed
// subsets.  The subsets play asymmetric roles only through their order.
struct SummandPair {
  int c = 0;
  std::vector<int> i1;
  std::vector<int> i2;
};

// Terms built from join and partial meet evaluate to an element or to
// "undefined"; an undefined subterm makes the whole term undefined.
using PartialElement = std::optional<int>;

PartialElement pjoin(const Semilattice& a, PartialElement x, PartialElement y);
PartialElement pmeet(const Semilattice& a, PartialElement x, PartialElement y);

// Equality of partial terms: both undefined, or both defined and equal.
inline bool eq3(PartialElement x, PartialElement y) { return x == y; }

// The coordinate relation tying x to the pair (x1, x2) relative to c.  All
// four conjuncts are equations between partial terms.
struct PhiWitness {
  bool dist = false;  // x = (x v x1) ^ (x v x2)
  bool p1 = false;    // x1 = (x v x1) ^ (c v x1)
  bool p2 = false;    // x2 = (x v x2) ^ (c v x2)
  bool join = false;  // x1 v x2 = x v c
  bool holds() const { return dist && p1 && p2 && join; }
};

PhiWitness eval_phi(const Semilattice& a, int c, int x1, int x2, int x);

// Outcome of one axiom scan.  When the axiom fails, `witness` holds the first
// offending tuple in ascending scan order; its layout per axiom:
//   Mod1:  {x, y, x1, x2}
//   Mod2:  {x, y, x1, x2, side}   side 1 or 2 selects the summand equation
//   Abs:   {x, y, z, side}        side 1: x,y from I1 and z from I2; side 2 swapped
//   exi:   {x1, x2}               no x satisfies phi
//   onto:  {x}                    no pair (x1, x2) satisfies phi
//   ori:   {x1, x2}               c is not below x1 v x2
struct AxiomVerdict {
  bool holds = true;
  std::vector<int> witness;
};

struct AxiomReport {
  AxiomVerdict mod1;
  AxiomVerdict mod2;
  AxiomVerdict abs;
  AxiomVerdict exi;
  AxiomVerdict onto;
  AxiomVerdict ori;  // consequence of the others; reported, not required
  bool direct_sum() const {
    return mod1.holds && mod2.holds && abs.holds && exi.holds && onto.holds;
  }
};

// Individual axiom scans.  Each validates the summand pair (join-closed,
// in-range) and throws NotSubsemilattice otherwise.
AxiomVerdict check_mod1(const Semilattice& a, const SummandPair& sp);
AxiomVerdict check_mod2(const Semilattice& a, const SummandPair& sp);
AxiomVerdict check_abs(const Semilattice& a, const SummandPair& sp);
AxiomVerdict check_exi(const Semilattice& a, const SummandPair& sp);
AxiomVerdict check_onto(const Semilattice& a, const SummandPair& sp);
AxiomVerdict check_ori(const Semilattice& a, const SummandPair& sp);

AxiomReport check_axioms(const Semilattice& a, const SummandPair& sp);

// Conjunction of the five defining axioms, with early exit.
bool is_direct_sum(const Semilattice& a, const SummandPair& sp);

// For a valid decomposition, the map (x1, x2) -> the unique x with
// phi(x1, x2, x), as an isomorphism from the product of the two induced
// subalgebras onto a.  Pair (i, j) means the i-th element of ascending i1
// with the j-th of ascending i2, at index i*|i2| + j.  Throws NotADirectSum
// when an axiom fails; InternalContradiction if uniqueness or bijectivity
// break even though the axioms held (a library bug by definition).
ElementMap build_isomorphism(const Semilattice& a, const SummandPair& sp);

// Coordinates of each element: x decomposes as phi(pi1[x], pi2[x], x).
struct SumProjections {
  std::vector<int> pi1;  // values lie in i1
  std::vector<int> pi2;  // values lie in i2
};

SumProjections projections(const Semilattice& a, const SummandPair& sp);

// Complementary congruence pair -> summand pair: the two classes of c.
// Throws NotComplementaryPair when the natural map is not bijective.
SummandPair map_I(const Semilattice& a, int c, const Congruence& theta,
                  const Congruence& delta);

// Decomposition -> complementary congruence pair: theta identifies elements
// with equal second coordinate, delta those with equal first coordinate.
CongruencePair map_K(const Semilattice& a, const SummandPair& sp);

// Axiom names accepted by the search interface, in report order.
const std::vector<std::string>& axiom_names();

namespace detail {
// Scan primitives that assume `sp` is already validated and sorted; used by
// the witness search, where re-validation would dominate the running time.
AxiomVerdict mod1_unchecked(const Semilattice& a, const SummandPair& sp);
AxiomVerdict mod2_unchecked(const Semilattice& a, const SummandPair& sp);
AxiomVerdict abs_unchecked(const Semilattice& a, const SummandPair& sp);
AxiomVerdict exi_unchecked(const Semilattice& a, const SummandPair& sp);
AxiomVerdict onto_unchecked(const Semilattice& a, const SummandPair& sp);
AxiomVerdict ori_unchecked(const Semilattice& a, const SummandPair& sp);
SummandPair normalized(const Semilattice& a, const SummandPair& sp);
}  // namespace detail

}  // namespace slat
