#pragma once

#include <optional>
#include <vector>

#include "slat/semilattice.hpp"

namespace slat {

// A partition of a carrier in canonical form: elements ascending inside each
// block, blocks ordered by least element.  Block indices then coincide with
// a restricted-growth labeling of the elements.  The structure itself is just
// a partition; join-compatibility is a property checked against a semilattice.
class Congruence {
 public:
  // Throws NotAPartition unless the blocks are nonempty, disjoint and cover
  // {0, ..., n-1}.
  static Congruence from_blocks(int n, std::vector<std::vector<int>> blocks);
  // Any labeling of elements by classes; labels are renumbered by first
  // occurrence.
  static Congruence from_class_vector(const std::vector<int>& classes);

  static Congruence identity(int n);  // all blocks singletons
  static Congruence full(int n);      // one block

  int carrier_size() const { return static_cast<int>(class_of_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int class_of(int x) const { return class_of_[x]; }
  bool same(int x, int y) const { return class_of_[x] == class_of_[y]; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& class_vector() const { return class_of_; }

  bool operator==(const Congruence&) const = default;

  // every u-block contained in some v-block
  static bool refines(const Congruence& u, const Congruence& v);
  // ordering used for canonical lists: block count, then class vector
  static bool canonical_less(const Congruence& u, const Congruence& v);

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> class_of_;
};

struct CongruenceViolation {
  int x, y, z;  // x ~ y but join(x,z) !~ join(y,z)
};

// First violation in scan order (x, y, z ascending), or nullopt when the
// partition is compatible with join.
std::optional<CongruenceViolation> congruence_violation(const Semilattice& a,
                                                        const Congruence& p);
bool is_congruence(const Semilattice& a, const Congruence& p);

// All join-compatible partitions, canonically ordered (block count ascending,
// class vector lexicographic).  The full and identity partitions are always
// present.  Throws CapExceeded past the size cap.  The parallel variant
// partitions candidate checking across threads; results are identical.
std::vector<Congruence> all_congruences(const Semilattice& a);
std::vector<Congruence> all_congruences_serial(const Semilattice& a);

struct QuotientResult {
  Semilattice s;
  // element -> block index; a join homomorphism onto the quotient
  ElementMap class_map;
};

// Throws NotACongruence when the partition is not join-compatible.
QuotientResult quotient(const Semilattice& a, const Congruence& th);

// A pair of congruences whose natural map a -> (a mod second, a mod first)
// is an isomorphism onto the product of the quotients.
struct CongruencePair {
  Congruence theta;
  Congruence delta;
  // into direct_product(quotient(a, delta).s, quotient(a, theta).s)
  ElementMap natural_map;
};

bool is_complementary_pair(const Semilattice& a, const Congruence& theta,
                           const Congruence& delta);

// All ordered pairs (theta, delta) from all_congruences(a) whose natural map
// is bijective, in lexicographic order of their positions in that list.
// Always contains (identity, full) and (full, identity).
std::vector<CongruencePair> complementary_factor_pairs(const Semilattice& a);

}  // namespace slat
