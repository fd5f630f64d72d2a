#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slat/errors.hpp"

namespace slat {

// Size limits, overridable through the environment (read once per process):
//   SLAT_SIZE_CAP     carrier bound for congruence scans / factorization (default 10)
//   SLAT_ENUM_CAP     carrier bound for corpus enumeration (default 7)
//   SLAT_PRODUCT_CAP  carrier bound for direct products (default 4096)
namespace caps {
int size_cap();
int enumerate_cap();
int product_cap();
}  // namespace caps

// A finite join-semilattice on carrier {0, ..., n-1}, presented by its total
// join table.  Immutable after construction.  The induced order is
// x <= y iff x v y = y; binary meets are partial and cached at construction
// (entry -1 means the pair has no greatest common lower bound).
class Semilattice {
 public:
  // Checks index range, idempotence, commutativity and associativity, in that
  // order, and reports the first offending elements.  Optional names label
  // elements for presentation only.
  static Semilattice from_join_table(const std::vector<std::vector<int>>& table,
                                     std::vector<std::string> names = {});
  static Semilattice from_flat_table(int n, std::vector<int> table,
                                     std::vector<std::string> names = {});

  int size() const { return n_; }
  int join(int x, int y) const { return join_[x * n_ + y]; }
  bool leq(int x, int y) const { return join_[x * n_ + y] == y; }

  // Greatest common lower bound, when the set of common lower bounds has one.
  std::optional<int> meet(int x, int y) const {
    int v = meet_[x * n_ + y];
    if (v < 0) return std::nullopt;
    return v;
  }
  bool meet_defined(int x, int y) const { return meet_[x * n_ + y] >= 0; }
  int meet_raw(int x, int y) const { return meet_[x * n_ + y]; }

  // A finite nonempty join-semilattice always has a greatest element.
  int top() const { return top_; }
  // A least element need not exist.
  std::optional<int> bottom() const;

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  // The assigned name, or the decimal index when unnamed.
  std::string element_name(int x) const;

  const std::vector<int>& flat_table() const { return join_; }

  // y covers x: x < y with nothing strictly between.
  bool covers(int x, int y) const;
  std::vector<int> upper_covers(int x) const;

  bool operator==(const Semilattice& o) const {
    return n_ == o.n_ && join_ == o.join_ && names_ == o.names_;
  }
  bool operator!=(const Semilattice& o) const { return !(*this == o); }

 private:
  void derive();

  // Trusted path for structures correct by construction (products, induced
  // subalgebras, quotients): skips the law checks, still derives meets/top.
  friend Semilattice trusted_semilattice(int n, std::vector<int> table,
                                         std::vector<std::string> names);

  int n_ = 0;
  int top_ = 0;
  std::vector<int> join_;
  std::vector<int> meet_;  // -1 encodes an undefined meet
  std::vector<std::string> names_;
};

// A total map between carriers.
struct ElementMap {
  int dom = 0;
  int cod = 0;
  std::vector<int> to;
  int operator()(int x) const { return to[x]; }
  bool operator==(const ElementMap&) const = default;
};

ElementMap identity_map(int n);
bool is_join_homomorphism(const Semilattice& a, const Semilattice& b,
                          const ElementMap& f);
bool is_isomorphism(const Semilattice& a, const Semilattice& b,
                    const ElementMap& f);

// Componentwise product on pairs; (x, y) lives at index x*|B| + y.
struct Product {
  Semilattice s;
  int left_size = 0;
  int right_size = 0;
  int pair(int x, int y) const { return x * right_size + y; }
  int left(int p) const { return p / right_size; }
  int right(int p) const { return p % right_size; }
};

// Throws SizeOverflow when |A|*|B| exceeds the product cap.
Product direct_product(const Semilattice& a, const Semilattice& b);

// Throws NotSubsemilattice unless `subset` is nonempty, in range, duplicate
// free and closed under join.
void require_join_closed(const Semilattice& a, const std::vector<int>& subset,
                         const std::string& what);

// Restriction to a join-closed subset; element k of the result is the k-th
// member of `subset` in ascending order.
Semilattice induced(const Semilattice& a, const std::vector<int>& subset);

// First join-preserving bijection found by a backtracking scan that assigns
// images in ascending element order; std::nullopt when none exists.  The scan
// order makes the result deterministic.
std::optional<ElementMap> isomorphism_check(const Semilattice& a,
                                            const Semilattice& b);

// Lexicographically least flat join table over all relabelings of the
// carrier.  Equal canonical tables characterize isomorphic structures.
std::vector<int> canonical_table(const Semilattice& a);

// Internal constructor for tables that are valid by construction.  Not part
// of the public contract.
Semilattice trusted_semilattice(int n, std::vector<int> table,
                                std::vector<std::string> names);

}  // namespace slat
