#pragma once

#include <vector>

#include "slat/semilattice.hpp"

// Small structures with hand-checked tables, used as frozen expectations.
namespace fix {

// 0 < 1 < ... < n-1
inline slat::Semilattice chain(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = i > j ? i : j;
  return slat::Semilattice::from_flat_table(n, std::move(t));
}

// two incomparable atoms 1, 2 over a bottom 0, top 3; meets total
inline slat::Semilattice diamond() {
  return slat::Semilattice::from_join_table(
      {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
}

// two incomparable elements 0, 1 under a top 2; 0 and 1 have no meet
inline slat::Semilattice vee() {
  return slat::Semilattice::from_join_table({{0, 2, 2}, {2, 1, 2}, {2, 2, 2}});
}

// pentagon: 0 < 1 < 4 and 0 < 2 < 3 < 4, with 1 incomparable to 2 and 3
inline slat::Semilattice pentagon() {
  return slat::Semilattice::from_join_table({{0, 1, 2, 3, 4},
                                             {1, 1, 4, 4, 4},
                                             {2, 4, 2, 3, 4},
                                             {3, 4, 3, 3, 4},
                                             {4, 4, 4, 4, 4}});
}

// perm[old] = new label
inline slat::Semilattice relabel(const slat::Semilattice& a,
                                 const std::vector<int>& perm) {
  int n = a.size();
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[perm[i] * n + perm[j]] = perm[a.join(i, j)];
  return slat::Semilattice::from_flat_table(n, std::move(t));
}

}  // namespace fix
