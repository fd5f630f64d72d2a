#include "slat/congruence.hpp"

#include <algorithm>
#include <numeric>

namespace slat {

Congruence Congruence::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  if (n <= 0) throw NotAPartition("carrier must be nonempty");
  std::vector<int> classes(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw NotAPartition("block " + std::to_string(b) + " is empty");
    for (int x : blocks[b]) {
      if (x < 0 || x >= n)
        throw NotAPartition("element " + std::to_string(x) + " out of range");
      if (classes[x] >= 0)
        throw NotAPartition("element " + std::to_string(x) +
                            " appears in two blocks");
      classes[x] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n; ++x)
    if (classes[x] < 0)
      throw NotAPartition("element " + std::to_string(x) + " is not covered");
  return from_class_vector(classes);
}

Congruence Congruence::from_class_vector(const std::vector<int>& classes) {
  int n = static_cast<int>(classes.size());
  if (n == 0) throw NotAPartition("carrier must be nonempty");
  // renumber labels by first occurrence: yields the restricted-growth form
  std::vector<int> relabel;
  Congruence c;
  c.class_of_.resize(n);
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (size_t i = 0; i < relabel.size(); ++i)
      if (relabel[i] == classes[x]) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(relabel.size());
      relabel.push_back(classes[x]);
      c.blocks_.emplace_back();
    }
    c.class_of_[x] = found;
    c.blocks_[found].push_back(x);
  }
  return c;
}

Congruence Congruence::identity(int n) {
  std::vector<int> classes(n);
  std::iota(classes.begin(), classes.end(), 0);
  return from_class_vector(classes);
}

Congruence Congruence::full(int n) {
  return from_class_vector(std::vector<int>(n, 0));
}

bool Congruence::refines(const Congruence& u, const Congruence& v) {
  if (u.carrier_size() != v.carrier_size()) return false;
  // u refines v iff elements sharing a u-block share a v-block; enough to
  // compare every element with its u-block representative
  for (const auto& block : u.blocks_)
    for (int x : block)
      if (!v.same(block[0], x)) return false;
  return true;
}

bool Congruence::canonical_less(const Congruence& u, const Congruence& v) {
  if (u.block_count() != v.block_count())
    return u.block_count() < v.block_count();
  return u.class_of_ < v.class_of_;
}

std::optional<CongruenceViolation> congruence_violation(const Semilattice& a,
                                                        const Congruence& p) {
  int n = a.size();
  if (p.carrier_size() != n)
    throw NotAPartition("partition is over " + std::to_string(p.carrier_size()) +
                        " elements, structure has " + std::to_string(n));
  const std::vector<int>& cls = p.class_vector();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (cls[x] != cls[y]) continue;
      for (int z = 0; z < n; ++z)
        if (cls[a.join(x, z)] != cls[a.join(y, z)]) return CongruenceViolation{x, y, z};
    }
  return std::nullopt;
}

bool is_congruence(const Semilattice& a, const Congruence& p) {
  return !congruence_violation(a, p).has_value();
}

namespace {

// compatibility test on a raw restricted-growth labeling, no allocation
bool compatible(const Semilattice& a, const std::vector<int>& cls) {
  int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (cls[x] != cls[y]) continue;
      for (int z = 0; z < n; ++z)
        if (cls[a.join(x, z)] != cls[a.join(y, z)]) return false;
    }
  return true;
}

// all restricted-growth strings over n positions, lexicographic
void gen_partitions(int n, std::vector<std::vector<int>>& out) {
  std::vector<int> cls(n, 0);
  std::vector<int> maxv(n, 0);  // maxv[i] = max of cls[0..i]
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      out.push_back(cls);
      return;
    }
    int bound = pos == 0 ? 0 : maxv[pos - 1] + 1;
    for (int v = 0; v <= bound; ++v) {
      cls[pos] = v;
      maxv[pos] = pos == 0 ? 0 : std::max(maxv[pos - 1], v);
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

std::vector<Congruence> collect_congruences(const Semilattice& a, bool parallel) {
  int n = a.size();
  if (n > caps::size_cap())
    throw CapExceeded("carrier of size " + std::to_string(n) +
                      " exceeds the congruence-scan cap of " +
                      std::to_string(caps::size_cap()));
  std::vector<std::vector<int>> candidates;
  gen_partitions(n, candidates);
  std::vector<char> keep(candidates.size(), 0);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(candidates.size()); ++i)
      keep[i] = compatible(a, candidates[i]);
  } else {
    for (size_t i = 0; i < candidates.size(); ++i)
      keep[i] = compatible(a, candidates[i]);
  }
  std::vector<Congruence> out;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(Congruence::from_class_vector(candidates[i]));
  // generation is lexicographic already; order by block count first
  std::stable_sort(out.begin(), out.end(), Congruence::canonical_less);
  return out;
}

}  // namespace

std::vector<Congruence> all_congruences(const Semilattice& a) {
  return collect_congruences(a, true);
}

std::vector<Congruence> all_congruences_serial(const Semilattice& a) {
  return collect_congruences(a, false);
}

QuotientResult quotient(const Semilattice& a, const Congruence& th) {
  if (auto v = congruence_violation(a, th))
    throw NotACongruence("partition does not respect join: classes of " +
                         std::to_string(v->x) + " and " + std::to_string(v->y) +
                         " separate under join with " + std::to_string(v->z));
  int k = th.block_count();
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int joined = a.join(th.blocks()[i][0], th.blocks()[j][0]);
      table[i * k + j] = th.class_of(joined);
    }
  QuotientResult q{trusted_semilattice(k, std::move(table), {}),
                   ElementMap{a.size(), k, th.class_vector()}};
  return q;
}

bool is_complementary_pair(const Semilattice& a, const Congruence& theta,
                           const Congruence& delta) {
  if (theta.carrier_size() != a.size() || delta.carrier_size() != a.size())
    return false;
  if (!is_congruence(a, theta) || !is_congruence(a, delta)) return false;
  long long product = static_cast<long long>(delta.block_count()) *
                      theta.block_count();
  if (product != a.size()) return false;
  std::vector<char> hit(a.size(), 0);
  for (int x = 0; x < a.size(); ++x) {
    int code = delta.class_of(x) * theta.block_count() + theta.class_of(x);
    if (hit[code]) return false;  // natural map must be injective
    hit[code] = 1;
  }
  return true;
}

std::vector<CongruencePair> complementary_factor_pairs(const Semilattice& a) {
  std::vector<Congruence> congs = all_congruences(a);
  std::vector<CongruencePair> out;
  for (const Congruence& theta : congs)
    for (const Congruence& delta : congs) {
      long long product =
          static_cast<long long>(delta.block_count()) * theta.block_count();
      if (product != a.size()) continue;
      std::vector<char> hit(a.size(), 0);
      std::vector<int> to(a.size());
      bool injective = true;
      for (int x = 0; x < a.size() && injective; ++x) {
        to[x] = delta.class_of(x) * theta.block_count() + theta.class_of(x);
        if (hit[to[x]])
          injective = false;
        else
          hit[to[x]] = 1;
      }
      if (!injective) continue;
      out.push_back(CongruencePair{theta, delta,
                                   ElementMap{a.size(), a.size(), std::move(to)}});
    }
  return out;
}

}  // namespace slat
