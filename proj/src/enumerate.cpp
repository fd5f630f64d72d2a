#include "slat/enumerate.hpp"

#include <algorithm>
#include <set>

namespace slat {

namespace {

// Natural-labeling generator.  down[i] is the closed down-set of element i as
// a bitmask (bit i included).  An extension is pruned as soon as some pair of
// elements has two minimal upper bounds: a label added later can never sit
// below existing elements, so the defect would survive to the full structure.
struct LabeledGen {
  int n;
  std::vector<uint32_t> down;
  std::vector<std::vector<int>>* out;

  // minimal upper bounds of (i, j) among elements 0..k are unique?
  bool pair_ok(int i, int j, int k) const {
    uint32_t ubs = 0;
    for (int u = 0; u <= k; ++u)
      if ((down[u] >> i & 1) && (down[u] >> j & 1)) ubs |= uint32_t(1) << u;
    int minimal = 0;
    uint32_t rest = ubs;
    while (rest) {
      int u = __builtin_ctz(rest);
      rest &= rest - 1;
      if ((ubs & down[u] & ~(uint32_t(1) << u)) == 0 && ++minimal > 1)
        return false;
    }
    return true;
  }

  void extend(int k) {
    if (k == n) {
      emit();
      return;
    }
    uint32_t below = (uint32_t(1) << k) - 1;
    // the last element must close the structure from above
    uint32_t first = k == n - 1 ? below : 0;
    for (uint32_t s = first; s <= below; ++s) {
      bool closed = true;
      uint32_t rest = s;
      while (rest && closed) {
        int j = __builtin_ctz(rest);
        rest &= rest - 1;
        closed = (down[j] & ~s) == 0;
      }
      if (!closed) continue;
      down[k] = s | (uint32_t(1) << k);
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        if (!(s >> i & 1)) continue;
        for (int j = i + 1; j <= k && ok; ++j) {
          if (j < k && !(s >> j & 1)) continue;
          ok = pair_ok(i, j, k);
        }
      }
      if (ok) extend(k + 1);
    }
    down[k] = 0;
  }

  void emit() {
    // every pair now has upper bounds (the top) and a unique minimal one,
    // which in a finite order is the least: that is the join
    std::vector<int> table(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        int least = -1;
        for (int u = 0; u < n && least < 0; ++u)
          if ((down[u] >> i & 1) && (down[u] >> j & 1)) {
            uint32_t ubs = uint32_t(1) << u;
            for (int v = u + 1; v < n; ++v)
              if ((down[v] >> i & 1) && (down[v] >> j & 1))
                ubs |= uint32_t(1) << v;
            // u is the lowest-index upper bound; the least one is the unique
            // minimal member, found by stripping dominated bounds
            uint32_t rest = ubs;
            while (rest) {
              int w = __builtin_ctz(rest);
              rest &= rest - 1;
              if ((ubs & down[w] & ~(uint32_t(1) << w)) == 0) {
                least = w;
                break;
              }
            }
          }
        table[i * n + j] = least;
        table[j * n + i] = least;
      }
    out->push_back(std::move(table));
  }
};

std::vector<std::vector<int>> labeled_tables(int n) {
  std::vector<std::vector<int>> out;
  LabeledGen g;
  g.n = n;
  g.down.assign(n, 0);
  g.out = &out;
  if (n == 1) {
    out.push_back({0});
    return out;
  }
  g.down[0] = 1;
  g.extend(1);
  return out;
}

std::vector<Semilattice> assemble(int n,
                                  const std::vector<std::vector<int>>& canon) {
  std::set<std::vector<int>> distinct(canon.begin(), canon.end());
  std::vector<Semilattice> out;
  out.reserve(distinct.size());
  for (const std::vector<int>& t : distinct)
    out.push_back(Semilattice::from_flat_table(n, t));
  return out;
}

void check_enum_range(int n) {
  if (n < 1 || n > caps::enumerate_cap())
    throw CapExceeded("enumeration size " + std::to_string(n) +
                      " is outside 1.." + std::to_string(caps::enumerate_cap()));
}

}  // namespace

std::vector<Semilattice> enumerate_semilattices(int n) {
  check_enum_range(n);
  std::vector<std::vector<int>> labeled = labeled_tables(n);
  std::vector<std::vector<int>> canon(labeled.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(labeled.size()); ++i)
    canon[i] = canonical_table(trusted_semilattice(n, labeled[i], {}));
  return assemble(n, canon);
}

std::vector<Semilattice> enumerate_semilattices_serial(int n) {
  check_enum_range(n);
  std::vector<std::vector<int>> labeled = labeled_tables(n);
  std::vector<std::vector<int>> canon;
  canon.reserve(labeled.size());
  for (const std::vector<int>& t : labeled)
    canon.push_back(canonical_table(trusted_semilattice(n, t, {})));
  return assemble(n, canon);
}

std::vector<std::vector<int>> join_closed_subsets(const Semilattice& a) {
  int n = a.size();
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = i; j < n && closed; ++j)
        if (mask >> j & 1) closed = mask >> a.join(i, j) & 1;
    }
    if (!closed) continue;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(i);
    out.push_back(std::move(subset));
  }
  return out;
}

namespace {

// exactly the target fails, the other four hold; scans ordered cheap first
// and abandoned at the first conclusive verdict
bool exact_failure(const Semilattice& a, const SummandPair& sp, int target) {
  // 0 Abs, 1 exi, 2 onto, 3 Mod1, 4 Mod2 in cost order
  for (int ax = 0; ax < 5; ++ax) {
    bool holds;
    switch (ax) {
      case 0: holds = detail::abs_unchecked(a, sp).holds; break;
      case 1: holds = detail::exi_unchecked(a, sp).holds; break;
      case 2: holds = detail::onto_unchecked(a, sp).holds; break;
      case 3: holds = detail::mod1_unchecked(a, sp).holds; break;
      default: holds = detail::mod2_unchecked(a, sp).holds; break;
    }
    if (ax == target ? holds : !holds) return false;
  }
  return true;
}

// index into the cost order above for a report-order axiom name
int cost_index(const std::string& axiom) {
  if (axiom == "Abs") return 0;
  if (axiom == "exi") return 1;
  if (axiom == "onto") return 2;
  if (axiom == "Mod1") return 3;
  if (axiom == "Mod2") return 4;
  throw UnknownAxiom(axiom);
}

struct Hit {
  int c;
  int i1;
  int i2;  // indices into the subset list
};

std::optional<Hit> scan_structure(const Semilattice& a,
                                  const std::vector<std::vector<int>>& subsets,
                                  int target) {
  SummandPair sp;
  for (int c = 0; c < a.size(); ++c) {
    sp.c = c;
    for (size_t u = 0; u < subsets.size(); ++u) {
      sp.i1 = subsets[u];
      for (size_t v = 0; v < subsets.size(); ++v) {
        sp.i2 = subsets[v];
        if (exact_failure(a, sp, target))
          return Hit{c, static_cast<int>(u), static_cast<int>(v)};
      }
    }
  }
  return std::nullopt;
}

Witness verify_hit(const Semilattice& a,
                   const std::vector<std::vector<int>>& subsets,
                   const std::string& axiom, const Hit& hit) {
  SummandPair sp{hit.c, subsets[hit.i1], subsets[hit.i2]};
  AxiomReport report = check_axioms(a, sp);
  const AxiomVerdict* verdicts[5] = {&report.mod1, &report.mod2, &report.abs,
                                     &report.exi, &report.onto};
  for (int i = 0; i < 5; ++i) {
    bool should_fail = axiom_names()[i] == axiom;
    if (verdicts[i]->holds != !should_fail)
      throw InternalContradiction(
          "witness scan and full axiom report disagree on " + axiom_names()[i]);
  }
  return Witness{a, sp, axiom, report};
}

std::optional<Witness> search(const std::string& axiom, int max_n,
                              bool parallel) {
  int target = cost_index(axiom);
  if (max_n < 1)
    throw CapExceeded("search bound must be at least 1, got " +
                      std::to_string(max_n));
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Semilattice> corpus =
        parallel ? enumerate_semilattices(n) : enumerate_semilattices_serial(n);
    int count = static_cast<int>(corpus.size());
    std::vector<char> found(count, 0);
    std::vector<Hit> hits(count);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (int i = 0; i < count; ++i) {
        std::vector<std::vector<int>> subsets = join_closed_subsets(corpus[i]);
        if (auto h = scan_structure(corpus[i], subsets, target)) {
          hits[i] = *h;
          found[i] = 1;
        }
      }
    } else {
      for (int i = 0; i < count; ++i) {
        std::vector<std::vector<int>> subsets = join_closed_subsets(corpus[i]);
        if (auto h = scan_structure(corpus[i], subsets, target)) {
          hits[i] = *h;
          found[i] = 1;
          break;  // only the earliest structure matters
        }
      }
    }
    for (int i = 0; i < count; ++i)
      if (found[i])
        return verify_hit(corpus[i], join_closed_subsets(corpus[i]), axiom,
                          hits[i]);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> independence_search(const std::string& axiom, int max_n) {
  return search(axiom, max_n, true);
}

std::optional<Witness> independence_search_serial(const std::string& axiom,
                                                  int max_n) {
  return search(axiom, max_n, false);
}

}  // namespace slat
