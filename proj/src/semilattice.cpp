#include "slat/semilattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace slat {

namespace caps {

namespace {
int env_cap(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  int parsed = std::atoi(v);
  return parsed > 0 ? parsed : fallback;
}
}  // namespace

int size_cap() {
  static const int v = env_cap("SLAT_SIZE_CAP", 10);
  return v;
}

int enumerate_cap() {
  static const int v = env_cap("SLAT_ENUM_CAP", 7);
  return v;
}

int product_cap() {
  static const int v = env_cap("SLAT_PRODUCT_CAP", 4096);
  return v;
}

}  // namespace caps

namespace {

// Down-sets as bitsets, one word-row per element; bit u of row x says u <= x.
std::vector<uint64_t> down_sets(int n, const std::vector<int>& join) {
  int words = (n + 63) / 64;
  std::vector<uint64_t> d(static_cast<size_t>(n) * words, 0);
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u)
      if (join[u * n + x] == x) d[x * words + u / 64] |= uint64_t(1) << (u % 64);
  return d;
}

}  // namespace

Semilattice Semilattice::from_join_table(
    const std::vector<std::vector<int>>& table, std::vector<std::string> names) {
  int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw ValidationError("row " + std::to_string(i) + " has " +
                                std::to_string(table[i].size()) +
                                " entries, expected " + std::to_string(n),
                            {i});
    flat.insert(flat.end(), table[i].begin(), table[i].end());
  }
  return from_flat_table(n, std::move(flat), std::move(names));
}

Semilattice Semilattice::from_flat_table(int n, std::vector<int> table,
                                         std::vector<std::string> names) {
  if (n <= 0) throw ValidationError("carrier must be nonempty", {});
  if (static_cast<int>(table.size()) != n * n)
    throw ValidationError("table has " + std::to_string(table.size()) +
                              " entries, expected " + std::to_string(n * n),
                          {});
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw ValidationError("got " + std::to_string(names.size()) +
                              " names for " + std::to_string(n) + " elements",
                          {});
  for (int i = 0; i < n * n; ++i)
    if (table[i] < 0 || table[i] >= n) throw IndexOutOfRange(i, table[i]);
  for (int x = 0; x < n; ++x)
    if (table[x * n + x] != x) throw IdempotenceViolation(x);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (table[x * n + y] != table[y * n + x]) throw CommutativityViolation(x, y);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = table[x * n + y];
      for (int z = 0; z < n; ++z)
        if (table[xy * n + z] != table[x * n + table[y * n + z]])
          throw AssociativityViolation(x, y, z);
    }

  Semilattice s;
  s.n_ = n;
  s.join_ = std::move(table);
  s.names_ = std::move(names);
  s.derive();
  return s;
}

Semilattice trusted_semilattice(int n, std::vector<int> table,
                                std::vector<std::string> names) {
  Semilattice s;
  s.n_ = n;
  s.join_ = std::move(table);
  s.names_ = std::move(names);
  s.derive();
  return s;
}

void Semilattice::derive() {
  int n = n_;
  int words = (n + 63) / 64;
  std::vector<uint64_t> down = down_sets(n, join_);

  // x is the top iff everything joins to it.
  top_ = 0;
  for (int x = 0; x < n; ++x) {
    bool all = true;
    for (int u = 0; u < n && all; ++u) all = join_[u * n + x] == x;
    if (all) {
      top_ = x;
      break;
    }
  }

  // meet(x,y) exists iff the intersection L of the two down-sets has a member
  // whose down-set is exactly L; that member is unique when present.
  meet_.assign(static_cast<size_t>(n) * n, -1);
  std::vector<uint64_t> common(words);
  std::vector<int> downsize(n, 0);
  for (int x = 0; x < n; ++x) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += __builtin_popcountll(down[x * words + w]);
    downsize[x] = c;
  }
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int size = 0;
      for (int w = 0; w < words; ++w) {
        common[w] = down[x * words + w] & down[y * words + w];
        size += __builtin_popcountll(common[w]);
      }
      int found = -1;
      for (int w = 0; w < words && found < 0; ++w) {
        uint64_t bits = common[w];
        while (bits) {
          int g = w * 64 + __builtin_ctzll(bits);
          bits &= bits - 1;
          if (downsize[g] != size) continue;
          bool equal = true;
          for (int v = 0; v < words && equal; ++v)
            equal = down[g * words + v] == common[v];
          if (equal) {
            found = g;
            break;
          }
        }
      }
      meet_[x * n + y] = found;
      meet_[y * n + x] = found;
    }
}

std::optional<int> Semilattice::bottom() const {
  for (int x = 0; x < n_; ++x) {
    bool all = true;
    for (int u = 0; u < n_ && all; ++u) all = leq(x, u);
    if (all) return x;
  }
  return std::nullopt;
}

std::string Semilattice::element_name(int x) const {
  if (has_names()) return names_[x];
  return std::to_string(x);
}

bool Semilattice::covers(int x, int y) const {
  if (x == y || !leq(x, y)) return false;
  for (int z = 0; z < n_; ++z)
    if (z != x && z != y && leq(x, z) && leq(z, y)) return false;
  return true;
}

std::vector<int> Semilattice::upper_covers(int x) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (covers(x, y)) out.push_back(y);
  return out;
}

ElementMap identity_map(int n) {
  ElementMap f{n, n, std::vector<int>(n)};
  std::iota(f.to.begin(), f.to.end(), 0);
  return f;
}

bool is_join_homomorphism(const Semilattice& a, const Semilattice& b,
                          const ElementMap& f) {
  if (f.dom != a.size() || f.cod != b.size()) return false;
  for (int x : f.to)
    if (x < 0 || x >= b.size()) return false;
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (f.to[a.join(x, y)] != b.join(f.to[x], f.to[y])) return false;
  return true;
}

bool is_isomorphism(const Semilattice& a, const Semilattice& b,
                    const ElementMap& f) {
  if (a.size() != b.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (int x : f.to) {
    if (x < 0 || x >= b.size() || hit[x]) return false;
    hit[x] = 1;
  }
  return is_join_homomorphism(a, b, f);
}

Product direct_product(const Semilattice& a, const Semilattice& b) {
  long long size = static_cast<long long>(a.size()) * b.size();
  if (size > caps::product_cap())
    throw SizeOverflow("product carrier of size " + std::to_string(size) +
                       " exceeds the cap of " +
                       std::to_string(caps::product_cap()));
  int na = a.size(), nb = b.size(), n = static_cast<int>(size);
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[(x1 * nb + y1) * n + (x2 * nb + y2)] =
              a.join(x1, x2) * nb + b.join(y1, y2);
  Product p;
  p.left_size = na;
  p.right_size = nb;
  p.s = trusted_semilattice(n, std::move(table), {});
  return p;
}

void require_join_closed(const Semilattice& a, const std::vector<int>& subset,
                         const std::string& what) {
  if (subset.empty()) throw NotSubsemilattice(what + " is empty");
  std::vector<char> in(a.size(), 0);
  for (int x : subset) {
    if (x < 0 || x >= a.size())
      throw NotSubsemilattice(what + " contains out-of-range element " +
                              std::to_string(x));
    if (in[x])
      throw NotSubsemilattice(what + " lists element " + std::to_string(x) +
                              " twice");
    in[x] = 1;
  }
  for (int x : subset)
    for (int y : subset)
      if (!in[a.join(x, y)])
        throw NotSubsemilattice(what + " is not join-closed: join(" +
                                std::to_string(x) + ", " + std::to_string(y) +
                                ") = " + std::to_string(a.join(x, y)) +
                                " lies outside");
}

Semilattice induced(const Semilattice& a, const std::vector<int>& subset) {
  require_join_closed(a, subset, "subset");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  int k = static_cast<int>(sorted.size());
  std::vector<int> pos(a.size(), -1);
  for (int i = 0; i < k; ++i) pos[sorted[i]] = i;
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i * k + j] = pos[a.join(sorted[i], sorted[j])];
  std::vector<std::string> names;
  if (a.has_names()) {
    names.reserve(k);
    for (int x : sorted) names.push_back(a.names()[x]);
  }
  return trusted_semilattice(k, std::move(table), std::move(names));
}

namespace {

struct IsoScan {
  const Semilattice* a;
  const Semilattice* b;
  int n;
  std::vector<int> f;     // image in b, -1 unassigned
  std::vector<int> finv;  // preimage in a, -1 unused
  std::vector<long long> inv_a, inv_b;

  // order-theoretic fingerprint that any isomorphism must preserve
  static std::vector<long long> invariants(const Semilattice& s) {
    int n = s.size();
    std::vector<long long> out(n);
    for (int x = 0; x < n; ++x) {
      long long down = 0, up = 0;
      for (int u = 0; u < n; ++u) {
        if (s.leq(u, x)) ++down;
        if (s.leq(x, u)) ++up;
      }
      out[x] = down * (n + 1) + up;
    }
    return out;
  }

  bool assign(int x) {
    if (x == n) return true;
    for (int v = 0; v < n; ++v) {
      if (finv[v] >= 0 || inv_a[x] != inv_b[v]) continue;
      bool ok = true;
      // joins with x, strongly where the join's image is already pinned,
      // and as a reservation where it is not
      for (int i = 0; i < x && ok; ++i) {
        int m = a->join(i, x);
        int w = b->join(f[i], v);
        if (m == x)
          ok = w == v;
        else if (f[m] >= 0)
          ok = f[m] == w;
        else
          ok = finv[w] < 0 && w != v;
      }
      // pairs whose join lands on x become fully checkable now
      for (int i = 0; i < x && ok; ++i)
        for (int j = i + 1; j < x && ok; ++j)
          if (a->join(i, j) == x) ok = b->join(f[i], f[j]) == v;
      if (!ok) continue;
      f[x] = v;
      finv[v] = x;
      if (assign(x + 1)) return true;
      f[x] = -1;
      finv[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<ElementMap> isomorphism_check(const Semilattice& a,
                                            const Semilattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  IsoScan scan;
  scan.a = &a;
  scan.b = &b;
  scan.n = a.size();
  scan.f.assign(scan.n, -1);
  scan.finv.assign(scan.n, -1);
  scan.inv_a = IsoScan::invariants(a);
  scan.inv_b = IsoScan::invariants(b);
  auto sa = scan.inv_a, sb = scan.inv_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  if (!scan.assign(0)) return std::nullopt;
  return ElementMap{scan.n, scan.n, scan.f};
}

std::vector<int> canonical_table(const Semilattice& a) {
  int n = a.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> inv(n);
  do {
    // perm maps old labels to new ones; compare the relabeled table lazily
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    if (best.empty()) {
      best.resize(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          best[i * n + j] = perm[a.join(inv[i], inv[j])];
      continue;
    }
    bool better = false, worse = false;
    for (int i = 0; i < n && !better && !worse; ++i)
      for (int j = 0; j < n; ++j) {
        int v = perm[a.join(inv[i], inv[j])];
        if (v < best[i * n + j]) {
          better = true;
          break;
        }
        if (v > best[i * n + j]) {
          worse = true;
          break;
        }
      }
    if (better)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) best[i * n + j] = perm[a.join(inv[i], inv[j])];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace slat
