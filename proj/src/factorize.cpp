#include "slat/factorize.hpp"

#include <algorithm>
#include <numeric>

namespace slat {

namespace {

struct Piece {
  Semilattice factor;
  std::vector<int> digit;  // original element -> coordinate in this factor
};

// nontrivial: both quotients have at least two elements
bool nontrivial(const CongruencePair& p) {
  return p.theta.block_count() > 1 && p.delta.block_count() > 1;
}

std::vector<Piece> split(const Semilattice& a, int c, PairStrategy strategy) {
  std::vector<Piece> out;
  if (a.size() == 1) {
    out.push_back({a, std::vector<int>(1, 0)});
    return out;
  }
  std::vector<CongruencePair> pairs = complementary_factor_pairs(a);
  int chosen = -1;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (!nontrivial(pairs[i])) continue;
    switch (strategy) {
      case PairStrategy::First:
        if (chosen < 0) chosen = static_cast<int>(i);
        break;
      case PairStrategy::Last:
        chosen = static_cast<int>(i);
        break;
      case PairStrategy::MinDelta:
        if (chosen < 0 || pairs[i].delta.block_count() <
                              pairs[chosen].delta.block_count())
          chosen = static_cast<int>(i);
        break;
    }
  }
  if (chosen < 0) {
    std::vector<int> digit(a.size());
    std::iota(digit.begin(), digit.end(), 0);
    out.push_back({a, std::move(digit)});
    return out;
  }
  const CongruencePair& p = pairs[chosen];
  QuotientResult left = quotient(a, p.delta);
  QuotientResult right = quotient(a, p.theta);
  std::vector<Piece> lp = split(left.s, left.class_map(c), strategy);
  std::vector<Piece> rp = split(right.s, right.class_map(c), strategy);
  for (Piece& piece : lp) {
    std::vector<int> digit(a.size());
    for (int x = 0; x < a.size(); ++x) digit[x] = piece.digit[left.class_map(x)];
    out.push_back({std::move(piece.factor), std::move(digit)});
  }
  for (Piece& piece : rp) {
    std::vector<int> digit(a.size());
    for (int x = 0; x < a.size(); ++x) digit[x] = piece.digit[right.class_map(x)];
    out.push_back({std::move(piece.factor), std::move(digit)});
  }
  return out;
}

}  // namespace

Factorization factorize(const Semilattice& a, int c, PairStrategy strategy) {
  if (c < 0 || c >= a.size()) throw IndexOutOfRange(-1, c);
  if (a.size() > caps::size_cap())
    throw CapExceeded("carrier of size " + std::to_string(a.size()) +
                      " exceeds the factorization cap of " +
                      std::to_string(caps::size_cap()));
  std::vector<Piece> pieces = split(a, c, strategy);
  if (pieces.size() > 1) {
    // canonical presentation order; stable so equal factors keep their
    // recursion order and the coordinate map stays deterministic
    std::vector<std::vector<int>> keys(pieces.size());
    for (size_t i = 0; i < pieces.size(); ++i)
      keys[i] = canonical_table(pieces[i].factor);
    std::vector<int> order(pieces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
      if (pieces[u].factor.size() != pieces[v].factor.size())
        return pieces[u].factor.size() < pieces[v].factor.size();
      return keys[u] < keys[v];
    });
    std::vector<Piece> sorted;
    sorted.reserve(pieces.size());
    for (int i : order) sorted.push_back(std::move(pieces[i]));
    pieces = std::move(sorted);
  }

  Factorization f;
  f.base_c = c;
  std::vector<long long> stride(pieces.size(), 1);
  for (int i = static_cast<int>(pieces.size()) - 2; i >= 0; --i)
    stride[i] = stride[i + 1] * pieces[i + 1].factor.size();
  f.iso = ElementMap{a.size(), a.size(), std::vector<int>(a.size(), 0)};
  for (int x = 0; x < a.size(); ++x) {
    long long code = 0;
    for (size_t k = 0; k < pieces.size(); ++k)
      code += stride[k] * pieces[k].digit[x];
    f.iso.to[x] = static_cast<int>(code);
  }
  std::vector<char> hit(a.size(), 0);
  for (int v : f.iso.to) {
    if (v < 0 || v >= a.size() || hit[v])
      throw InternalContradiction(
          "factor coordinates do not enumerate the carrier bijectively");
    hit[v] = 1;
  }
  for (Piece& piece : pieces) f.factors.push_back(std::move(piece.factor));
  return f;
}

Semilattice iterated_product(const std::vector<Semilattice>& factors) {
  if (factors.empty()) throw Error("iterated product of an empty factor list");
  Semilattice acc = factors[0];
  for (size_t i = 1; i < factors.size(); ++i)
    acc = direct_product(acc, factors[i]).s;
  return acc;
}

RefineResult refine_join(const Semilattice& a, const SummandPair& first,
                         const SummandPair& second) {
  if (first.c != second.c)
    throw Error("refinement requires a shared base element, got " +
                std::to_string(first.c) + " and " + std::to_string(second.c));
  if (!is_direct_sum(a, first))
    throw NotADirectSum("first summand pair fails a defining axiom");
  if (!is_direct_sum(a, second))
    throw NotADirectSum("second summand pair fails a defining axiom");

  SumProjections pr = projections(a, first);
  std::vector<char> reached(a.size(), 0);
  for (int j : second.i2) reached[pr.pi1[j]] = 1;

  RefineResult r;
  for (int x = 0; x < a.size(); ++x)
    if (reached[pr.pi1[x]]) r.joined.push_back(x);

  std::vector<char> in_first(a.size(), 0);
  for (int x : first.i1) in_first[x] = 1;
  std::vector<int> j1 = second.i1;
  std::sort(j1.begin(), j1.end());
  for (int x : j1)
    if (in_first[x]) r.met.push_back(x);

  r.report = check_axioms(a, SummandPair{first.c, r.met, r.joined});
  r.verdict = r.report.direct_sum();
  return r;
}

bool factor_congruence_boolean_check(const Semilattice& a) {
  std::vector<CongruencePair> pairs = complementary_factor_pairs(a);
  std::vector<Congruence> set;
  for (const CongruencePair& p : pairs) {
    set.push_back(p.theta);
    set.push_back(p.delta);
  }
  std::sort(set.begin(), set.end(), Congruence::canonical_less);
  set.erase(std::unique(set.begin(), set.end()), set.end());

  int k = static_cast<int>(set.size());
  int bottom = -1, top = -1;
  for (int i = 0; i < k; ++i) {
    if (set[i] == Congruence::identity(a.size())) bottom = i;
    if (set[i] == Congruence::full(a.size())) top = i;
  }
  if (bottom < 0 || top < 0) return false;

  // order by refinement, then require binary bounds inside the set
  std::vector<char> leq(static_cast<size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) leq[i * k + j] = Congruence::refines(set[i], set[j]);

  std::vector<int> glb(static_cast<size_t>(k) * k, -1);
  std::vector<int> lub(static_cast<size_t>(k) * k, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (int w = 0; w < k; ++w) {
        if (!(leq[w * k + i] && leq[w * k + j])) continue;
        bool greatest = true;
        for (int u = 0; u < k && greatest; ++u)
          if (leq[u * k + i] && leq[u * k + j]) greatest = leq[u * k + w];
        if (greatest) {
          glb[i * k + j] = w;
          break;
        }
      }
      for (int w = 0; w < k; ++w) {
        if (!(leq[i * k + w] && leq[j * k + w])) continue;
        bool least = true;
        for (int u = 0; u < k && least; ++u)
          if (leq[i * k + u] && leq[j * k + u]) least = leq[w * k + u];
        if (least) {
          lub[i * k + j] = w;
          break;
        }
      }
      if (glb[i * k + j] < 0 || lub[i * k + j] < 0) return false;
    }

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int w = 0; w < k; ++w)
        if (glb[i * k + lub[j * k + w]] !=
            lub[glb[i * k + j] * k + glb[i * k + w]])
          return false;

  for (int i = 0; i < k; ++i) {
    bool complemented = false;
    for (int j = 0; j < k && !complemented; ++j)
      complemented = glb[i * k + j] == bottom && lub[i * k + j] == top;
    if (!complemented) return false;
  }
  return true;
}

}  // namespace slat
