#include "slat/directsum.hpp"

#include <algorithm>

namespace slat {

PartialElement pjoin(const Semilattice& a, PartialElement x, PartialElement y) {
  if (!x || !y) return std::nullopt;
  return a.join(*x, *y);
}

PartialElement pmeet(const Semilattice& a, PartialElement x, PartialElement y) {
  if (!x || !y) return std::nullopt;
  return a.meet(*x, *y);
}

PhiWitness eval_phi(const Semilattice& a, int c, int x1, int x2, int x) {
  for (int v : {c, x1, x2, x})
    if (v < 0 || v >= a.size()) throw IndexOutOfRange(-1, v);
  PhiWitness w;
  int xj1 = a.join(x, x1);
  int xj2 = a.join(x, x2);
  w.dist = eq3(x, pmeet(a, xj1, xj2));
  w.p1 = eq3(x1, pmeet(a, xj1, a.join(c, x1)));
  w.p2 = eq3(x2, pmeet(a, xj2, a.join(c, x2)));
  w.join = a.join(x1, x2) == a.join(x, c);
  return w;
}

namespace detail {

SummandPair normalized(const Semilattice& a, const SummandPair& sp) {
  if (sp.c < 0 || sp.c >= a.size()) throw IndexOutOfRange(-1, sp.c);
  require_join_closed(a, sp.i1, "first summand");
  require_join_closed(a, sp.i2, "second summand");
  SummandPair out = sp;
  std::sort(out.i1.begin(), out.i1.end());
  std::sort(out.i2.begin(), out.i2.end());
  return out;
}

// x, y over the whole carrier, x1, x2 over the summands, guarded by
// x v c >= x1 v x2; both sides may be undefined.
AxiomVerdict mod1_unchecked(const Semilattice& a, const SummandPair& sp) {
  int n = a.size();
  int c = sp.c;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int x1 : sp.i1) {
        int xj1 = a.join(x, x1);
        int xyj1 = a.join(a.join(x, y), x1);
        for (int x2 : sp.i2) {
          if (!a.leq(a.join(x1, x2), a.join(x, c))) continue;
          PartialElement lhs = pjoin(a, pmeet(a, xj1, a.join(x, x2)), y);
          PartialElement rhs = pmeet(a, xyj1, a.join(a.join(x, y), x2));
          if (!eq3(lhs, rhs)) return {false, {x, y, x1, x2}};
        }
      }
  return {};
}

// guard x <= x1 v x2; one equation per summand side
AxiomVerdict mod2_unchecked(const Semilattice& a, const SummandPair& sp) {
  int n = a.size();
  int c = sp.c;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int x1 : sp.i1)
        for (int x2 : sp.i2) {
          if (!a.leq(x, a.join(x1, x2))) continue;
          int xy = a.join(x, y);
          int cy = a.join(c, y);
          for (int side = 1; side <= 2; ++side) {
            int xi = side == 1 ? x1 : x2;
            PartialElement lhs =
                pjoin(a, pmeet(a, a.join(x, xi), a.join(c, xi)), y);
            PartialElement rhs = pmeet(a, a.join(xy, xi), a.join(cy, xi));
            if (!eq3(lhs, rhs)) return {false, {x, y, x1, x2, side}};
          }
        }
  return {};
}

// x ^ (y v z) = x ^ (y v c) with x, y in one summand and z in the other
AxiomVerdict abs_unchecked(const Semilattice& a, const SummandPair& sp) {
  for (int side = 1; side <= 2; ++side) {
    const std::vector<int>& own = side == 1 ? sp.i1 : sp.i2;
    const std::vector<int>& other = side == 1 ? sp.i2 : sp.i1;
    for (int x : own)
      for (int y : own) {
        PartialElement rhs = pmeet(a, x, a.join(y, sp.c));
        for (int z : other)
          if (!eq3(pmeet(a, x, a.join(y, z)), rhs))
            return {false, {x, y, z, side}};
      }
  }
  return {};
}

AxiomVerdict exi_unchecked(const Semilattice& a, const SummandPair& sp) {
  int n = a.size();
  for (int x1 : sp.i1)
    for (int x2 : sp.i2) {
      bool found = false;
      for (int x = 0; x < n && !found; ++x)
        found = eval_phi(a, sp.c, x1, x2, x).holds();
      if (!found) return {false, {x1, x2}};
    }
  return {};
}

AxiomVerdict onto_unchecked(const Semilattice& a, const SummandPair& sp) {
  int n = a.size();
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (auto it1 = sp.i1.begin(); it1 != sp.i1.end() && !found; ++it1)
      for (auto it2 = sp.i2.begin(); it2 != sp.i2.end() && !found; ++it2)
        found = eval_phi(a, sp.c, *it1, *it2, x).holds();
    if (!found) return {false, {x}};
  }
  return {};
}

AxiomVerdict ori_unchecked(const Semilattice& a, const SummandPair& sp) {
  for (int x1 : sp.i1)
    for (int x2 : sp.i2)
      if (!a.leq(sp.c, a.join(x1, x2))) return {false, {x1, x2}};
  return {};
}

}  // namespace detail

AxiomVerdict check_mod1(const Semilattice& a, const SummandPair& sp) {
  return detail::mod1_unchecked(a, detail::normalized(a, sp));
}
AxiomVerdict check_mod2(const Semilattice& a, const SummandPair& sp) {
  return detail::mod2_unchecked(a, detail::normalized(a, sp));
}
AxiomVerdict check_abs(const Semilattice& a, const SummandPair& sp) {
  return detail::abs_unchecked(a, detail::normalized(a, sp));
}
AxiomVerdict check_exi(const Semilattice& a, const SummandPair& sp) {
  return detail::exi_unchecked(a, detail::normalized(a, sp));
}
AxiomVerdict check_onto(const Semilattice& a, const SummandPair& sp) {
  return detail::onto_unchecked(a, detail::normalized(a, sp));
}
AxiomVerdict check_ori(const Semilattice& a, const SummandPair& sp) {
  return detail::ori_unchecked(a, detail::normalized(a, sp));
}

AxiomReport check_axioms(const Semilattice& a, const SummandPair& sp) {
  SummandPair norm = detail::normalized(a, sp);
  AxiomReport r;
  r.mod1 = detail::mod1_unchecked(a, norm);
  r.mod2 = detail::mod2_unchecked(a, norm);
  r.abs = detail::abs_unchecked(a, norm);
  r.exi = detail::exi_unchecked(a, norm);
  r.onto = detail::onto_unchecked(a, norm);
  r.ori = detail::ori_unchecked(a, norm);
  return r;
}

bool is_direct_sum(const Semilattice& a, const SummandPair& sp) {
  SummandPair norm = detail::normalized(a, sp);
  // cheapest scans first so failures exit early
  return detail::abs_unchecked(a, norm).holds &&
         detail::exi_unchecked(a, norm).holds &&
         detail::onto_unchecked(a, norm).holds &&
         detail::mod1_unchecked(a, norm).holds &&
         detail::mod2_unchecked(a, norm).holds;
}

namespace {

ElementMap isomorphism_unchecked(const Semilattice& a, const SummandPair& sp) {
  int n1 = static_cast<int>(sp.i1.size());
  int n2 = static_cast<int>(sp.i2.size());
  if (static_cast<long long>(n1) * n2 != a.size())
    throw InternalContradiction(
        "summand sizes " + std::to_string(n1) + "*" + std::to_string(n2) +
        " do not multiply to the carrier size " + std::to_string(a.size()));
  std::vector<int> to(static_cast<size_t>(n1) * n2);
  std::vector<char> hit(a.size(), 0);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      int image = -1;
      for (int x = 0; x < a.size(); ++x)
        if (eval_phi(a, sp.c, sp.i1[i], sp.i2[j], x).holds()) {
          if (image >= 0)
            throw InternalContradiction(
                "phi relates the pair (" + std::to_string(sp.i1[i]) + ", " +
                std::to_string(sp.i2[j]) + ") to both " + std::to_string(image) +
                " and " + std::to_string(x));
          image = x;
        }
      if (image < 0)
        throw InternalContradiction("phi relates the pair (" +
                                    std::to_string(sp.i1[i]) + ", " +
                                    std::to_string(sp.i2[j]) + ") to nothing");
      if (hit[image])
        throw InternalContradiction("element " + std::to_string(image) +
                                    " is the image of two pairs");
      hit[image] = 1;
      to[i * n2 + j] = image;
    }
  return ElementMap{n1 * n2, a.size(), std::move(to)};
}

SummandPair require_direct_sum(const Semilattice& a, const SummandPair& sp) {
  SummandPair norm = detail::normalized(a, sp);
  if (!(detail::abs_unchecked(a, norm).holds &&
        detail::exi_unchecked(a, norm).holds &&
        detail::onto_unchecked(a, norm).holds &&
        detail::mod1_unchecked(a, norm).holds &&
        detail::mod2_unchecked(a, norm).holds))
    throw NotADirectSum("the summand pair fails a defining axiom");
  return norm;
}

}  // namespace

ElementMap build_isomorphism(const Semilattice& a, const SummandPair& sp) {
  return isomorphism_unchecked(a, require_direct_sum(a, sp));
}

SumProjections projections(const Semilattice& a, const SummandPair& sp) {
  SummandPair norm = require_direct_sum(a, sp);
  ElementMap iso = isomorphism_unchecked(a, norm);
  int n2 = static_cast<int>(norm.i2.size());
  SumProjections pr;
  pr.pi1.assign(a.size(), -1);
  pr.pi2.assign(a.size(), -1);
  for (int p = 0; p < iso.dom; ++p) {
    pr.pi1[iso.to[p]] = norm.i1[p / n2];
    pr.pi2[iso.to[p]] = norm.i2[p % n2];
  }
  return pr;
}

SummandPair map_I(const Semilattice& a, int c, const Congruence& theta,
                  const Congruence& delta) {
  if (c < 0 || c >= a.size()) throw IndexOutOfRange(-1, c);
  if (!is_complementary_pair(a, theta, delta))
    throw NotComplementaryPair(
        "the natural map of the congruence pair is not bijective");
  SummandPair sp;
  sp.c = c;
  sp.i1 = theta.blocks()[theta.class_of(c)];
  sp.i2 = delta.blocks()[delta.class_of(c)];
  return sp;
}

CongruencePair map_K(const Semilattice& a, const SummandPair& sp) {
  SumProjections pr = projections(a, sp);
  Congruence theta = Congruence::from_class_vector(pr.pi2);
  Congruence delta = Congruence::from_class_vector(pr.pi1);
  std::vector<int> to(a.size());
  for (int x = 0; x < a.size(); ++x)
    to[x] = delta.class_of(x) * theta.block_count() + theta.class_of(x);
  return CongruencePair{std::move(theta), std::move(delta),
                        ElementMap{a.size(), a.size(), std::move(to)}};
}

const std::vector<std::string>& axiom_names() {
  static const std::vector<std::string> names = {"Mod1", "Mod2", "Abs", "exi",
                                                 "onto"};
  return names;
}

}  // namespace slat
