#include "slat/bounded.hpp"

#include <algorithm>

namespace slat {

namespace {

SummandPair sorted_pair(const Semilattice& a, int c, const std::vector<int>& i1,
                        const std::vector<int>& i2) {
  SummandPair sp{c, i1, i2};
  return detail::normalized(a, sp);
}

// downward (dir < 0) or upward (dir > 0) closure of both summands
void closure_check(const Semilattice& a, const SummandPair& sp, int dir,
                   BoundedReport& r) {
  r.ideals = true;
  for (int side = 1; side <= 2 && r.ideals; ++side) {
    const std::vector<int>& s = side == 1 ? sp.i1 : sp.i2;
    std::vector<char> in(a.size(), 0);
    for (int x : s) in[x] = 1;
    for (int x : s)
      for (int u = 0; u < a.size(); ++u) {
        bool related = dir < 0 ? a.leq(u, x) : a.leq(x, u);
        if (related && !in[u]) {
          r.ideals = false;
          r.ideals_witness = {x, u, side};
          break;
        }
      }
  }
}

}  // namespace

BoundedReport check_zero_case(const Semilattice& a, const std::vector<int>& i1,
                              const std::vector<int>& i2) {
  BoundedReport r;
  auto bot = a.bottom();
  if (!bot) {
    // still validate the input so malformed subsets are reported uniformly
    sorted_pair(a, 0, i1, i2);
    return r;
  }
  r.applicable = true;
  r.c = *bot;
  SummandPair sp = sorted_pair(a, *bot, i1, i2);

  r.abs = {};
  for (int side = 1; side <= 2 && r.abs.holds; ++side) {
    const std::vector<int>& own = side == 1 ? sp.i1 : sp.i2;
    const std::vector<int>& other = side == 1 ? sp.i2 : sp.i1;
    for (int x : own) {
      for (int y : own) {
        PartialElement rhs = pmeet(a, x, y);
        for (int z : other)
          if (!eq3(pmeet(a, x, a.join(y, z)), rhs)) {
            r.abs = {false, {x, y, z, side}};
            break;
          }
        if (!r.abs.holds) break;
      }
      if (!r.abs.holds) break;
    }
  }

  r.onto = {};
  for (int x = 0; x < a.size() && r.onto.holds; ++x) {
    bool found = false;
    for (auto it1 = sp.i1.begin(); it1 != sp.i1.end() && !found; ++it1)
      for (auto it2 = sp.i2.begin(); it2 != sp.i2.end() && !found; ++it2)
        found = a.join(*it1, *it2) == x;
    if (!found) r.onto = {false, {x}};
  }

  r.verdict = r.abs.holds && r.onto.holds;
  closure_check(a, sp, -1, r);
  return r;
}

BoundedReport check_one_case(const Semilattice& a, const std::vector<int>& i1,
                             const std::vector<int>& i2) {
  BoundedReport r;
  r.applicable = true;  // a finite nonempty join-semilattice always has a top
  r.c = a.top();
  SummandPair sp = sorted_pair(a, r.c, i1, i2);

  r.exi = {};
  for (int x1 : sp.i1) {
    for (int x2 : sp.i2)
      if (a.join(x1, x2) != r.c) {
        r.exi = {false, {x1, x2}};
        break;
      }
    if (!r.exi.holds) break;
  }

  r.onto = {};
  for (int x = 0; x < a.size() && r.onto.holds; ++x) {
    bool found = false;
    for (auto it1 = sp.i1.begin(); it1 != sp.i1.end() && !found; ++it1)
      for (auto it2 = sp.i2.begin(); it2 != sp.i2.end() && !found; ++it2)
        found = a.meet_raw(*it1, *it2) == x;
    if (!found) r.onto = {false, {x}};
  }

  r.mod1 = {};
  for (int x1 : sp.i1) {
    for (int x2 : sp.i2) {
      PartialElement m = pmeet(a, x1, x2);
      for (int y = 0; y < a.size(); ++y) {
        PartialElement lhs = pjoin(a, m, y);
        PartialElement rhs = pmeet(a, a.join(y, x1), a.join(y, x2));
        if (!eq3(lhs, rhs)) {
          r.mod1 = {false, {x1, x2, y}};
          break;
        }
      }
      if (!r.mod1.holds) break;
    }
    if (!r.mod1.holds) break;
  }

  r.verdict = r.exi.holds && r.onto.holds && r.mod1.holds;
  closure_check(a, sp, +1, r);
  return r;
}

}  // namespace slat
