// Compares the OpenMP kernels against their serial reference implementations
// on fixed workloads and verifies that both produce identical results.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "slat/congruence.hpp"
#include "slat/enumerate.hpp"
#include "slat/factorize.hpp"
#include "slat/semilattice.hpp"

namespace {

slat::Semilattice chain(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = std::max(i, j);
  return slat::Semilattice::from_flat_table(n, std::move(t));
}

template <class F>
double ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const std::string& label, double serial, double parallel, bool equal) {
  std::cout << label << "\n  serial   " << serial << " ms\n  parallel "
            << parallel << " ms\n  speedup  " << serial / parallel
            << "x\n  results  " << (equal ? "identical" : "DIFFER") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n\n";
#else
  std::cout << "built without OpenMP, both columns run serially\n\n";
#endif

  {
    slat::Semilattice a = slat::direct_product(chain(2), chain(5)).s;
    std::vector<slat::Congruence> s, p;
    double ts = ms([&] { s = slat::all_congruences_serial(a); });
    double tp = ms([&] { p = slat::all_congruences(a); });
    row("congruence scan on the 2x5 grid (10 elements, 115975 partitions)", ts,
        tp, s == p);
  }

  std::cout << "\n";
  {
    std::vector<slat::Semilattice> s, p;
    double ts = ms([&] { s = slat::enumerate_semilattices_serial(7); });
    double tp = ms([&] { p = slat::enumerate_semilattices(7); });
    row("corpus enumeration at 7 elements", ts, tp, s == p);
  }

  std::cout << "\n";
  {
    std::optional<slat::Witness> s, p;
    double ts = ms([&] { s = slat::independence_search_serial("Abs", 5); });
    double tp = ms([&] { p = slat::independence_search("Abs", 5); });
    bool equal = s.has_value() == p.has_value() &&
                 (!s || (s->a == p->a && s->sp.c == p->sp.c &&
                         s->sp.i1 == p->sp.i1 && s->sp.i2 == p->sp.i2));
    row("independence witness search for Abs up to 5 elements", ts, tp, equal);
  }

  return 0;
}
