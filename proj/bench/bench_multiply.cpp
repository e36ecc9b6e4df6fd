// Benchmark: OpenMP quantum-torus product and reduced-word enumeration
// against their serial references.
#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcm/qtorus.hpp"
#include "qcm/words.hpp"

using namespace qcm;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

TorusElement random_element(std::mt19937& rng, const SeedPtr& seed, int terms) {
  TorusElement f(seed);
  std::uniform_int_distribution<int> expo(-3, 3), coeff(-4, 4), qe(-3, 3);
  while (static_cast<int>(f.term_count()) < terms) {
    LatticeVector v = lattice_zero(*seed);
    for (int i = 0; i < seed->size(); ++i) v[i] = expo(rng);
    const int c = coeff(rng);
    if (c != 0) f.add_term(v, QCoefficient::q_power(Rational(qe(rng), 2), c));
  }
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  const int terms = argc > 1 ? std::atoi(argv[1]) : 600;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (no OpenMP)\n";
#endif

  auto seed = basic_quiver(make_cartan("B3"), {1, 2, 1, 2, 3, 2, 1, 2, 3});
  std::mt19937 rng(1);
  auto a = random_element(rng, seed, terms);
  auto b = random_element(rng, seed, terms);
  std::cout << "torus product, " << a.term_count() << " x " << b.term_count()
            << " terms, " << reps << " reps\n";

  TorusElement ref, par;
  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) ref = multiply_serial(a, b);
  const double ts = seconds(t0);
  t0 = Clock::now();
  for (int r = 0; r < reps; ++r) par = multiply(a, b);
  const double tp = seconds(t0);
  std::cout << "  serial:  " << ts / reps << " s/rep\n"
            << "  openmp:  " << tp / reps << " s/rep  (speedup " << ts / tp << "x)\n"
            << "  results equal: " << (ref == par ? "yes" : "NO") << "\n";

  auto b3 = make_cartan("B3");
  const Word w0 = longest_word(*b3);
  std::cout << "brute-force reduced word enumeration (3^9 sequences)\n";
  t0 = Clock::now();
  const auto words = enumerate_words_brute_force(*b3, w0);
  std::cout << "  " << words.size() << " words in " << seconds(t0) << " s\n";
  return ref == par ? 0 : 1;
}
