#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcm/errors.hpp"
#include "qcm/lusztig.hpp"

using namespace qcm;

TEST_CASE("classical braid transform: worked value and involution") {
  const std::array<Rational, 3> in{Rational(1), Rational(1), Rational(1)};
  const auto out = classical_lusztig_braid(in);
  CHECK(out[0] == Rational(1, 2));
  CHECK(out[1] == Rational(2));
  CHECK(out[2] == Rational(1, 2));

  std::mt19937 rng(61);
  std::uniform_int_distribution<int> d(1, 12);
  for (int t = 0; t < 1000; ++t) {
    std::array<Rational, 3> x{Rational(d(rng), d(rng)), Rational(d(rng), d(rng)),
                              Rational(d(rng), d(rng))};
    CHECK(classical_braid_roundtrip(x) == x);
  }
}

TEST_CASE("classical doubly-laced transform: worked value and involution") {
  const std::array<Rational, 4> in{Rational(1), Rational(1), Rational(1), Rational(1)};
  const auto out = classical_lusztig_doubly(in);
  CHECK(out[0] == Rational(5, 3));
  CHECK(out[1] == Rational(1, 5));
  CHECK(out[2] == Rational(1, 3));
  CHECK(out[3] == Rational(9, 5));

  // Applying the move to the moved word undoes it; the second application
  // runs in the reverse chirality.
  std::mt19937 rng(67);
  std::uniform_int_distribution<int> d(1, 12);
  for (int t = 0; t < 1000; ++t) {
    std::array<Rational, 4> x{Rational(d(rng), d(rng)), Rational(d(rng), d(rng)),
                              Rational(d(rng), d(rng)), Rational(d(rng), d(rng))};
    CHECK(classical_doubly_roundtrip(x) == x);
  }
}

TEST_CASE("local rank-2 seeds carry the stated commutation relations") {
  auto s = braid_local_seed();
  // alpha = X_{2,3}, beta = X_5, gamma = X_3 (abstract ids 0,1,2).
  LatticeVector a = lattice_zero(*s), b = lattice_zero(*s), g = lattice_zero(*s);
  a[0] = a[1] = 1;
  b[2] = 1;
  g[1] = 1;
  // alpha beta = q^2 beta alpha  <=> (a,b) = -1
  CHECK(skew_form(*s, a, b) == Rational(-1));
  CHECK(skew_form(*s, g, a) == Rational(-1));  // gamma alpha = q^2 alpha gamma
  CHECK(skew_form(*s, b, g) == Rational(0));

  auto ds = doubly_local_seed();
  LatticeVector da = lattice_zero(*ds), db = lattice_zero(*ds), dg = lattice_zero(*ds),
                dd = lattice_zero(*ds);
  da[0] = da[1] = 1;
  db[2] = db[3] = 1;
  dg[1] = 1;
  dd[3] = 1;
  // alpha gamma = q^{-1} gamma alpha; beta gamma = q^2 gamma beta;
  // beta delta = q^{-2} delta beta; alpha-beta, alpha-delta, gamma-delta commute.
  CHECK(skew_form(*ds, da, dg) == Rational(1, 2));
  CHECK(skew_form(*ds, db, dg) == Rational(-1));
  CHECK(skew_form(*ds, db, dd) == Rational(1));
  CHECK(skew_form(*ds, da, db) == Rational(0));
  CHECK(skew_form(*ds, da, dd) == Rational(0));
  CHECK(skew_form(*ds, dg, dd) == Rational(0));
}

TEST_CASE("quantum braid transform: two routes, involution, commutations") {
  auto rep = rank2_quantum_lusztig(3);
  INFO(rep.detail);
  CHECK(rep.formula_equals_mutation);
  CHECK(rep.involutive);
  CHECK(rep.commutation_pattern);
  CHECK(rep.pass());
}

TEST_CASE("quantum doubly-laced transform: two routes, involution, commutations") {
  auto rep = rank2_quantum_lusztig(4);
  INFO(rep.detail);
  CHECK(rep.rs_commute);
  CHECK(rep.formula_equals_mutation);
  CHECK(rep.involutive);
  CHECK(rep.commutation_pattern);
}

TEST_CASE("classical transforms agree with the mutation shadow") {
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> d(1, 10);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> b3{Rational(d(rng), d(rng)), Rational(d(rng), d(rng)),
                             Rational(d(rng), d(rng))};
    CHECK(rank2_classical_agreement(3, b3));
    std::vector<Rational> b4{Rational(d(rng), d(rng)), Rational(d(rng), d(rng)),
                             Rational(d(rng), d(rng)), Rational(d(rng), d(rng))};
    CHECK(rank2_classical_agreement(4, b4));
  }
}

TEST_CASE("Lusztig coordinates on the A3 example") {
  auto a3 = make_cartan("A3");
  auto q = basic_quiver(a3, {1, 2, 1, 3, 2, 1});
  auto alphas = lusztig_coordinates(q);
  REQUIRE(alphas.size() == 6);
  auto expect = [&](const char* expr) {
    return parse_expr(q, expr).terms().begin()->first;
  };
  CHECK(alphas[3] == expect("X_{9}"));
  CHECK(alphas[1] == expect("X_{6,7}"));
  CHECK(alphas[4] == expect("X_{7}"));
  CHECK(alphas[0] == expect("X_{2,3,4}"));
  CHECK(alphas[2] == expect("X_{3,4}"));
  CHECK(alphas[5] == expect("X_{4}"));
}

TEST_CASE("oriented amalgamation cancels or solidifies the right dashed arrows") {
  auto a3 = make_cartan("A3");
  auto q = basic_quiver(a3, {1, 2, 1, 3, 2, 1});
  auto tilde = oriented_basic_quiver(q, default_orientation(*a3));
  // Right frozen vertices 4,7,9 (1-based): the dashed 4->7, 7->9 cancel.
  CHECK(tilde->w(3, 6) == Rational(0));
  CHECK(tilde->w(6, 8) == Rational(0));
  // Left dashed arrows are untouched.
  CHECK(tilde->w(7, 4) == Rational(1, 2));  // 8 -> 5

  // Opposite orientation solidifies instead.
  OrientedDynkin H;
  H.edges = {{1, 2}, {2, 3}};
  auto tilde2 = oriented_basic_quiver(q, H);
  CHECK(tilde2->w(3, 6) == Rational(1));
  CHECK(tilde2->w(6, 8) == Rational(1));

  // B3: the right dashed arrows already run from higher to lower level, so
  // the default orientation solidifies them; the opposite one cancels them.
  auto b3 = make_cartan("B3");
  auto qb = basic_quiver(b3, {1, 2, 1, 2, 3, 2, 1, 2, 3});
  auto tildeb = oriented_basic_quiver(qb, default_orientation(*b3));
  CHECK(tildeb->w(8, 3) == Rational(1));   // 9 -> 4 solid
  CHECK(tildeb->w(11, 8) == Rational(1));  // 12 -> 9 solid
  OrientedDynkin Hb;
  Hb.edges = {{1, 2}, {2, 3}};
  auto tildeb2 = oriented_basic_quiver(qb, Hb);
  CHECK(tildeb2->w(8, 3) == Rational(0));
  CHECK(tildeb2->w(11, 8) == Rational(0));
}
