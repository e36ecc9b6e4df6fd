#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcm/errors.hpp"
#include "qcm/qtorus.hpp"

using namespace qcm;

namespace {

SeedPtr a3_seed() {
  return basic_quiver(make_cartan("A3"), {1, 2, 1, 3, 2, 1});
}
SeedPtr b3_seed() {
  return basic_quiver(make_cartan("B3"), {1, 2, 1, 2, 3, 2, 1, 2, 3});
}

TorusElement random_element(std::mt19937& rng, const SeedPtr& seed, int terms) {
  TorusElement f(seed);
  std::uniform_int_distribution<int> expo(-2, 2), coeff(-3, 3), qe(-2, 2);
  for (int t = 0; t < terms; ++t) {
    LatticeVector v = lattice_zero(*seed);
    for (int i = 0; i < seed->size(); ++i) v[i] = expo(rng);
    const int c = coeff(rng);
    if (c == 0) continue;
    f.add_term(v, QCoefficient::q_power(Rational(qe(rng), 2), c));
  }
  return f;
}

}  // namespace

TEST_CASE("skew form from the exchange data") {
  auto q = a3_seed();
  // w_23 = b_23 = 1 on the A3 quiver (1-based ids 2,3).
  CHECK(skew_form(*q, lattice_unit(*q, 1), lattice_unit(*q, 2)) == Rational(1));
  CHECK(skew_form(*q, lattice_unit(*q, 1), lattice_unit(*q, 1)) == Rational(0));
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    LatticeVector a = lattice_zero(*q), b = lattice_zero(*q);
    for (int i = 0; i < q->size(); ++i) {
      a[i] = static_cast<int>(rng() % 5) - 2;
      b[i] = static_cast<int>(rng() % 5) - 2;
    }
    CHECK(skew_form(*q, a, b) == -skew_form(*q, b, a));
  }
}

TEST_CASE("multiplication: inverses, commutation, ordered basis") {
  auto q = a3_seed();
  auto X = [&](int v) { return TorusElement::generator(q, v - 1); };
  auto Xinv = [&](int v) { return TorusElement::generator(q, v - 1, -1); };

  CHECK(multiply(X(2), Xinv(2)) == TorusElement::unit(q));

  // X_i X_j = q^{-2 w_ij} X_j X_i.
  const TorusElement lhs = multiply(X(2), X(3));
  const TorusElement rhs = multiply(X(3), X(2)).scaled(QCoefficient::q_power(Rational(-2)));
  CHECK(lhs == rhs);

  // X_2 X_3 = q^{-w_23} X_{2,3}.
  LatticeVector v23 = lattice_zero(*q);
  v23[1] = v23[2] = 1;
  CHECK(multiply(X(2), X(3)) ==
        TorusElement::monomial(q, v23, QCoefficient::q_power(Rational(-1))));
}

TEST_CASE("associativity on random triples") {
  auto q = b3_seed();
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    auto a = random_element(rng, q, 3);
    auto b = random_element(rng, q, 3);
    auto c = random_element(rng, q, 3);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("parallel product equals the serial reference") {
  auto q = b3_seed();
  std::mt19937 rng(23);
  auto a = random_element(rng, q, 90);
  auto b = random_element(rng, q, 90);
  CHECK(multiply(a, b) == multiply_serial(a, b));
}

TEST_CASE("star structure") {
  auto q = a3_seed();
  std::mt19937 rng(5);
  // Basis vectors are fixed points.
  for (int t = 0; t < 20; ++t) {
    LatticeVector v = lattice_zero(*q);
    for (int i = 0; i < q->size(); ++i) v[i] = static_cast<int>(rng() % 5) - 2;
    auto m = TorusElement::monomial(q, v);
    CHECK(m.star() == m);
  }
  // Anti-automorphism: star(fg) = star(g) star(f).
  for (int t = 0; t < 50; ++t) {
    auto f = random_element(rng, q, 4);
    auto g = random_element(rng, q, 4);
    CHECK(multiply(f, g).star() == multiply(g.star(), f.star()));
  }
  // (q + q^{-1}) X_v is a fixed point.
  auto sym = TorusElement::monomial(q, lattice_unit(*q, 0), QCoefficient::quantum_two(Rational(1)));
  CHECK(sym.star() == sym);
}

TEST_CASE("q binomials") {
  CHECK(q_binomial(2, 1, Rational(1)) == QCoefficient::quantum_two(Rational(1)));
  CHECK(q_binomial(2, 1, Rational(1, 2)) == QCoefficient::quantum_two(Rational(1, 2)));
  CHECK(q_binomial(5, 0, Rational(1)) == QCoefficient(1));
  CHECK(q_binomial(4, 4, Rational(1)) == QCoefficient(1));
  // Palindromic and integral at q = 1.
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m) {
      auto b = q_binomial(n, m, Rational(1, 2));
      CHECK(b.palindromic());
      long long binom = 1;
      for (int t = 0; t < m; ++t) binom = binom * (n - t) / (t + 1);
      CHECK(b.eval_at_one() == binom);
    }
}

TEST_CASE("parser and printer") {
  auto q = b3_seed();
  auto f = parse_expr(q, "X_{2^2,8,11,12}");
  LatticeVector v = lattice_zero(*q);
  v[1] = 2;
  v[7] = v[10] = v[11] = 1;
  CHECK(f == TorusElement::monomial(q, v));

  CHECK(parse_expr(q, "X_{1}^{-1}") == parse_expr(q, "X_{1^-1}"));
  CHECK(parse_expr(q, "X_{1}^{-1}") == TorusElement::generator(q, 0, -1));

  auto g = parse_expr(q, "[2] X_{3,9,12}");
  LatticeVector vg = lattice_zero(*q);
  vg[2] = vg[8] = vg[11] = 1;
  CHECK(g == TorusElement::monomial(q, vg, QCoefficient::quantum_two(Rational(1, 2))));

  CHECK(parse_expr(q, "X_{2^2,7^{-2},8^{-1},9^{-2},11^{-1}}").term_count() == 1);
  CHECK(parse_expr(q, "1") == TorusElement::unit(q));
  CHECK(parse_expr(q, "q^{1/2} X_{5} - X_{5}").term_count() == 1);
  CHECK(parse_expr(q, "X_{5} - X_{5}").is_zero());
  CHECK(parse_expr(q, "(q + q^{-1} + 2) X_{4}").term_count() == 1);

  CHECK_THROWS_AS(parse_expr(q, "X_{99}"), ParseError);
  CHECK_THROWS_AS(parse_expr(q, "X_{1"), ParseError);
  CHECK_THROWS_AS(parse_expr(q, "Y_{1}"), ParseError);

  // Round trip on random elements.
  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    auto h = random_element(rng, q, 5);
    CHECK(parse_expr(q, format_expr(h)) == h);
  }
}

TEST_CASE("right division by binomials") {
  auto q = a3_seed();
  const int k = 1;  // vertex 2, mutable
  const Rational u(1);

  auto binom = TorusElement::unit(q);
  binom.add_term(lattice_unit(*q, k), QCoefficient::q_power(u));

  CHECK(right_divide_binomial(binom, k, u) == TorusElement::unit(q));

  std::mt19937 rng(31);
  for (int t = 0; t < 100; ++t) {
    auto g = random_element(rng, q, 4);
    if (g.is_zero()) continue;
    auto prod = multiply(g, binom);
    CHECK(right_divide_binomial(prod, k, u) == g);
  }

  CHECK_THROWS_AS(right_divide_binomial(TorusElement::generator(q, 4), k, u), NotDivisible);
}

TEST_CASE("classical evaluation") {
  auto q = a3_seed();
  std::vector<BigRational> vals(q->size(), BigRational(1));
  vals[0] = BigRational(2);
  vals[1] = BigRational(1, 3);
  auto f = parse_expr(q, "X_{1,2} + q X_{1}^{-1}");
  CHECK(f.eval_classical(vals) == BigRational(2) / BigRational(3) + BigRational(1, 2));
}

TEST_CASE("q -> 1 specialization of the product is commutative") {
  auto q = b3_seed();
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> d(1, 9);
  for (int t = 0; t < 30; ++t) {
    auto f = random_element(rng, q, 3);
    auto g = random_element(rng, q, 3);
    std::vector<BigRational> vals;
    for (int i = 0; i < q->size(); ++i) vals.push_back(BigRational(d(rng), d(rng)));
    const BigRational lhs = multiply(f, g).eval_classical(vals);
    CHECK(lhs == f.eval_classical(vals) * g.eval_classical(vals));
    CHECK(lhs == multiply(g, f).eval_classical(vals));
  }
}

TEST_CASE("q X_i X_j is self-adjoint across an arrow of weight one") {
  auto q = a3_seed();
  // Arrow 2 -> 3 carries w = 1, so q X_2 X_3 = X_{2,3} is a fixed point.
  auto f = multiply(TorusElement::generator(q, 1), TorusElement::generator(q, 2))
               .scaled(QCoefficient::q_power(Rational(1)));
  CHECK(f.star() == f);
  LatticeVector v23 = lattice_zero(*q);
  v23[1] = v23[2] = 1;
  CHECK(f == TorusElement::monomial(q, v23));
}
