#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcm/cartan.hpp"
#include "qcm/errors.hpp"

using namespace qcm;

TEST_CASE("standard data tables") {
  auto a2 = make_cartan("A2");
  CHECK(a2->a(1, 1) == 2);
  CHECK(a2->a(1, 2) == -1);
  CHECK(a2->a(2, 1) == -1);
  CHECK(a2->d(1) == Rational(1));

  auto b3 = make_cartan("B3");
  CHECK(b3->d(1) == Rational(1, 2));
  CHECK(b3->d(2) == Rational(1));
  CHECK(b3->a(1, 2) * b3->a(2, 1) == 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(b3->d(i) * b3->a(i, j) == b3->d(j) * b3->a(j, i));

  auto g2 = make_cartan("G2");
  CHECK(g2->d(1) == Rational(1, 3));
  CHECK(g2->m(1, 2) == 6);

  auto prod = make_cartan("A1xA1");
  CHECK(prod->a(1, 2) == 0);
  CHECK(prod->rank() == 2);

  CHECK_THROWS_AS(make_cartan("E8"), UnknownType);
  CHECK_THROWS_AS(make_cartan("A3xA2"), UnknownType);
}

TEST_CASE("reflections") {
  auto a2 = make_cartan("A2");
  Root a1 = a2->simple_root(1);
  CHECK(a2->reflect(1, a1) == Root{-1, 0});
  CHECK(a2->reflect(1, a2->simple_root(2)) == Root{1, 1});

  auto b2 = make_cartan("B2");
  // s_2(alpha_1) = alpha_1 - a_21 alpha_2 = alpha_1 + alpha_2
  CHECK(b2->reflect(2, b2->simple_root(1)) == Root{1, 1});
  // s_1(alpha_2) = alpha_2 + 2 alpha_1
  CHECK(b2->reflect(1, b2->simple_root(2)) == Root{2, 1});

  // Involution on the whole small orbit.
  auto b3 = make_cartan("B3");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Root r = b3->simple_root(j);
      CHECK(b3->reflect(i, b3->reflect(i, r)) == r);
    }
}

TEST_CASE("is_reduced") {
  auto a2 = make_cartan("A2");
  CHECK(is_reduced(*a2, {1, 2, 1}));
  CHECK_FALSE(is_reduced(*a2, {1, 1}));
  CHECK_FALSE(is_reduced(*a2, {1, 2, 1, 2}));

  auto b2 = make_cartan("B2");
  CHECK(is_reduced(*b2, {1, 2, 1, 2}));
  CHECK_FALSE(is_reduced(*b2, {1, 2, 1, 2, 1}));

  auto b3 = make_cartan("B3");
  CHECK(is_reduced(*b3, {1, 2, 1, 2, 3, 2, 1, 2, 3}));
}

TEST_CASE("longest words and positive root counts") {
  CHECK(positive_root_count(*make_cartan("A3")) == 6);
  CHECK(positive_root_count(*make_cartan("B3")) == 9);
  CHECK(positive_root_count(*make_cartan("G2")) == 6);
  CHECK(positive_root_count(*make_cartan("D4")) == 12);

  CHECK(longest_word(*make_cartan("A1")) == Word{1});
  CHECK(longest_word(*make_cartan("A3")) == Word{1, 2, 1, 3, 2, 1});

  auto b3 = make_cartan("B3");
  Word w0 = longest_word(*b3);
  CHECK(w0.size() == 9);
  CHECK(is_reduced(*b3, w0));

  auto prod = make_cartan("A2xA1");
  Word wp = longest_word(*prod);
  CHECK(wp.size() == 4);
}
