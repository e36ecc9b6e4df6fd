#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcm/errors.hpp"
#include "qcm/words.hpp"

using namespace qcm;

TEST_CASE("available moves and application") {
  auto a2 = make_cartan("A2");
  auto moves = available_moves(*a2, {1, 2, 1});
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].kind == 3);
  CHECK(moves[0].pos == 0);
  CHECK(apply_move(*a2, {1, 2, 1}, moves[0]) == Word{2, 1, 2});

  auto prod = make_cartan("A1xA1");
  auto cm = available_moves(*prod, {1, 2});
  REQUIRE(cm.size() == 1);
  CHECK(cm[0].kind == 2);
  CHECK(apply_move(*prod, {1, 2}, cm[0]) == Word{2, 1});

  auto b2 = make_cartan("B2");
  auto dm = available_moves(*b2, {1, 2, 1, 2});
  REQUIRE(dm.size() == 1);
  CHECK(dm[0].kind == 4);
  CHECK(apply_move(*b2, {1, 2, 1, 2}, dm[0]) == Word{2, 1, 2, 1});

  CHECK_THROWS_AS(apply_move(*a2, {1, 2, 1}, CoxeterMove{1, 1, 2, 3}), InvalidMove);
}

TEST_CASE("moves are involutive on random words") {
  auto b3 = make_cartan("B3");
  Word w0 = longest_word(*b3);
  std::mt19937 rng(7);
  Word w = w0;
  for (int t = 0; t < 200; ++t) {
    auto moves = available_moves(*b3, w);
    REQUIRE_FALSE(moves.empty());
    const CoxeterMove m = moves[rng() % moves.size()];
    const Word u = apply_move(*b3, w, m);
    CHECK(is_reduced(*b3, u));
    CHECK(apply_move(*b3, u, m.reversed()) == w);
    w = u;
  }
}

TEST_CASE("word graph counts match brute force") {
  auto a3 = make_cartan("A3");
  auto g = build_word_graph(a3, longest_word(*a3));
  CHECK(g.vertices.size() == 16);
  CHECK(enumerate_words_brute_force(*a3, longest_word(*a3)).size() == 16);

  auto b3 = make_cartan("B3");
  auto gb = build_word_graph(b3, longest_word(*b3));
  CHECK(gb.vertices.size() == 42);
  CHECK(enumerate_words_brute_force(*b3, longest_word(*b3)).size() == 42);

  auto a1 = make_cartan("A1");
  auto ga = build_word_graph(a1, {1});
  CHECK(ga.vertices.size() == 1);
  CHECK(ga.edge_count() == 0);
}

TEST_CASE("quotient graphs are the expected cycles") {
  auto a3 = make_cartan("A3");
  auto g = build_word_graph(a3, longest_word(*a3));
  auto q = quotient(g);
  CHECK(q.classes.size() == 8);
  CHECK(q.edge_list.size() == 8);
  CHECK(q.is_cycle());

  auto b3 = make_cartan("B3");
  auto gb = build_word_graph(b3, longest_word(*b3));
  auto qb = quotient(gb);
  CHECK(qb.classes.size() == 14);
  CHECK(qb.edge_list.size() == 14);
  CHECK(qb.is_cycle());

  // Decomposable rank 3: 6-, 8- and 10-gon word graphs.
  auto p1 = make_cartan("A1xA1xA1");
  CHECK(build_word_graph(p1, longest_word(*p1)).vertices.size() == 6);
  auto p2 = make_cartan("A2xA1");
  auto gp2 = build_word_graph(p2, longest_word(*p2));
  CHECK(gp2.vertices.size() == 8);
  auto p3 = make_cartan("B2xA1");
  CHECK(build_word_graph(p3, longest_word(*p3)).vertices.size() == 10);

  // A2xA1 quotient: two classes joined by the two braid edges.
  auto qp2 = quotient(gp2);
  CHECK(qp2.classes.size() == 2);
  CHECK(qp2.edge_list.size() == 2);

  // Quotient of a quotient is idempotent: contracting nothing changes nothing.
  for (const auto& cls : qb.classes)
    for (int v : cls) CHECK(qb.class_of[v] == qb.class_of[cls.front()]);
}

TEST_CASE("stack notation") {
  auto a3 = make_cartan("A3");
  CHECK(stack_notation(*a3, {2, 1, 3, 2, 1, 3}) == "2(13)2(13)");
  CHECK(stack_notation(*a3, {2, 1, 3, 2, 3, 1}) == "2(13)2(13)");
  CHECK(stack_notation(*a3, {2, 1, 2, 3, 2, 1}) == "212321");

  auto b3 = make_cartan("B3");
  CHECK(stack_notation(*b3, {2, 1, 3, 2, 1, 3, 2, 1, 3}) == "2(13)2(13)2(13)");
}

TEST_CASE("last letter and m-counts") {
  CHECK(last_letter({1, 2, 1}) == 1);
  std::vector<Word> path{{1, 2, 1, 3, 2, 1}, {1, 2, 3, 1, 2, 1}};
  CHECK(m_count(path, 1) == 2);
  CHECK(m_count(path, 2) == 0);

  // The A3 octagon has two classes per last letter 1 and 3, four ending in
  // last letter... count directly from the quotient graph.
  auto a3 = make_cartan("A3");
  auto g = build_word_graph(a3, longest_word(*a3));
  auto q = quotient(g);
  std::vector<Word> reps;
  for (const auto& cls : q.classes) reps.push_back(g.vertices[cls.front()]);
  int m2 = m_count(reps, 2);
  CHECK(m2 >= 1);  // classes 2(13)2(13) and (13)2(13)2 end differently
}

TEST_CASE("is_reduced invariant under every move, graph edges involutive") {
  auto b3 = make_cartan("B3");
  auto g = build_word_graph(b3, longest_word(*b3));
  for (size_t v = 0; v < g.vertices.size(); ++v)
    for (const auto& [m, u] : g.edges[v]) {
      CHECK(is_reduced(*b3, g.vertices[u]));
      CHECK(apply_move(*b3, g.vertices[u], m.reversed()) == g.vertices[v]);
    }
}

TEST_CASE("size limit on graph construction") {
  auto b3 = make_cartan("B3");
  CHECK_THROWS_AS(build_word_graph(b3, longest_word(*b3), 10), SizeLimit);
}
