#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qcm/cartan.hpp"

namespace qcm {

// A Coxeter move at a 0-based position: the subword there reads
// (a,b,a,b,...) of length len and is replaced by (b,a,b,a,...).
// kind = m_ab: 2 commutative, 3 braid, 4 doubly-laced, 6 triply-laced.
struct CoxeterMove {
  int pos = 0;
  int a = 0;
  int b = 0;
  int kind = 0;

  int length() const { return kind == 3 ? 3 : kind; }
  CoxeterMove reversed() const { return {pos, b, a, kind}; }

  friend bool operator==(const CoxeterMove& x, const CoxeterMove& y) {
    return x.pos == y.pos && x.a == y.a && x.b == y.b && x.kind == y.kind;
  }
  friend bool operator<(const CoxeterMove& x, const CoxeterMove& y) {
    return std::tie(x.pos, x.a, x.b, x.kind) < std::tie(y.pos, y.a, y.b, y.kind);
  }
};

std::vector<CoxeterMove> available_moves(const CartanDatum& datum, const Word& word);
Word apply_move(const CartanDatum& datum, const Word& word, const CoxeterMove& move);

struct WordGraph {
  CartanPtr datum;
  std::vector<Word> vertices;                 // index -> word
  std::map<Word, int> index;                  // word -> index
  // edges[v] lists (move, target vertex); both orientations stored.
  std::vector<std::vector<std::pair<CoxeterMove, int>>> edges;

  int edge_count() const;
  std::string to_dot() const;
  std::string to_json() const;
};

WordGraph build_word_graph(const CartanPtr& datum, const Word& seed,
                           size_t max_vertices = 1u << 20);

struct QuotientGraph {
  CartanPtr datum;
  std::vector<std::vector<int>> classes;      // class -> word-graph vertex ids
  std::vector<int> class_of;                  // vertex -> class
  // Quotient edges: orbits of non-commutative edges under commuting squares.
  struct Edge {
    int from = 0, to = 0;
    int kind = 0;
    int rep_vertex = 0;       // a word-graph vertex carrying the move
    CoxeterMove rep_move;
  };
  std::vector<Edge> edge_list;

  bool is_cycle() const;      // single cycle through all classes
  std::string to_dot(const WordGraph& g) const;
  std::string to_json(const WordGraph& g) const;
};

QuotientGraph quotient(const WordGraph& graph);

// Plain-text stack notation: letters that commute past each other share a
// column, e.g. the class of 213213 in A3 renders as 2(13)2(13).
std::string stack_notation(const CartanDatum& datum, const Word& representative);

int last_letter(const Word& word);

// Number of words on the path whose last letter is i.
int m_count(const std::vector<Word>& path, int i);

// Test oracle: enumerate all |I|^n letter sequences and keep the reduced
// words inducing the same root permutation as `word`.
std::vector<Word> enumerate_words_brute_force(const CartanDatum& datum, const Word& word);

}  // namespace qcm
