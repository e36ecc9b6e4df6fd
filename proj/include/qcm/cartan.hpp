#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qcm/rational.hpp"

namespace qcm {

// Root in the simple-root basis. Positive iff all coefficients >= 0.
using Root = std::vector<int>;

// Cartan datum of a simple type of rank <= 4 or a product of such.
// Letters are 1-based (as in reduced words); storage is 0-based.
class CartanDatum {
public:
  CartanDatum(std::string label, std::vector<std::vector<int>> cartan,
              std::vector<Rational> multipliers);

  const std::string& label() const { return label_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  int a(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const Rational& d(int i) const { return multipliers_[i - 1]; }

  // Order of s_i s_j in W: 2, 3, 4 or 6 for finite types.
  int m(int i, int j) const;

  Root simple_root(int i) const;
  Root reflect(int i, const Root& root) const;
  bool is_positive(const Root& root) const;

  std::string to_json() const;

private:
  std::string label_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rational> multipliers_;
};

using CartanPtr = std::shared_ptr<const CartanDatum>;

// Supported labels: A1..A4, B2, B3, C3, D4, G2 and 'x'-separated products of
// total rank <= 4, e.g. "A2xA1".
CartanPtr make_cartan(const std::string& label);

using Word = std::vector<int>;

bool is_reduced(const CartanDatum& datum, const Word& word);

// Lexicographically smallest reduced word of the longest element (greedy
// descent, smallest admissible letter first).
Word longest_word(const CartanDatum& datum);

int positive_root_count(const CartanDatum& datum);

// The permutation of roots induced by the word, encoded as images of the
// simple roots. Equal images <=> equal Weyl group elements.
std::vector<Root> root_images(const CartanDatum& datum, const Word& word);

std::string word_str(const Word& word);

}  // namespace qcm
