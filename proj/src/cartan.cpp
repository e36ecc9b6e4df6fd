#include "qcm/cartan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {

CartanDatum::CartanDatum(std::string label, std::vector<std::vector<int>> cartan,
                         std::vector<Rational> multipliers)
    : label_(std::move(label)),
      cartan_(std::move(cartan)),
      multipliers_(std::move(multipliers)) {
  const int n = rank();
  for (int i = 1; i <= n; ++i) {
    if (a(i, i) != 2) throw Error("Cartan: a_ii must be 2");
    for (int j = 1; j <= n; ++j) {
      if (i != j && a(i, j) > 0) throw Error("Cartan: off-diagonal must be <= 0");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw Error("Cartan: zero pattern not symmetric");
      if (d(i) * a(i, j) != d(j) * a(j, i)) throw Error("Cartan: not symmetrizable");
    }
  }
}

int CartanDatum::m(int i, int j) const {
  if (i == j) return 1;
  switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw Error("Cartan: not of finite type");
  }
}

Root CartanDatum::simple_root(int i) const {
  Root r(rank(), 0);
  r[i - 1] = 1;
  return r;
}

Root CartanDatum::reflect(int i, const Root& root) const {
  // s_i(v) = v - <v, alpha_i^vee> alpha_i with <alpha_j, alpha_i^vee> = a_ij.
  long long pairing = 0;
  for (int j = 1; j <= rank(); ++j) pairing += static_cast<long long>(a(i, j)) * root[j - 1];
  Root out = root;
  out[i - 1] -= static_cast<int>(pairing);
  return out;
}

bool CartanDatum::is_positive(const Root& root) const {
  bool nonzero = false;
  for (int c : root) {
    if (c < 0) return false;
    if (c != 0) nonzero = true;
  }
  return nonzero;
}

std::string CartanDatum::to_json() const {
  std::ostringstream os;
  os << "{\"label\":\"" << label_ << "\",\"rank\":" << rank() << ",\"cartan\":[";
  for (int i = 1; i <= rank(); ++i) {
    os << (i > 1 ? "," : "") << "[";
    for (int j = 1; j <= rank(); ++j) os << (j > 1 ? "," : "") << a(i, j);
    os << "]";
  }
  os << "],\"multipliers\":[";
  for (int i = 1; i <= rank(); ++i) os << (i > 1 ? "," : "") << "\"" << d(i).str() << "\"";
  os << "]}";
  return os.str();
}

namespace {

struct SimpleData {
  std::vector<std::vector<int>> a;
  std::vector<Rational> d;
};

// In B2/B3 the doubly-laced edge sits between letters 1 and 2 with letter 1
// short, so that the B3 initial word 121232123 is reduced.
SimpleData simple_type(const std::string& t) {
  const Rational h(1, 2), th(1, 3), one(1);
  if (t == "A1") return {{{2}}, {one}};
  if (t == "A2") return {{{2, -1}, {-1, 2}}, {one, one}};
  if (t == "A3") return {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {one, one, one}};
  if (t == "A4")
    return {{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}},
            {one, one, one, one}};
  if (t == "B2") return {{{2, -2}, {-1, 2}}, {h, one}};
  if (t == "B3") return {{{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}}, {h, one, one}};
  if (t == "C3") return {{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, {h, h, one}};
  if (t == "D4")
    return {{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}},
            {one, one, one, one}};
  if (t == "G2") return {{{2, -3}, {-1, 2}}, {th, one}};
  throw UnknownType(t);
}

}  // namespace

CartanPtr make_cartan(const std::string& label) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : label) {
    if (c == 'x' || c == 'X') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);

  std::vector<std::vector<int>> a;
  std::vector<Rational> d;
  for (const auto& p : parts) {
    SimpleData s = simple_type(p);
    const size_t off = a.size(), add = s.a.size();
    for (auto& row : a) row.resize(off + add, 0);
    for (size_t i = 0; i < add; ++i) {
      std::vector<int> row(off + add, 0);
      for (size_t j = 0; j < add; ++j) row[off + j] = s.a[i][j];
      a.push_back(std::move(row));
      d.push_back(s.d[i]);
    }
  }
  if (a.size() > 4) throw UnknownType(label + " (total rank > 4)");
  return std::make_shared<CartanDatum>(label, std::move(a), std::move(d));
}

bool is_reduced(const CartanDatum& datum, const Word& word) {
  // Positive-root criterion: s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) > 0 for all k.
  for (size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 1 || word[k] > datum.rank()) return false;
    Root r = datum.simple_root(word[k]);
    for (size_t t = k; t-- > 0;) r = datum.reflect(word[t], r);
    if (!datum.is_positive(r)) return false;
  }
  return true;
}

int positive_root_count(const CartanDatum& datum) {
  // Orbit of the simple roots under all reflections, counting positives.
  std::vector<Root> todo;
  std::map<Root, bool> seen;
  for (int i = 1; i <= datum.rank(); ++i) {
    todo.push_back(datum.simple_root(i));
    seen[todo.back()] = true;
  }
  while (!todo.empty()) {
    Root r = todo.back();
    todo.pop_back();
    for (int i = 1; i <= datum.rank(); ++i) {
      Root s = datum.reflect(i, r);
      if (!seen.count(s)) {
        seen[s] = true;
        todo.push_back(s);
      }
    }
  }
  int count = 0;
  for (const auto& [root, _] : seen)
    if (datum.is_positive(root)) ++count;
  return count;
}

Word longest_word(const CartanDatum& datum) {
  const int n_pos = positive_root_count(datum);
  Word w;
  while (static_cast<int>(w.size()) < n_pos) {
    for (int i = 1; i <= datum.rank() + 1; ++i) {
      if (i > datum.rank()) throw Error("longest_word: no extension found");
      w.push_back(i);
      if (is_reduced(datum, w)) break;
      w.pop_back();
    }
  }
  return w;
}

std::vector<Root> root_images(const CartanDatum& datum, const Word& word) {
  std::vector<Root> images;
  images.reserve(datum.rank());
  for (int i = 1; i <= datum.rank(); ++i) {
    Root r = datum.simple_root(i);
    for (size_t t = word.size(); t-- > 0;) r = datum.reflect(word[t], r);
    images.push_back(std::move(r));
  }
  return images;
}

std::string word_str(const Word& word) {
  std::string s;
  for (int l : word) s += std::to_string(l);
  return s;
}

}  // namespace qcm
