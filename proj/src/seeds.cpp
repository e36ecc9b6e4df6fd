#include "qcm/seeds.hpp"

#include <algorithm>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {

ClusterSeed::ClusterSeed(CartanPtr datum, int n_vertices)
    : datum_(std::move(datum)),
      n_(n_vertices),
      frozen_(n_vertices, 1),
      b_(n_vertices, std::vector<Rational>(n_vertices, Rational(0))),
      d_(n_vertices, Rational(1)),
      eta_(n_vertices, 0) {}

std::vector<int> ClusterSeed::mutable_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (!frozen_[v]) out.push_back(v);
  return out;
}

void ClusterSeed::add_arrow_weight(int i, int j, const Rational& weight) {
  b_[i][j] += weight / d_[i];
  b_[j][i] -= weight / d_[j];
}

std::string ClusterSeed::label_of(int v) const {
  for (size_t lvl = 0; lvl < level_slots_.size(); ++lvl) {
    const auto& slots = level_slots_[lvl];
    for (size_t s = 0; s < slots.size(); ++s)
      if (slots[s] == v)
        return "f" + std::to_string(lvl + 1) + "^" + std::to_string(s);
  }
  return "v" + std::to_string(v + 1);
}

bool ClusterSeed::skew_symmetrizable() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (d_[i] * b_[i][j] != -(d_[j] * b_[j][i])) return false;
  return true;
}

bool ClusterSeed::same_shape(const ClusterSeed& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i) {
    if (frozen_[i] != o.frozen_[i] || d_[i] != o.d_[i]) return false;
    for (int j = 0; j < n_; ++j)
      if (b_[i][j] != o.b_[i][j]) return false;
  }
  return true;
}

std::string ClusterSeed::to_dot() const {
  std::ostringstream os;
  os << "digraph seed {\n  rankdir=LR;\n";
  const Rational half(1, 2);
  for (int v = 0; v < n_; ++v) {
    os << "  v" << v + 1 << " [label=\"" << v + 1 << "\",shape="
       << (frozen_[v] ? "square" : "circle") << "];\n";
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const Rational c = (d_[i] == d_[j]) ? b_[i][j] : w(i, j);
      if (c.sign() <= 0) continue;
      os << "  v" << i + 1 << " -> v" << j + 1 << " [";
      const bool short_pair = d_[i] < Rational(1) && d_[j] < Rational(1);
      os << "penwidth=" << (short_pair ? "1" : "2");
      if (!c.is_integer()) os << ",style=dashed";
      if (c != Rational(1) && c != half) os << ",label=\"" << c.str() << "\"";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

std::string ClusterSeed::to_json() const {
  std::ostringstream os;
  os << "{\"n\":" << n_ << ",\"frozen\":[";
  bool first = true;
  for (int v = 0; v < n_; ++v)
    if (frozen_[v]) {
      os << (first ? "" : ",") << v + 1;
      first = false;
    }
  os << "],\"B\":[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? "," : "") << "[";
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << "\"" << b_[i][j].str() << "\"";
    os << "]";
  }
  os << "],\"D\":[";
  for (int v = 0; v < n_; ++v) os << (v ? "," : "") << "\"" << d_[v].str() << "\"";
  os << "],\"labels\":[";
  for (int v = 0; v < n_; ++v) os << (v ? "," : "") << "\"" << label_of(v) << "\"";
  os << "]";
  if (!word_.empty()) os << ",\"word\":\"" << word_str(word_) << "\"";
  os << "}";
  return os.str();
}

ClusterSeed elementary_quiver(const CartanPtr& datum, int i) {
  const int rank = datum->rank();
  // Level-ordered ids; level i holds (i_l, i_r).
  std::vector<int> first_of_level(rank + 1, 0);
  int n = 0;
  for (int l = 1; l <= rank; ++l) {
    first_of_level[l] = n;
    n += (l == i) ? 2 : 1;
  }
  ClusterSeed seed(datum, n);
  for (int l = 1; l <= rank; ++l) {
    const int v = first_of_level[l];
    seed.set_eta(v, l);
    seed.set_d(v, datum->d(l));
    if (l == i) {
      seed.set_eta(v + 1, l);
      seed.set_d(v + 1, datum->d(l));
    }
  }
  const int il = first_of_level[i], ir = il + 1;
  auto weight_of = [&](int u, int v, const Rational& c) {
    // Adjacency weight c converts to the skew form via Def. of the quiver.
    return seed.d(u) == seed.d(v) ? seed.d(u) * c : c;
  };
  const Rational one(1);
  seed.add_arrow_weight(il, ir, weight_of(il, ir, one));
  for (int j = 1; j <= rank; ++j) {
    if (j == i || datum->a(i, j) == 0) continue;
    const Rational c = datum->d(i) * Rational(datum->a(i, j)) / Rational(2);
    const int vj = first_of_level[j];
    seed.add_arrow_weight(il, vj, weight_of(il, vj, c));
    seed.add_arrow_weight(vj, ir, weight_of(vj, ir, c));
  }
  seed.level_slots().resize(rank);
  for (int l = 1; l <= rank; ++l) {
    if (l == i)
      seed.level_slots()[l - 1] = {il, ir};
    else
      seed.level_slots()[l - 1] = {first_of_level[l]};
  }
  seed.set_word({i});
  return seed;
}

SeedPtr basic_quiver(const CartanPtr& datum, const Word& word) {
  if (!is_reduced(*datum, word)) throw Error("basic_quiver: word is not reduced");
  const int rank = datum->rank();
  std::vector<int> occurrences(rank + 1, 0);
  for (int l : word) ++occurrences[l];

  // Provisional ids: level l gets occurrences[l] + 1 slots.
  std::vector<std::vector<int>> slots(rank);
  int n = 0;
  for (int l = 1; l <= rank; ++l)
    for (int s = 0; s <= occurrences[l]; ++s) slots[l - 1].push_back(n++);

  ClusterSeed full(datum, n);
  for (int l = 1; l <= rank; ++l)
    for (int id : slots[l - 1]) {
      full.set_eta(id, l);
      full.set_d(id, datum->d(l));
    }

  std::vector<int> rightmost(rank + 1, 0);  // slot index of current rightmost
  auto weight_of = [&](int u, int v, const Rational& c) {
    return full.d(u) == full.d(v) ? full.d(u) * c : c;
  };
  for (int p = 0; p < static_cast<int>(word.size()); ++p) {
    const int i = word[p];
    const int il = slots[i - 1][rightmost[i]];
    const int ir = slots[i - 1][rightmost[i] + 1];
    full.add_arrow_weight(il, ir, weight_of(il, ir, Rational(1)));
    for (int j = 1; j <= rank; ++j) {
      if (j == i || datum->a(i, j) == 0) continue;
      const Rational c = datum->d(i) * Rational(datum->a(i, j)) / Rational(2);
      const int u = slots[j - 1][rightmost[j]];
      full.add_arrow_weight(il, u, weight_of(il, u, c));
      full.add_arrow_weight(u, ir, weight_of(u, ir, c));
    }
    ++rightmost[i];
  }

  // Drop isolated vertices (levels of non-occurring, non-adjacent letters).
  std::vector<int> keep;
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v) {
    bool isolated = true;
    for (int u = 0; u < n && isolated; ++u)
      if (!full.b(v, u).is_zero()) isolated = false;
    if (!isolated || occurrences[full.eta(v)] > 0) {
      new_id[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }

  auto seed = std::make_shared<ClusterSeed>(datum, static_cast<int>(keep.size()));
  for (size_t a = 0; a < keep.size(); ++a) {
    seed->set_eta(static_cast<int>(a), full.eta(keep[a]));
    seed->set_d(static_cast<int>(a), full.d(keep[a]));
    for (size_t b = 0; b < keep.size(); ++b)
      seed->set_b(static_cast<int>(a), static_cast<int>(b), full.b(keep[a], keep[b]));
  }
  seed->level_slots().resize(rank);
  for (int l = 1; l <= rank; ++l) {
    std::vector<int> mapped;
    for (int id : slots[l - 1])
      if (new_id[id] >= 0) mapped.push_back(new_id[id]);
    seed->level_slots()[l - 1] = mapped;
    // Frozen = leftmost and rightmost of each level; interior is mutable.
    for (size_t s = 0; s < mapped.size(); ++s)
      seed->set_frozen(mapped[s], s == 0 || s + 1 == mapped.size());
  }
  seed->set_word(word);
  return seed;
}

SeedPtr mutate_seed(const SeedPtr& seed, int k) {
  if (k < 0 || k >= seed->size()) throw Error("mutate_seed: bad vertex");
  if (seed->frozen(k)) throw FrozenVertex("mutate_seed: vertex " + std::to_string(k + 1) + " is frozen");
  auto out = std::make_shared<ClusterSeed>(*seed);
  const int n = seed->size();
  const Rational two(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out->set_b(i, j, -seed->b(i, j));
      } else {
        const Rational& bik = seed->b(i, k);
        const Rational& bkj = seed->b(k, j);
        Rational abs_bik = bik.sign() < 0 ? -bik : bik;
        Rational abs_bkj = bkj.sign() < 0 ? -bkj : bkj;
        out->set_b(i, j, seed->b(i, j) + (bik * abs_bkj + abs_bik * bkj) / two);
      }
    }
  return out;
}

namespace {

// 1-based occurrence index of the letter at position pos within its level.
int occurrence_index(const Word& word, int pos) {
  int occ = 0;
  for (int p = 0; p <= pos; ++p)
    if (word[p] == word[pos]) ++occ;
  return occ;
}

}  // namespace

SeedMove coxeter_move_seed(const SeedPtr& seed, const CoxeterMove& move) {
  const Word& word = seed->word();
  if (word.empty() || seed->level_slots().empty())
    throw Error("coxeter_move_seed: seed has no canonical labeling");
  const Word new_word = apply_move(*seed->datum(), word, move);

  SeedMove result;
  if (move.kind == 2) {
    auto target = std::make_shared<ClusterSeed>(*seed);
    target->set_word(new_word);
    result.target = target;
    return result;
  }
  if (move.kind == 6) throw UnsupportedRank("triply-laced moves are out of scope");

  if (move.kind == 3) {
    const int a = move.a, b = move.b;
    const int v = occurrence_index(word, move.pos);      // first a of (a,b,a)
    const int w = occurrence_index(word, move.pos + 1);  // the middle b
    const int id = seed->level_slots()[a - 1][v];
    result.mutations = {id};
    auto target = std::make_shared<ClusterSeed>(*mutate_seed(seed, id));
    auto& slots = target->level_slots();
    slots[a - 1].erase(slots[a - 1].begin() + v);
    slots[b - 1].insert(slots[b - 1].begin() + w, id);
    target->set_word(new_word);
    result.target = target;
    return result;
  }

  // Doubly-laced (a,b,a,b) -> (b,a,b,a): mutate short middle, long middle,
  // short middle; canonical slots are unchanged.
  const bool a_short = seed->datum()->d(move.a) < seed->datum()->d(move.b);
  const int s = a_short ? move.a : move.b;
  const int l = a_short ? move.b : move.a;
  const int s_pos = (word[move.pos] == s) ? move.pos : move.pos + 1;
  const int l_pos = (word[move.pos] == l) ? move.pos : move.pos + 1;
  const int vs = occurrence_index(word, s_pos);
  const int wl = occurrence_index(word, l_pos);
  const int sid = seed->level_slots()[s - 1][vs];
  const int lid = seed->level_slots()[l - 1][wl];
  result.mutations = {sid, lid, sid};
  SeedPtr cur = seed;
  for (int k : result.mutations) cur = mutate_seed(cur, k);
  auto target = std::make_shared<ClusterSeed>(*cur);
  target->set_word(new_word);
  result.target = target;
  return result;
}

std::pair<SeedPtr, std::vector<int>> coframe(const SeedPtr& seed) {
  const auto mut = seed->mutable_vertices();
  const int n = seed->size();
  auto out = std::make_shared<ClusterSeed>(seed->datum(), n + static_cast<int>(mut.size()));
  for (int i = 0; i < n; ++i) {
    out->set_frozen(i, seed->frozen(i));
    out->set_d(i, seed->d(i));
    out->set_eta(i, seed->eta(i));
    for (int j = 0; j < n; ++j) out->set_b(i, j, seed->b(i, j));
  }
  std::vector<int> coframe_ids;
  for (size_t m = 0; m < mut.size(); ++m) {
    const int kp = n + static_cast<int>(m);
    coframe_ids.push_back(kp);
    out->set_d(kp, seed->d(mut[m]));
    out->set_eta(kp, seed->eta(mut[m]));
    out->set_b(mut[m], kp, Rational(1));
    out->set_b(kp, mut[m], Rational(-1));
  }
  out->level_slots() = seed->level_slots();
  out->set_word(seed->word());
  return {out, coframe_ids};
}

std::vector<std::vector<int>> c_vectors(const SeedPtr& seed,
                                        const std::vector<int>& mutation_sequence) {
  auto [framed, coframe_ids] = coframe(seed);
  SeedPtr cur = framed;
  for (int k : mutation_sequence) cur = mutate_seed(cur, k);
  std::vector<std::vector<int>> rows;
  for (int k : seed->mutable_vertices()) {
    std::vector<int> row;
    for (int kp : coframe_ids)
      row.push_back(static_cast<int>(cur->b(k, kp).as_integer()));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qcm
