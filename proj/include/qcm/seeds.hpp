#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcm/cartan.hpp"
#include "qcm/words.hpp"

namespace qcm {

// Cluster seed (Q, Q0, B, D) with decoration eta: vertex -> letter and, for
// basic quivers, the canonical labeling: level_slots[i] lists the stable
// vertex ids along level i+1, left to right (slot j holds f_{i+1}^j).
// Vertices are 0-based stable ids; they never renumber under mutation.
class ClusterSeed {
public:
  ClusterSeed(CartanPtr datum, int n_vertices);

  int size() const { return n_; }
  const CartanPtr& datum() const { return datum_; }

  bool frozen(int v) const { return frozen_[v]; }
  bool mutable_vertex(int v) const { return !frozen_[v]; }
  std::vector<int> mutable_vertices() const;

  const Rational& b(int i, int j) const { return b_[i][j]; }
  const Rational& d(int v) const { return d_[v]; }
  Rational w(int i, int j) const { return d_[i] * b_[i][j]; }
  int eta(int v) const { return eta_[v]; }

  // Mutable access used by the builders.
  void set_frozen(int v, bool f) { frozen_[v] = f; }
  void set_b(int i, int j, const Rational& val) { b_[i][j] = val; }
  void set_d(int v, const Rational& val) { d_[v] = val; }
  void set_eta(int v, int letter) { eta_[v] = letter; }

  // Adds w to the skew pair (i,j): b_ij += w/d_i, b_ji -= w/d_j.
  void add_arrow_weight(int i, int j, const Rational& weight);

  const std::vector<std::vector<int>>& level_slots() const { return level_slots_; }
  std::vector<std::vector<int>>& level_slots() { return level_slots_; }
  const Word& word() const { return word_; }
  void set_word(Word w) { word_ = std::move(w); }

  // Canonical label of a stable id, e.g. "f2^1", if the seed carries slots.
  std::string label_of(int v) const;

  bool skew_symmetrizable() const;
  bool same_shape(const ClusterSeed& o) const;  // B, D, frozen all equal

  std::string to_dot() const;
  std::string to_json() const;

private:
  CartanPtr datum_;
  int n_;
  std::vector<char> frozen_;
  std::vector<std::vector<Rational>> b_;
  std::vector<Rational> d_;
  std::vector<int> eta_;
  std::vector<std::vector<int>> level_slots_;
  Word word_;
};

using SeedPtr = std::shared_ptr<const ClusterSeed>;

// Elementary quiver J(i): all vertices frozen, ids are level-ordered
// (level i contributes i_l, i_r in that order).
ClusterSeed elementary_quiver(const CartanPtr& datum, int i);

// Basic quiver Q(word) with canonical labels; ids number levels in letter
// order and slots left to right.
SeedPtr basic_quiver(const CartanPtr& datum, const Word& word);

// Exchange-matrix mutation at mutable vertex k. D, frozen set and slot maps
// are unchanged.
SeedPtr mutate_seed(const SeedPtr& seed, int k);

// Seed-level realization of a Coxeter move on seed->word(): the stable-id
// mutation sequence plus the updated seed (with slot maps rearranged so that
// it equals basic_quiver(new word) under the canonical labeling).
struct SeedMove {
  std::vector<int> mutations;  // stable ids, in application order
  SeedPtr target;              // B mutated and slots/word updated
};
SeedMove coxeter_move_seed(const SeedPtr& seed, const CoxeterMove& move);

// Coframed seed: one frozen k' per mutable k, arrow k -> k', d_{k'} = d_k.
// Returns the seed and the coframe ids indexed like mutable_vertices().
std::pair<SeedPtr, std::vector<int>> coframe(const SeedPtr& seed);

// Rows = tropical images of e_k (k mutable) on the coframing coordinates
// after the given mutation sequence.
std::vector<std::vector<int>> c_vectors(const SeedPtr& seed,
                                        const std::vector<int>& mutation_sequence);

}  // namespace qcm
