#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcm/qmutation.hpp"
#include "qcm/series.hpp"

namespace qcm {

// Classical rank-2 Lusztig transforms on positive rationals.
// Braid: (a,b,c) -> (bc/(a+c), a+c, ab/(a+c)); an involution as printed.
std::array<Rational, 3> classical_lusztig_braid(const std::array<Rational, 3>& in);
// Doubly-laced: (a,b,c,d) -> (S/R, bc^2d/S, abc/R, R^2/S) with
// R = ab+ad+cd, S = a^2b + d(a+c)^2.
std::array<Rational, 4> classical_lusztig_doubly(const std::array<Rational, 4>& in);
// The reversed-word (long-letter-first) transform; inverts the move:
// position_swap . reverse . position_swap . forward = identity.
std::array<Rational, 4> classical_lusztig_doubly_reverse(const std::array<Rational, 4>& in);

// One there-and-back application of the word move on position coordinates;
// the identity for both kinds.
std::array<Rational, 3> classical_braid_roundtrip(const std::array<Rational, 3>& in);
std::array<Rational, 4> classical_doubly_roundtrip(const std::array<Rational, 4>& in);

// Orientation of the Dynkin diagram: directed edges between letters.
struct OrientedDynkin {
  std::vector<std::pair<int, int>> edges;  // (from letter, to letter)
};
// Each edge directed from higher to lower index.
OrientedDynkin default_orientation(const CartanDatum& datum);

// Q~(word) = Q(word) * H: the orientation glued onto the rightmost frozen
// vertex of each level, cancelling or solidifying the right dashed arrows.
SeedPtr oriented_basic_quiver(const SeedPtr& seed, const OrientedDynkin& H);

// alpha_k = X over the level tail from the slot created by letter k to the
// rightmost frozen vertex. Independent of H.
std::vector<LatticeVector> lusztig_coordinates(const SeedPtr& seed);

// The local rank-2 seeds of the quantum Lusztig transform: a single
// mutable vertex between two frozen ones (braid), and the two-mutable
// doubly-laced window.
SeedPtr braid_local_seed();
SeedPtr doubly_local_seed();

struct Rank2Report {
  bool formula_equals_mutation = false;
  bool involutive = false;
  bool commutation_pattern = false;
  bool rs_commute = true;  // doubly-laced only
  std::string detail;
  bool pass() const {
    return formula_equals_mutation && involutive && commutation_pattern && rs_commute;
  }
};

// Verifies, exactly: the (qLustran)/(qLustran2) formulas against the cluster
// mutation route, involutivity, and the stated commutation patterns.
Rank2Report rank2_quantum_lusztig(int kind);  // kind: 3 braid, 4 doubly-laced

// q = 1 agreement between the classical transforms and the mutation shadow
// under the cluster identifications, for one positive input tuple.
bool rank2_classical_agreement(int kind, const std::vector<Rational>& tuple);

}  // namespace qcm
