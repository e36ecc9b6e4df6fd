#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcm/words.hpp"

namespace qcm {

// Directed edge of a reduced word graph: the move applied at `from`.
struct PathEdge {
  Word from;
  CoxeterMove move;

  Word target(const CartanDatum& datum) const { return apply_move(datum, from, move); }
  PathEdge inverted(const CartanDatum& datum) const {
    return {target(datum), move.reversed()};
  }
  friend bool operator==(const PathEdge& a, const PathEdge& b) {
    return a.from == b.from && a.move == b.move;
  }
};

using EdgePath = std::vector<PathEdge>;

bool path_is_closed(const CartanDatum& datum, const EdgePath& path);
EdgePath reversed_path(const CartanDatum& datum, const EdgePath& path);
EdgePath free_reduce(const CartanDatum& datum, const EdgePath& path);

enum class GeneratorKind { Square, Rank3 };

struct GeneratorCycle {
  GeneratorKind kind;
  std::vector<int> letters;  // the set J for Rank3
  int window_begin = 0;      // common moving window for Rank3
  int window_end = 0;
};

// Recognizes Tits generators: commuting squares (type a) and rank-3 window
// cycles (type b). Backtracks and everything else: nullopt.
std::optional<GeneratorCycle> classify_generator(const CartanDatum& datum,
                                                 const EdgePath& cycle);

struct WitnessFactor {
  EdgePath conjugator;  // path from the witness base to the loop's anchor
  EdgePath loop;        // generator cycle, already oriented
  GeneratorKind kind;
  int orientation = 1;
};

struct DecompositionWitness {
  Word base;
  std::vector<WitnessFactor> factors;

  std::string to_json(const CartanDatum& datum) const;
};

// Constructive decomposition of a closed path into conjugated squares and
// rank-3 cycles. Throws NotACycle / UnsupportedRank (kind-6 windows).
DecompositionWitness decompose(const CartanDatum& datum, const EdgePath& cycle);

// Replays the witness: the concatenated factor loops must free-reduce to the
// freely reduced cycle, and every factor loop must classify as a generator.
bool verify_witness(const CartanDatum& datum, const EdgePath& cycle,
                    const DecompositionWitness& witness);

}  // namespace qcm
