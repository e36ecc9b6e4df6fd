#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcm/bigrational.hpp"
#include "qcm/qtorus.hpp"

namespace qcm {

// One mutation relating from() and to() = mutate_seed(from(), k).
// forward() rewrites elements of T(from) in the variables of T(to); its
// inverse is the forward map of reversed().
class MutationStep {
public:
  MutationStep(SeedPtr from, int k)
      : from_(std::move(from)), k_(k), to_(mutate_seed(from_, k)) {}
  MutationStep(SeedPtr from, SeedPtr to, int k)
      : from_(std::move(from)), k_(k), to_(std::move(to)) {}

  const SeedPtr& from() const { return from_; }
  const SeedPtr& to() const { return to_; }
  int k() const { return k_; }
  MutationStep reversed() const { return MutationStep(to_, from_, k_); }

private:
  SeedPtr from_;
  int k_;
  SeedPtr to_;
};

// Attached to NonLaurent errors: which division failed and on how many
// remaining terms.
struct NonLaurentReport {
  int vertex = -1;
  Rational divisor_exponent;
  size_t remainder_terms = 0;
  int stage = -1;
};

// Image of the generator X_i of T(from) in T(to), as a right fraction in
// the single variable k. Laurent iff the mutated exchange entry b'_{ki} <= 0.
TorusFraction generator_image(const MutationStep& step, int i);

// Forward quantum cluster mutation of a Laurent element: monomial transform,
// dilogarithm factors, common right denominator, exact clearing.
// Throws NonLaurent when the input is not Laurent-preserved by this step.
TorusElement mutate_element(const MutationStep& step, const TorusElement& f);

// Tropical (monomial) transform of a lattice vector under the step.
LatticeVector mutate_monomial_tropical(const MutationStep& step, const LatticeVector& v);

struct SequenceResult {
  std::vector<SeedPtr> seeds;           // seeds.front() = start, back() = end
  std::vector<TorusElement> stages;     // element after 0..n mutations
  TorusElement final_relabeled;         // back-substituted to the start seed
  std::vector<int> relabel;             // final stable id -> start stable id
};

// Applies mutate_element along the vertex sequence, then undoes the slot
// relabeling of the final seed (expected to have the level_slots of
// basic_quiver(word) again). Throws NonLaurent with the failing stage.
SequenceResult apply_sequence(const SeedPtr& start, const std::vector<int>& vertices,
                              const TorusElement& f,
                              const std::vector<std::vector<int>>& final_level_slots);

// Stable-id relabeling between two slot assignments over the same ids:
// perm[id at (level,slot) of `after`] = id at (level,slot) of `before`.
std::vector<int> slot_relabeling(const std::vector<std::vector<int>>& before,
                                 const std::vector<std::vector<int>>& after, int n);

// q = 1 shadow of the forward mutation on a positive assignment. Values
// compound along long sequences, hence the big rationals.
std::vector<BigRational> classical_shadow_step(const SeedPtr& seed, int k,
                                               const std::vector<BigRational>& values);
std::vector<BigRational> classical_shadow(const SeedPtr& seed,
                                          const std::vector<int>& vertices,
                                          const std::vector<BigRational>& values);

// Transport along one Coxeter move of the word carried by the seed:
// element in stable ids over the move's target seed, plus the move data.
struct TransportResult {
  SeedPtr target;
  TorusElement element;
  std::vector<int> mutations;
};
TransportResult coxeter_transport(const SeedPtr& seed, const CoxeterMove& move,
                                  const TorusElement& f);

}  // namespace qcm
