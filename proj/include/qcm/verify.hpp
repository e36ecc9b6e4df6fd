#pragma once

#include <string>
#include <vector>

#include "qcm/lusztig.hpp"
#include "qcm/qmutation.hpp"
#include "qcm/tits.hpp"

namespace qcm {

struct DistinguishedElements {
  std::vector<TorusElement> f;        // telescopic sums, one per letter
  std::vector<TorusElement> k_prime;  // full level products
  std::vector<LatticeVector> central; // kernel basis of the mutable pairing
  std::vector<TorusElement> standard; // (lambda, e_k) <= 0 for mutable k
};

TorusElement chevalley_f(const SeedPtr& seed, int letter);
TorusElement chevalley_k_prime(const SeedPtr& seed, int letter);

// Basis of the integer kernel of lambda -> ((lambda, e_k))_k mutable.
std::vector<LatticeVector> central_monomials(const SeedPtr& seed);

bool is_central(const SeedPtr& seed, const LatticeVector& v);
bool is_standard(const SeedPtr& seed, const LatticeVector& v);

DistinguishedElements distinguished_elements(const SeedPtr& seed);

// A rank-3 verification cycle: the word, the quotient-cycle move path
// (0-based position, pattern length, applied to the running word), and the
// golden transport chains with their per-move checkpoint expressions.
struct CycleSpec {
  std::string type;
  Word word;
  std::vector<std::pair<int, int>> move_path;
  struct GoldenChain {
    std::string start;
    std::vector<std::string> stages;  // one per non-commutative move
  };
  std::vector<GoldenChain> chains;
  std::vector<std::string> standard_monomials;
  unsigned rng_seed = 20260811;
};

CycleSpec a3_cycle_spec();
CycleSpec b3_cycle_spec();

struct VerificationReport {
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  unsigned rng_seed = 0;
  double seconds = 0.0;

  bool pass() const;
  void add(const std::string& name, bool ok, const std::string& detail = "");
  std::string text() const;
  std::string to_json() const;
};

// Runs the seed, tropical, symbolic (golden-diffed), and classical-shadow
// checks for a built-in rank-3 cycle.
VerificationReport verify_rank3(const CycleSpec& spec, bool trace = false,
                                std::vector<std::string>* trace_lines = nullptr);

// Transports standard and central monomials and classical shadows along an
// arbitrary closed path of Coxeter moves; optionally cross-checks through
// the Tits decomposition.
VerificationReport verify_cycle(const CartanPtr& datum, const EdgePath& cycle,
                                bool with_decomposition = false,
                                unsigned rng_seed = 20260811);

// Expands a move path into the mutation data it induces.
struct CyclePlan {
  SeedPtr start;
  SeedPtr final_seed;
  std::vector<int> mutations;
  std::vector<size_t> checkpoints;  // cumulative mutation counts per stage
  std::vector<int> relabel;         // final stable id -> start stable id
};
CyclePlan plan_cycle(const CartanPtr& datum, const Word& word,
                     const std::vector<std::pair<int, int>>& move_path);

}  // namespace qcm
