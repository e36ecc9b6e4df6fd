#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcm/errors.hpp"
#include "qcm/qmutation.hpp"
#include "qcm/verify.hpp"

using namespace qcm;

namespace {

SeedPtr a3_seed() { return basic_quiver(make_cartan("A3"), {1, 2, 1, 3, 2, 1}); }
SeedPtr b3_seed() { return basic_quiver(make_cartan("B3"), {1, 2, 1, 2, 3, 2, 1, 2, 3}); }

// Random element supported on standard monomials so that mutation stays
// Laurent along single steps both ways.
TorusElement random_standard(std::mt19937& rng, const SeedPtr& seed, int terms) {
  std::vector<LatticeVector> pool;
  for (int v = 0; v < seed->size(); ++v)
    for (int s : {1, -1}) {
      LatticeVector lv = lattice_unit(*seed, v, s);
      if (is_standard(seed, lv)) pool.push_back(lv);
    }
  TorusElement f(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
  std::uniform_int_distribution<int> coeff(1, 3);
  for (int t = 0; t < terms; ++t)
    f.add_term(pool[pick(rng)], QCoefficient(coeff(rng)));
  return f;
}

}  // namespace

TEST_CASE("generator image shapes") {
  auto q = a3_seed();
  MutationStep step(q, 1);  // vertex 2

  // i = k: inverse monomial, no denominator.
  auto gi = generator_image(step, 1);
  CHECK(gi.laurent());
  CHECK(gi.numerator == TorusElement::generator(step.to(), 1, -1));

  // b'_{ki} = 0: unchanged.
  auto g8 = generator_image(step, 7);
  CHECK(g8.laurent());
  CHECK(g8.numerator == TorusElement::generator(step.to(), 7));

  // b'_{2,5} = -1: the self-adjoint binomial expansion X_5 + X_{2,5}.
  auto g5 = generator_image(step, 4);
  CHECK(g5.laurent());
  CHECK(g5.numerator == parse_expr(step.to(), "X_{5} + X_{2,5}"));
  CHECK(g5.numerator.star() == g5.numerator);

  // b'_{2,1} = +1: denominator in X_2.
  auto g1 = generator_image(step, 0);
  CHECK_FALSE(g1.laurent());
  CHECK(g1.denominator_exponents.size() == 1);
}

TEST_CASE("A3 golden first step and full chain") {
  auto q = a3_seed();
  MutationStep step(q, 1);
  auto f = parse_expr(q, "X_{5,8}");
  auto image = mutate_element(step, f);
  CHECK(image == parse_expr(step.to(), "X_{5,8} + X_{2,5,8}"));

  const CycleSpec spec = a3_cycle_spec();
  const CyclePlan plan = plan_cycle(make_cartan("A3"), spec.word, spec.move_path);

  // The induced mutation sequence reads 2,6,3,2,6,3,2,6.
  CHECK(plan.mutations == std::vector<int>{1, 5, 2, 1, 5, 2, 1, 5});

  // sigma = (263): slot relabeling sends 2->6->3->2 (1-based).
  std::vector<int> expect(q->size());
  for (int i = 0; i < q->size(); ++i) expect[i] = i;
  expect[1] = 5;
  expect[5] = 2;
  expect[2] = 1;
  CHECK(plan.relabel == expect);

  TorusElement cur = f;
  SeedPtr seed = q;
  std::vector<std::string> stages = {
      "X_{5,8}+X_{2,5,8}",
      "X_{5,8}+X_{5,6,8}+X_{2,5,6,8}",
      "X_{5,8}+X_{5,6,8}+X_{2,5,6,8}+X_{2,3,5,6,8}",
      "X_{2,5,8}+X_{2,5,6,8}+X_{2,3,5,6,8}",
      "X_{2,5,8}+X_{2,3,5,8}",
      "X_{2,5,8}",
      "X_{5,8}",
      "X_{5,8}"};
  for (size_t t = 0; t < plan.mutations.size(); ++t) {
    MutationStep st(seed, plan.mutations[t]);
    cur = mutate_element(st, cur);
    seed = st.to();
    CHECK(cur == parse_expr(seed, stages[t]));
  }
}

TEST_CASE("involutivity of mutation on standard elements") {
  auto q = b3_seed();
  std::mt19937 rng(41);
  auto mut = q->mutable_vertices();
  for (int t = 0; t < 100; ++t) {
    auto f = random_standard(rng, q, 3);
    const int k = mut[rng() % mut.size()];
    MutationStep step(q, k);
    TorusElement g;
    try {
      g = mutate_element(step, f);
    } catch (const NonLaurent&) {
      continue;
    }
    MutationStep back = step.reversed();
    CHECK(mutate_element(back, g) == f);
  }
}

TEST_CASE("mutation commutes with star") {
  auto q = b3_seed();
  std::mt19937 rng(43);
  auto mut = q->mutable_vertices();
  for (int t = 0; t < 100; ++t) {
    auto f = random_standard(rng, q, 3);
    const int k = mut[rng() % mut.size()];
    MutationStep step(q, k);
    CHECK(mutate_element(step, f.star()) == mutate_element(step, f).star());
  }
}

TEST_CASE("tropical transform agrees with full mutation on central monomials") {
  auto q = b3_seed();
  std::mt19937 rng(47);
  auto mut = q->mutable_vertices();
  const auto centrals = central_monomials(q);
  REQUIRE_FALSE(centrals.empty());
  for (const auto& c : centrals) {
    SeedPtr seed = q;
    LatticeVector v = c;
    TorusElement f = TorusElement::monomial(seed, v);
    for (int t = 0; t < 8; ++t) {
      const int k = mut[rng() % mut.size()];
      MutationStep step(seed, k);
      v = mutate_monomial_tropical(step, v);
      f = mutate_element(step, f);
      seed = step.to();
      CHECK(f == TorusElement::monomial(seed, v));
    }
  }
  // e_k maps to -e_k.
  MutationStep step(q, 1);
  CHECK(mutate_monomial_tropical(step, lattice_unit(*q, 1)) == lattice_unit(*q, 1, -1));
}

TEST_CASE("q=1 consistency of a single step") {
  auto q = b3_seed();
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> d(1, 10);
  auto mut = q->mutable_vertices();
  for (int t = 0; t < 50; ++t) {
    auto f = random_standard(rng, q, 3);
    const int k = mut[rng() % mut.size()];
    std::vector<BigRational> values;
    for (int i = 0; i < q->size(); ++i) values.push_back(BigRational(d(rng), d(rng)));
    MutationStep step(q, k);
    const TorusElement g = mutate_element(step, f);
    const auto shadow = classical_shadow_step(q, k, values);
    CHECK(g.eval_classical(shadow) == f.eval_classical(values));
  }
}

TEST_CASE("classical shadow involution and positivity") {
  auto q = b3_seed();
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> d(1, 10);
  for (int t = 0; t < 20; ++t) {
    std::vector<BigRational> values;
    for (int i = 0; i < q->size(); ++i) values.push_back(BigRational(d(rng), d(rng)));
    const int k = q->mutable_vertices()[rng() % 6];
    const auto once = classical_shadow_step(q, k, values);
    for (const auto& x : once) CHECK(x.sign() > 0);
    const auto twice = classical_shadow_step(mutate_seed(q, k), k, once);
    CHECK(twice == values);
  }
}

TEST_CASE("apply_sequence: empty, there-and-back") {
  auto q = a3_seed();
  auto f = parse_expr(q, "X_{5,8} + X_{1,5,8}");
  auto r = apply_sequence(q, {}, f, q->level_slots());
  CHECK(r.final_relabeled == f);

  // A sequence followed by its reverse restores the element.
  const std::vector<int> seq{1, 5, 5, 1};
  auto r2 = apply_sequence(q, seq, f, q->level_slots());
  CHECK(r2.final_relabeled == f);
}

TEST_CASE("coxeter transport") {
  auto a3 = make_cartan("A3");
  auto q = basic_quiver(a3, {2, 1, 3, 2, 3, 1});
  // Commutative move: element unchanged in stable ids.
  auto f = parse_expr(q, "X_{2,5}");
  auto tr = coxeter_transport(q, CoxeterMove{1, 1, 3, 2}, f);
  CHECK(tr.mutations.empty());
  CHECK(format_expr(tr.element) == "X_{2,5}");

  // Braid move equals the corresponding single mutation.
  auto q0 = a3_seed();
  auto g = parse_expr(q0, "X_{5,8}");
  auto tr2 = coxeter_transport(q0, CoxeterMove{0, 1, 2, 3}, g);
  CHECK(tr2.mutations == std::vector<int>{1});
  MutationStep step(q0, 1);
  CHECK(format_expr(tr2.element) == format_expr(mutate_element(step, g)));
}

TEST_CASE("non-Laurent inputs are reported") {
  auto q = a3_seed();
  // X_1 has b'_{2,1} = +1 after mu_2, so a bare X_1 is not Laurent-preserved.
  MutationStep step(q, 1);
  CHECK_THROWS_AS(mutate_element(step, TorusElement::generator(q, 0)), NonLaurent);
  try {
    mutate_element(step, TorusElement::generator(q, 0));
  } catch (const NonLaurent& e) {
    CHECK(e.vertex == 1);
    CHECK(e.remainder_terms > 0);
  }
  CHECK_THROWS_AS(
      apply_sequence(q, {1}, TorusElement::generator(q, 0), q->level_slots()),
      NonLaurent);
}

TEST_CASE("standard monomials stay Laurent through the full cycles") {
  for (const CycleSpec& spec : {a3_cycle_spec(), b3_cycle_spec()}) {
    auto datum = make_cartan(spec.type);
    const CyclePlan plan = plan_cycle(datum, spec.word, spec.move_path);
    for (const auto& s : spec.standard_monomials) {
      auto f = parse_expr(plan.start, s);
      for (const auto& [v, c] : f.terms()) CHECK(is_standard(plan.start, v));
      CHECK_NOTHROW(apply_sequence(plan.start, plan.mutations, f,
                                   plan.final_seed->level_slots()));
    }
  }
}
