// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <iostream>
#include <deque>
#include <map>
#include <random>

#include "qcm/errors.hpp"
#include "qcm/verify.hpp"

using namespace qcm;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  double limit_seconds;
  Clock::time_point t0 = Clock::now();

  explicit Criterion(std::string n, double limit) : name(std::move(n)), limit_seconds(limit) {}
  void finish(bool ok, const std::string& detail = "") {
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs < limit_seconds;
    if (!ok || !in_time) ++failures;
    std::cout << (ok && in_time ? "PASS" : "FAIL") << "  " << name << "  (" << secs
              << " s, limit " << limit_seconds << " s)";
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
  }
};

EdgePath random_cycle(const CartanDatum& datum, const WordGraph& g, std::mt19937& rng,
                      int walk_length) {
  const int start = static_cast<int>(rng() % g.vertices.size());
  EdgePath path;
  int cur = start;
  for (int t = 0; t < walk_length; ++t) {
    const auto& out = g.edges[cur];
    const auto& [m, nxt] = out[rng() % out.size()];
    path.push_back({g.vertices[cur], m});
    cur = nxt;
  }
  std::map<int, std::pair<int, CoxeterMove>> parent;
  std::deque<int> todo{cur};
  parent[cur] = {cur, CoxeterMove{}};
  while (!parent.count(start)) {
    int v = todo.front();
    todo.pop_front();
    for (const auto& [m, u] : g.edges[v]) {
      if (parent.count(u)) continue;
      parent[u] = {v, m};
      todo.push_back(u);
    }
  }
  EdgePath back;
  int v = start;
  while (v != cur) {
    auto& [pv, pm] = parent[v];
    back.push_back({g.vertices[pv], pm});
    v = pv;
  }
  std::reverse(back.begin(), back.end());
  path.insert(path.end(), back.begin(), back.end());
  return path;
}

TorusElement random_standard_element(std::mt19937& rng, const SeedPtr& seed, int terms) {
  std::vector<LatticeVector> pool;
  for (int v = 0; v < seed->size(); ++v)
    for (int s : {1, -1}) {
      LatticeVector lv = lattice_unit(*seed, v, s);
      if (is_standard(seed, lv)) pool.push_back(lv);
    }
  TorusElement f(seed);
  for (int t = 0; t < terms; ++t)
    f.add_term(pool[rng() % pool.size()], QCoefficient(1 + static_cast<int>(rng() % 3)));
  return f;
}

TorusElement random_element(std::mt19937& rng, const SeedPtr& seed, int terms) {
  TorusElement f(seed);
  for (int t = 0; t < terms; ++t) {
    LatticeVector v = lattice_zero(*seed);
    for (int i = 0; i < seed->size(); ++i) v[i] = static_cast<int>(rng() % 5) - 2;
    const int c = static_cast<int>(rng() % 7) - 3;
    if (c != 0)
      f.add_term(v, QCoefficient::q_power(Rational(static_cast<int>(rng() % 5) - 2, 2), c));
  }
  return f;
}

}  // namespace

int main() {
  const unsigned kSeed = 20260811;
  std::cout << "acceptance suite (rng seed " << kSeed << ")\n";

  {  // 1. Word-graph counts and quotient cycles, against brute force.
    Criterion c("1 word-graph counts: A3 16/8-gon, B3 42/14-gon, brute force", 1.0);
    bool ok = true;
    auto a3 = make_cartan("A3");
    auto ga = build_word_graph(a3, longest_word(*a3));
    ok &= ga.vertices.size() == 16;
    ok &= enumerate_words_brute_force(*a3, longest_word(*a3)).size() == 16;
    auto qa = quotient(ga);
    ok &= qa.classes.size() == 8 && qa.edge_list.size() == 8 && qa.is_cycle();
    auto b3 = make_cartan("B3");
    auto gb = build_word_graph(b3, longest_word(*b3));
    ok &= gb.vertices.size() == 42;
    ok &= enumerate_words_brute_force(*b3, longest_word(*b3)).size() == 42;
    auto qb = quotient(gb);
    ok &= qb.classes.size() == 14 && qb.edge_list.size() == 14 && qb.is_cycle();
    c.finish(ok);
  }

  {  // 2. Classical rank-2 involutions and worked values.
    Criterion c("2 classical rank-2 involutions (1000 tuples each) and worked values", 1.0);
    bool ok = true;
    const auto braid = classical_lusztig_braid({Rational(1), Rational(1), Rational(1)});
    ok &= braid == std::array<Rational, 3>{Rational(1, 2), Rational(2), Rational(1, 2)};
    const auto doubly =
        classical_lusztig_doubly({Rational(1), Rational(1), Rational(1), Rational(1)});
    ok &= doubly == std::array<Rational, 4>{Rational(5, 3), Rational(1, 5), Rational(1, 3),
                                            Rational(9, 5)};
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<int> d(1, 10);
    for (int t = 0; t < 1000 && ok; ++t) {
      std::array<Rational, 3> x3{Rational(d(rng), d(rng)), Rational(d(rng), d(rng)),
                                 Rational(d(rng), d(rng))};
      ok &= classical_braid_roundtrip(x3) == x3;
      std::array<Rational, 4> x4{Rational(d(rng), d(rng)), Rational(d(rng), d(rng)),
                                 Rational(d(rng), d(rng)), Rational(d(rng), d(rng))};
      ok &= classical_doubly_roundtrip(x4) == x4;
    }
    c.finish(ok);
  }

  {  // 3. Rank-2 quantum transforms, two routes, involutive, commutations.
    Criterion c("3 quantum rank-2: formula = mutation, involutive, commutation patterns", 1.0);
    auto braid = rank2_quantum_lusztig(3);
    auto doubly = rank2_quantum_lusztig(4);
    c.finish(braid.pass() && doubly.pass(), braid.detail + doubly.detail);
  }

  {  // 4. A3 golden cycle.
    Criterion c("4 A3 golden cycle: seed, tropical, X_{5,8} stages, f/K'/C return", 5.0);
    auto rep = verify_rank3(a3_cycle_spec());
    c.finish(rep.pass());
  }

  {  // 5. B3 golden cycle.
    Criterion c("5 B3 golden cycle: 26 steps, four standard-monomial chains, f/K'/C return",
                60.0);
    auto rep = verify_rank3(b3_cycle_spec());
    c.finish(rep.pass());
  }

  {  // 6. Classical shadow closure for both cycles.
    Criterion c("6 classical shadow closes for both cycles (10 random assignments)", 5.0);
    bool ok = true;
    for (const CycleSpec& spec : {a3_cycle_spec(), b3_cycle_spec()}) {
      auto datum = make_cartan(spec.type);
      const CyclePlan plan = plan_cycle(datum, spec.word, spec.move_path);
      std::mt19937 rng(kSeed);
      std::uniform_int_distribution<int> d(1, 10);
      for (int trial = 0; trial < 10 && ok; ++trial) {
        std::vector<BigRational> values;
        for (int i = 0; i < plan.start->size(); ++i)
          values.push_back(BigRational(d(rng), d(rng)));
        const auto out = classical_shadow(plan.start, plan.mutations, values);
        for (int i = 0; i < plan.start->size(); ++i)
          ok &= out[i] == values[plan.relabel[i]];
      }
    }
    c.finish(ok);
  }

  {  // 7. Tits decomposition on random cycles.
    Criterion c("7 Tits decomposition: 100 random cycles in each of A3 and B3", 30.0);
    bool ok = true;
    std::mt19937 rng(kSeed);
    int square_count = 0, rank3_count = 0;
    for (const char* type : {"A3", "B3"}) {
      auto datum = make_cartan(type);
      auto graph = build_word_graph(datum, longest_word(*datum));
      for (int t = 0; t < 100 && ok; ++t) {
        EdgePath cycle = random_cycle(*datum, graph, rng, 6 + t % 15);
        try {
          DecompositionWitness witness = decompose(*datum, cycle);
          ok &= verify_witness(*datum, cycle, witness);
          for (const auto& f : witness.factors) {
            ok &= f.kind == GeneratorKind::Square || f.kind == GeneratorKind::Rank3;
            (f.kind == GeneratorKind::Square ? square_count : rank3_count)++;
          }
        } catch (const Error& e) {
          ok = false;
        }
      }
    }
    c.finish(ok, std::to_string(square_count) + " squares, " +
                     std::to_string(rank3_count) + " rank-3 factors");
  }

  {  // 8. Property suites, >= 100 randomized instances each.
    Criterion c("8 property suites: involutivity, star, tropical, q-binomials, "
                "associativity, parser",
                60.0);
    bool ok = true;
    std::string what;
    auto b3 = make_cartan("B3");
    auto seed = basic_quiver(b3, {1, 2, 1, 2, 3, 2, 1, 2, 3});
    std::mt19937 rng(kSeed);
    const auto mut = seed->mutable_vertices();

    for (int t = 0; t < 100 && ok; ++t) {  // mutation involutivity
      auto f = random_standard_element(rng, seed, 3);
      MutationStep step(seed, mut[rng() % mut.size()]);
      try {
        auto g = mutate_element(step, f);
        ok &= mutate_element(step.reversed(), g) == f;
      } catch (const NonLaurent&) {
      }
      if (!ok) what = "involutivity";
    }
    for (int t = 0; t < 100 && ok; ++t) {  // star equivariance
      auto f = random_standard_element(rng, seed, 3);
      MutationStep step(seed, mut[rng() % mut.size()]);
      ok &= mutate_element(step, f.star()) == mutate_element(step, f).star();
      if (!ok) what = "star";
    }
    {  // tropical vs full for central monomials
      const auto centrals = central_monomials(seed);
      for (int t = 0; t < 100 && ok; ++t) {
        LatticeVector v = centrals[rng() % centrals.size()];
        SeedPtr s = seed;
        TorusElement f = TorusElement::monomial(s, v);
        for (int step_i = 0; step_i < 3; ++step_i) {
          MutationStep step(s, mut[rng() % mut.size()]);
          v = mutate_monomial_tropical(step, v);
          f = mutate_element(step, f);
          s = step.to();
          ok &= f == TorusElement::monomial(s, v);
        }
        if (!ok) what = "tropical";
      }
    }
    for (int n = 0; n <= 12 && ok; ++n)  // q-binomial palindromicity (>= 100 pairs)
      for (int m = 0; m <= n && ok; ++m)
        for (const Rational& d : {Rational(1), Rational(1, 2)}) {
          ok &= q_binomial(n, m, d).palindromic();
          if (!ok) what = "q-binomial";
        }
    for (int t = 0; t < 100 && ok; ++t) {  // associativity
      auto a = random_element(rng, seed, 3);
      auto b = random_element(rng, seed, 3);
      auto cc = random_element(rng, seed, 3);
      ok &= multiply(multiply(a, b), cc) == multiply(a, multiply(b, cc));
      if (!ok) what = "associativity";
    }
    for (int t = 0; t < 100 && ok; ++t) {  // parser round trip
      auto f = random_element(rng, seed, 5);
      try {
        ok &= parse_expr(seed, format_expr(f)) == f;
      } catch (const ParseError&) {
        ok = false;
      }
      if (!ok) what = "parser";
    }
    c.finish(ok, what);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
