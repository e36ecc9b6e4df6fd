#include "qcm/qmutation.hpp"

#include <algorithm>

#include "qcm/errors.hpp"

namespace qcm {

namespace {

// (1 + q^{u} X_k) over the given seed.
TorusElement binomial_factor(const SeedPtr& seed, int k, const Rational& u) {
  TorusElement out = TorusElement::unit(seed);
  out.add_term(lattice_unit(*seed, k), QCoefficient::q_power(u));
  return out;
}

struct TransformedTerm {
  LatticeVector v;
  QCoefficient c;
  long long m = 0;  // dilogarithm factor count
  int sign = 0;     // sign of (e_k, v) in the target seed
};

TransformedTerm transform_term(const SeedPtr& to, int k, const LatticeVector& v,
                               const QCoefficient& c) {
  TransformedTerm t;
  t.c = c;
  t.v = v;
  // Monomial transform: e_k -> -e_k, e_i -> e_i + [b'_{ki}]_+ e_k.
  long long shift = 0;
  for (int i = 0; i < to->size(); ++i) {
    if (i == k || v[i] == 0) continue;
    const Rational& bki = to->b(k, i);
    if (bki.sign() > 0) shift += bki.as_integer() * v[i];
  }
  t.v[k] = -v[k] + static_cast<int>(shift);
  // Dilogarithm contribution from the pairing with e_k.
  Rational pairing(0);
  for (int i = 0; i < to->size(); ++i)
    if (t.v[i] != 0) pairing += Rational(t.v[i]) * to->w(k, i);
  const Rational count = pairing / to->d(k);
  t.m = count.as_integer();
  t.sign = t.m > 0 ? 1 : t.m < 0 ? -1 : 0;
  if (t.m < 0) t.m = -t.m;
  return t;
}

}  // namespace

TorusFraction generator_image(const MutationStep& step, int i) {
  const SeedPtr& to = step.to();
  const int k = step.k();
  const Rational dk = to->d(k);
  TorusFraction out;
  out.k = k;
  if (i == k) {
    out.numerator = TorusElement::generator(to, k, -1);
    return out;
  }
  const Rational& bki = to->b(k, i);
  if (bki.sign() <= 0) {
    // X_i prod_{r=1}^{|b'_ki|} (1 + q_k^{2r-1} X_k), expanded.
    TorusElement f = TorusElement::generator(to, i);
    const long long m = (-bki).as_integer();
    for (long long r = 1; r <= m; ++r)
      f = multiply(f, binomial_factor(to, k, dk * Rational(2 * r - 1)));
    out.numerator = f;
    return out;
  }
  // X_{i,k^m} with right factors (1 + q_k^{1-2r} X_k)^{-1}.
  const long long m = bki.as_integer();
  LatticeVector v = lattice_unit(*to, i);
  v[k] += static_cast<int>(m);
  out.numerator = TorusElement::monomial(to, v);
  for (long long r = 1; r <= m; ++r)
    out.denominator_exponents.push_back(dk * Rational(1 - 2 * r));
  return out;
}

TorusElement mutate_element(const MutationStep& step, const TorusElement& f) {
  const SeedPtr& to = step.to();
  const int k = step.k();
  if (f.seed() != step.from()) throw SeedMismatch();
  const Rational dk = to->d(k);

  std::vector<TransformedTerm> terms;
  long long max_den = 0;
  for (const auto& [v, c] : f.terms()) {
    terms.push_back(transform_term(to, k, v, c));
    if (terms.back().sign > 0) max_den = std::max(max_den, terms.back().m);
  }

  // Common right denominator D = prod_{r=1}^{M} (1 + q_k^{1-2r} X_k).
  TorusElement total(to);
  for (const auto& t : terms) {
    TorusElement g = TorusElement::monomial(to, t.v, t.c);
    if (t.sign <= 0) {
      for (long long r = 1; r <= t.m; ++r)
        g = multiply(g, binomial_factor(to, k, dk * Rational(2 * r - 1)));
      for (long long r = 1; r <= max_den; ++r)
        g = multiply(g, binomial_factor(to, k, dk * Rational(1 - 2 * r)));
    } else {
      for (long long r = t.m + 1; r <= max_den; ++r)
        g = multiply(g, binomial_factor(to, k, dk * Rational(1 - 2 * r)));
    }
    total += g;
  }
  for (long long r = 1; r <= max_den; ++r) {
    const Rational u = dk * Rational(1 - 2 * r);
    try {
      total = right_divide_binomial(total, k, u);
    } catch (const NotDivisible&) {
      throw NonLaurent("mutation at vertex " + std::to_string(k + 1) +
                           " is not Laurent: division by (1+q^{" + u.str() + "}X_" +
                           std::to_string(k + 1) + ") left a remainder on " +
                           std::to_string(total.term_count()) + " terms",
                       -1, k, total.term_count());
    }
  }
  return total;
}

LatticeVector mutate_monomial_tropical(const MutationStep& step, const LatticeVector& v) {
  return transform_term(step.to(), step.k(), v, QCoefficient(1)).v;
}

std::vector<int> slot_relabeling(const std::vector<std::vector<int>>& before,
                                 const std::vector<std::vector<int>>& after, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (size_t lvl = 0; lvl < before.size(); ++lvl) {
    if (before[lvl].size() != after[lvl].size())
      throw Error("slot_relabeling: level sizes differ");
    for (size_t s = 0; s < before[lvl].size(); ++s)
      perm[after[lvl][s]] = before[lvl][s];
  }
  return perm;
}

SequenceResult apply_sequence(const SeedPtr& start, const std::vector<int>& vertices,
                              const TorusElement& f,
                              const std::vector<std::vector<int>>& final_level_slots) {
  SequenceResult out;
  out.seeds.push_back(start);
  out.stages.push_back(f);
  TorusElement cur = f;
  SeedPtr seed = start;
  for (size_t t = 0; t < vertices.size(); ++t) {
    MutationStep step(seed, vertices[t]);
    try {
      cur = mutate_element(step, cur);
    } catch (const NonLaurent& e) {
      throw NonLaurent("sequence left the Laurent ring at stage " + std::to_string(t + 1) +
                           ": " + e.what(),
                       static_cast<int>(t + 1), e.vertex, e.remainder_terms);
    }
    seed = step.to();
    out.seeds.push_back(seed);
    out.stages.push_back(cur);
  }
  out.relabel = slot_relabeling(start->level_slots(), final_level_slots, start->size());
  out.final_relabeled = cur.relabeled(out.relabel, start);
  return out;
}

std::vector<BigRational> classical_shadow_step(const SeedPtr& seed, int k,
                                               const std::vector<BigRational>& values) {
  if (seed->frozen(k)) throw FrozenVertex("classical_shadow: frozen vertex");
  std::vector<BigRational> out = values;
  out[k] = BigRational(1) / values[k];
  for (int i = 0; i < seed->size(); ++i) {
    if (i == k) continue;
    const Rational& bki = seed->b(k, i);
    if (bki.is_zero()) continue;
    BigRational factor(1);
    if (bki.sign() < 0) {
      const BigRational base = BigRational(1) + values[k];
      for (long long r = 0; r < (-bki).as_integer(); ++r) factor *= base;
      out[i] = values[i] * factor;
    } else {
      const BigRational base = BigRational(1) + BigRational(1) / values[k];
      for (long long r = 0; r < bki.as_integer(); ++r) factor *= base;
      out[i] = values[i] / factor;
    }
  }
  return out;
}

std::vector<BigRational> classical_shadow(const SeedPtr& seed,
                                          const std::vector<int>& vertices,
                                          const std::vector<BigRational>& values) {
  std::vector<BigRational> cur = values;
  SeedPtr s = seed;
  for (int k : vertices) {
    cur = classical_shadow_step(s, k, cur);
    s = mutate_seed(s, k);
  }
  return cur;
}

TransportResult coxeter_transport(const SeedPtr& seed, const CoxeterMove& move,
                                  const TorusElement& f) {
  SeedMove sm = coxeter_move_seed(seed, move);
  TransportResult out;
  out.mutations = sm.mutations;
  TorusElement cur = f;
  SeedPtr s = seed;
  for (int k : sm.mutations) {
    MutationStep step(s, k);
    cur = mutate_element(step, cur);
    s = step.to();
  }
  // Same exchange data as the canonical target; rebase the element there.
  if (!s->same_shape(*sm.target) && !sm.mutations.empty())
    throw Error("coxeter_transport: seed mismatch after mutations");
  TorusElement rebased(sm.target);
  for (const auto& [v, c] : cur.terms()) rebased.add_term(v, c);
  out.target = sm.target;
  out.element = rebased;
  return out;
}

}  // namespace qcm
