#include "qcm/lusztig.hpp"

#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {

std::array<Rational, 3> classical_lusztig_braid(const std::array<Rational, 3>& in) {
  const Rational &a = in[0], &b = in[1], &c = in[2];
  const Rational s = a + c;
  return {b * c / s, s, a * b / s};
}

std::array<Rational, 4> classical_lusztig_doubly(const std::array<Rational, 4>& in) {
  const Rational &a = in[0], &b = in[1], &c = in[2], &d = in[3];
  const Rational R = a * b + a * d + c * d;
  const Rational S = a * a * b + d * (a + c) * (a + c);
  return {S / R, b * c * c * d / S, a * b * c / R, R * R / S};
}

std::array<Rational, 4> classical_lusztig_doubly_reverse(const std::array<Rational, 4>& in) {
  const Rational &p = in[0], &q = in[1], &r = in[2], &s = in[3];
  const Rational R = p * q + p * s + r * s;
  const Rational S = p * (q + s) * (q + s) + r * s * s;
  return {R * R / S, q * r * s / R, p * q * q * r / S, S / R};
}

std::array<Rational, 3> classical_braid_roundtrip(const std::array<Rational, 3>& in) {
  return classical_lusztig_braid(classical_lusztig_braid(in));
}

std::array<Rational, 4> classical_doubly_roundtrip(const std::array<Rational, 4>& in) {
  // Move: out positions (b',a',d',c'); back: the reversed-word transform.
  auto swap = [](std::array<Rational, 4> t) {
    std::swap(t[0], t[1]);
    std::swap(t[2], t[3]);
    return t;
  };
  return swap(classical_lusztig_doubly_reverse(swap(classical_lusztig_doubly(in))));
}

OrientedDynkin default_orientation(const CartanDatum& datum) {
  OrientedDynkin H;
  for (int i = 1; i <= datum.rank(); ++i)
    for (int j = 1; j < i; ++j)
      if (datum.a(i, j) != 0) H.edges.push_back({i, j});
  return H;
}

SeedPtr oriented_basic_quiver(const SeedPtr& seed, const OrientedDynkin& H) {
  auto out = std::make_shared<ClusterSeed>(*seed);
  const auto& datum = *seed->datum();
  for (const auto& [u, v] : H.edges) {
    if (datum.a(u, v) == 0) throw Error("oriented_basic_quiver: not a Dynkin edge");
    const auto& su = seed->level_slots()[u - 1];
    const auto& sv = seed->level_slots()[v - 1];
    if (su.empty() || sv.empty()) continue;
    // Weight matching the elementary-quiver dashed arrows, so the right
    // frozen dashed arrows cancel or become solid.
    const Rational weight = -(datum.d(u) * Rational(datum.a(u, v))) / Rational(2);
    out->add_arrow_weight(su.back(), sv.back(), weight);
  }
  return out;
}

std::vector<LatticeVector> lusztig_coordinates(const SeedPtr& seed) {
  const Word& word = seed->word();
  if (word.empty()) throw Error("lusztig_coordinates: seed carries no word");
  std::vector<int> seen(seed->datum()->rank() + 1, 0);
  std::vector<LatticeVector> alphas;
  for (int k = 0; k < static_cast<int>(word.size()); ++k) {
    const int i = word[k];
    ++seen[i];
    const auto& slots = seed->level_slots()[i - 1];
    LatticeVector v = lattice_zero(*seed);
    for (size_t j = seen[i]; j < slots.size(); ++j) v[slots[j]] = 1;
    alphas.push_back(std::move(v));
  }
  return alphas;
}

namespace {

SeedPtr make_local_seed(const CartanPtr& datum, int n, const std::vector<Rational>& d,
                        const std::vector<int>& mutables,
                        const std::vector<std::tuple<int, int, Rational>>& b_entries) {
  auto seed = std::make_shared<ClusterSeed>(datum, n);
  for (int v = 0; v < n; ++v) seed->set_d(v, d[v]);
  for (int v : mutables) seed->set_frozen(v, false);
  for (const auto& [i, j, val] : b_entries) {
    seed->set_b(i, j, val);
    seed->set_b(j, i, -(seed->d(i) * val) / seed->d(j));
  }
  if (!seed->skew_symmetrizable()) throw Error("local seed not skew-symmetrizable");
  return seed;
}

}  // namespace

SeedPtr braid_local_seed() {
  // One mutable vertex 0 between frozen 1, 2; arrows 0->1 and 2->0.
  auto datum = make_cartan("A2");
  const Rational one(1);
  return make_local_seed(datum, 3, {one, one, one}, {0},
                         {{0, 1, one}, {2, 0, one}});
}

SeedPtr doubly_local_seed() {
  // Mutable 0 (short) and 2 (long) with frozen partners 1, 3;
  // arrows 0->1 (thin), 2->3, 2->0, 1->2.
  auto datum = make_cartan("B2");
  const Rational one(1), half(1, 2);
  return make_local_seed(datum, 4, {half, half, one, one}, {0, 2},
                         {{0, 1, one}, {2, 3, one}, {2, 0, one}, {1, 2, Rational(2)}});
}

namespace {

using Series = GradedSeries;

struct SeriesContext {
  std::vector<long long> weights;
  long long cap;

  Series lift(const TorusElement& f) const { return Series(f, weights, cap); }
  Series monomial(const SeedPtr& seed, const LatticeVector& v) const {
    return lift(TorusElement::monomial(seed, v));
  }
};

// Mirror pullback on generators: T(step.to) -> series over T(step.from),
// with the monomial shift and pairing read from the domain seed.
Series rho_generator(const SeriesContext& ctx, const MutationStep& step, int i) {
  const SeedPtr& from = step.from();
  const SeedPtr& to = step.to();
  const int k = step.k();
  const Rational dk = to->d(k);
  if (i == k) return ctx.monomial(from, lattice_unit(*from, k, -1));
  const Rational& bki = to->b(k, i);
  LatticeVector v = lattice_unit(*from, i);
  long long m = 0;
  int sign = bki.sign();
  if (sign > 0) {
    m = bki.as_integer();
    v[k] += static_cast<int>(m);
  } else {
    m = (-bki).as_integer();
  }
  Series out = ctx.monomial(from, v);
  for (long long r = 1; r <= m; ++r) {
    TorusElement binom = TorusElement::unit(from);
    const Rational u = sign > 0 ? dk * Rational(2 * r - 1) : dk * Rational(1 - 2 * r);
    binom.add_term(lattice_unit(*from, k), QCoefficient::q_power(u));
    Series bs = ctx.lift(binom);
    out = sign > 0 ? out * bs.inverse() : out * bs;
  }
  return out;
}

// Extension to the whole torus via ordered products with the q-correction
// X_lambda = q^{sum_{i<j} l_i l_j w'_ij} prod_i X_i^{l_i}. Powers of the
// generator images are memoized, and the generator with the largest
// exponent spread is factored out so its ladder multiplies whole grade
// buckets instead of single terms.
struct RhoCache {
  std::map<std::pair<int, int>, Series> powers;

  const Series& power(const SeriesContext& ctx, const MutationStep& step, int i, int e) {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    Series s = [&] {
      if (e == 0) return ctx.lift(TorusElement::unit(step.from()));
      if (e == 1) return rho_generator(ctx, step, i);
      if (e == -1) return rho_generator(ctx, step, i).inverse();
      return power(ctx, step, i, e > 0 ? e - 1 : e + 1) *
             power(ctx, step, i, e > 0 ? 1 : -1);
    }();
    return powers.emplace(key, std::move(s)).first->second;
  }
};

Series rho_element_cached(const SeriesContext& ctx, const MutationStep& step,
                          RhoCache& cache, const TorusElement& g) {
  const SeedPtr& to = step.to();
  const Series zero = ctx.lift(TorusElement(step.from()));
  if (g.is_zero()) return zero;

  int split = -1, spread = 0;
  for (const auto& [v, c] : g.terms())
    for (int i = 0; i < to->size(); ++i)
      if (std::abs(v[i]) > spread) {
        spread = std::abs(v[i]);
        split = i;
      }

  auto ordered_image = [&](const LatticeVector& v) {
    Rational corr(0);
    for (int i = 0; i < to->size(); ++i)
      for (int j = i + 1; j < to->size(); ++j)
        if (v[i] != 0 && v[j] != 0)
          corr += Rational(v[i]) * Rational(v[j]) * to->w(i, j);
    Series term = ctx.lift(TorusElement::unit(step.from()));
    for (int i = 0; i < to->size(); ++i)
      if (v[i] != 0) term = term * cache.power(ctx, step, i, v[i]);
    return term.scaled(QCoefficient::q_power(corr));
  };

  if (split < 0 || spread <= 3) {
    Series total = zero;
    for (const auto& [v, c] : g.terms()) total = total + ordered_image(v).scaled(c);
    return total;
  }

  // X_lambda = q^{(lambda', r e_k)} X_{lambda'} X_{r e_k}; sum grade buckets
  // before the single ladder multiplication per grade.
  std::map<int, Series> buckets;
  const LatticeVector ek = lattice_unit(*to, split);
  for (const auto& [v, c] : g.terms()) {
    const int r = v[split];
    LatticeVector rest = v;
    rest[split] = 0;
    LatticeVector rk(to->size(), 0);
    rk[split] = r;
    const Rational corr = skew_form(*to, rest, rk);
    Series part = ordered_image(rest).scaled(c.shifted(corr));
    auto it = buckets.find(r);
    if (it == buckets.end()) buckets.emplace(r, std::move(part));
    else it->second = it->second + part;
  }
  Series total = zero;
  for (auto& [r, part] : buckets)
    total = total + part * cache.power(ctx, step, split, r);
  return total;
}

Series rho_element(const SeriesContext& ctx, const MutationStep& step,
                   const TorusElement& g) {
  RhoCache cache;
  return rho_element_cached(ctx, step, cache, g);
}

// Classical (q = 1) shadow of the mirror pullback: from-values -> to-values.
std::vector<Rational> classical_rho_step(const SeedPtr& to, int k,
                                         const std::vector<Rational>& values) {
  std::vector<Rational> out = values;
  out[k] = Rational(1) / values[k];
  for (int i = 0; i < to->size(); ++i) {
    if (i == k) continue;
    const Rational& bki = to->b(k, i);
    if (bki.is_zero()) continue;
    Rational factor(1);
    const Rational base = Rational(1) + values[k];
    const long long m = (bki.sign() > 0 ? bki : -bki).as_integer();
    for (long long r = 0; r < m; ++r) factor *= base;
    if (bki.sign() > 0) {
      Rational shift(1);
      for (long long r = 0; r < m; ++r) shift *= values[k];
      out[i] = values[i] * shift / factor;
    } else {
      out[i] = values[i] * factor;
    }
  }
  return out;
}

struct BraidObjects {
  Series a, b, g;  // alpha, beta, gamma
};

struct BraidPrimes {
  Series ap, bp, gp;
};

BraidPrimes braid_formula(const BraidObjects& o, long long prec,
                          bool check_orderings, std::string* detail) {
  const Series sum = o.a + o.g;
  const Series inv = sum.inverse();
  BraidPrimes p;
  p.ap = inv * o.g * o.b;
  p.bp = sum;
  p.gp = inv * o.a * o.b;
  if (check_orderings) {
    // The two printed orderings of the transform agree.
    if (!p.ap.equal_to_prec(o.b * o.g * inv, prec))
      *detail += "alpha' orderings disagree; ";
    if (!p.gp.equal_to_prec(o.b * o.a * inv, prec))
      *detail += "gamma' orderings disagree; ";
  }
  return p;
}

struct DoublyObjects {
  Series a, b, g, d;
};

struct DoublyPrimes {
  Series ap, bp, gp, dp, R, S;
};

DoublyPrimes doubly_formula(const DoublyObjects& o) {
  DoublyPrimes p;
  p.R = o.a * o.b + o.a * o.d + o.g * o.d;
  p.S = o.a * o.a * o.b + (o.a + o.g) * (o.a + o.g) * o.d;
  const Series Rinv = p.R.inverse(), Sinv = p.S.inverse();
  p.ap = p.S * Rinv;
  p.bp = o.b * o.g * o.g * o.d * Sinv;
  p.gp = o.g * o.b * o.a * Rinv;
  p.dp = p.R * p.R * Sinv;
  return p;
}

// The double application equals the identity, in cleared form: each primed
// formula "x'' = N'' D''^{-1} = x" is checked as N'' = x D''; only products
// of already-computed series appear, never inverses of large series.
bool braid_involution(const BraidObjects& o, const BraidPrimes& p, long long prec) {
  const Series sum = p.ap + p.gp;
  return (p.gp * p.bp).equal_to_prec(sum * o.a, prec) &&
         sum.equal_to_prec(o.b, prec) &&
         (p.ap * p.bp).equal_to_prec(sum * o.g, prec);
}

// Structured mirror image of a lattice monomial: prefix monomial times
// right binomial factors (1 + q^u X_k)^{sign}.
struct MirrorImage {
  LatticeVector nu;
  std::vector<std::pair<Rational, int>> binoms;
};

MirrorImage mirror_image(const MutationStep& step, const LatticeVector& lambda) {
  const SeedPtr& to = step.to();
  const int k = step.k();
  const Rational dk = to->d(k);
  MirrorImage out;
  out.nu = lambda;
  long long shift = 0;
  for (int i = 0; i < to->size(); ++i) {
    if (i == k || lambda[i] == 0) continue;
    const Rational& bki = to->b(k, i);
    if (bki.sign() > 0) shift += bki.as_integer() * lambda[i];
  }
  out.nu[k] = -lambda[k] + static_cast<int>(shift);
  Rational pairing(0);
  for (int i = 0; i < to->size(); ++i)
    if (lambda[i] != 0) pairing += Rational(lambda[i]) * to->w(k, i);
  const long long m0 = (pairing / dk).as_integer();
  const int sign = m0 > 0 ? -1 : 1;  // positive pairing: denominators
  const long long m = m0 > 0 ? m0 : -m0;
  for (long long r = 1; r <= m; ++r)
    out.binoms.push_back({sign > 0 ? dk * Rational(1 - 2 * r) : dk * Rational(2 * r - 1),
                          sign});
  return out;
}

// The mirror map of the reverse step undoes each pullback step, in fully
// cleared polynomial form: with rho(X'_i) = M A B^{-1} (A, B binomial
// products in X_k) and rho_back(M) = M~ A~ B~^{-1}, the roundtrip identity
// reads M~ A~ PA = X'_i B~ PB, PA/PB the back-translated binomials.
bool rho_step_involutive(const MutationStep& step) {
  const MutationStep back = step.reversed();
  const SeedPtr& to = step.to();
  const int k = step.k();
  for (int i = 0; i < to->size(); ++i) {
    const MirrorImage mi = mirror_image(step, lattice_unit(*to, i));
    const MirrorImage bi = mirror_image(back, mi.nu);
    TorusElement lhs = TorusElement::monomial(to, bi.nu);
    TorusElement rhs = TorusElement::generator(to, i);
    for (const auto& [u, sign] : bi.binoms) {
      TorusElement binom = TorusElement::unit(to);
      binom.add_term(lattice_unit(*to, k), QCoefficient::q_power(u));
      (sign > 0 ? lhs : rhs) = multiply(sign > 0 ? lhs : rhs, binom);
    }
    for (const auto& [u, sign] : mi.binoms) {
      // Back-translation of (1 + q^u X_k): X_k -> X'_k^{-1}.
      TorusElement binom = TorusElement::unit(to);
      binom.add_term(lattice_unit(*to, k, -1), QCoefficient::q_power(u));
      (sign > 0 ? lhs : rhs) = multiply(sign > 0 ? lhs : rhs, binom);
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool q_commute(const Series& x, const Series& y, const Rational& q_exp, long long prec) {
  // x y = q^{q_exp} y x
  Series lhs = x * y;
  Series rhs = (y * x).scaled(QCoefficient::q_power(q_exp));
  return lhs.equal_to_prec(rhs, prec);
}

}  // namespace

Rank2Report rank2_quantum_lusztig(int kind) {
  Rank2Report rep;
  // Cleared numerators of every claim have phi-degree <= 10, so a zero
  // series through degree 12 certifies the exact identity.
  const long long prec = 12;
  if (kind == 3) {
    const SeedPtr seed = braid_local_seed();
    SeriesContext ctx{{1, 0, 0}, 24};
    auto mono = [&](std::initializer_list<int> idx) {
      LatticeVector v = lattice_zero(*seed);
      for (int i : idx) ++v[i];
      return ctx.monomial(seed, v);
    };
    BraidObjects o{mono({0, 1}), mono({2}), mono({1})};
    BraidPrimes p = braid_formula(o, prec, true, &rep.detail);

    // Mutation route: pullback of the primed identifications
    // alpha' = X'_{2,5}, beta' = X'_3, gamma' = X'_5 along mu_2.
    MutationStep step(seed, 0);
    auto pull = [&](std::initializer_list<int> idx) {
      LatticeVector v = lattice_zero(*step.to());
      for (int i : idx) ++v[i];
      return rho_element(ctx, step, TorusElement::monomial(step.to(), v));
    };
    const Series map = pull({0, 2});
    const Series mbp = pull({1});
    const Series mgp = pull({2});
    rep.formula_equals_mutation = map.equal_to_prec(p.ap, prec) &&
                                  mbp.equal_to_prec(p.bp, prec) &&
                                  mgp.equal_to_prec(p.gp, prec);
    if (!rep.formula_equals_mutation) rep.detail += "braid route mismatch; ";

    rep.involutive = braid_involution(o, p, prec);
    if (!rep.involutive) rep.detail += "braid involution fails; ";

    rep.commutation_pattern =
        q_commute(p.ap, p.bp, Rational(0), prec) &&
        q_commute(p.bp, p.gp, Rational(2), prec) &&
        q_commute(p.gp, p.ap, Rational(2), prec);
    if (!rep.commutation_pattern) rep.detail += "braid commutation pattern fails; ";
    return rep;
  }
  if (kind != 4) throw Error("rank2_quantum_lusztig: kind must be 3 or 4");

  const SeedPtr seed = doubly_local_seed();
  SeriesContext ctx{{1, 0, 1, 0}, 28};
  auto mono = [&](std::initializer_list<int> idx) {
    LatticeVector v = lattice_zero(*seed);
    for (int i : idx) ++v[i];
    return ctx.monomial(seed, v);
  };
  DoublyObjects o{mono({0, 1}), mono({2, 3}), mono({1}), mono({3})};
  DoublyPrimes p = doubly_formula(o);

  // R and S commute: both are polynomials, so this is a cleared exact check.
  {
    TorusElement a = TorusElement::monomial(seed, [&] {
      LatticeVector v = lattice_zero(*seed);
      v[0] = v[1] = 1;
      return v;
    }());
    TorusElement b = TorusElement::monomial(seed, [&] {
      LatticeVector v = lattice_zero(*seed);
      v[2] = v[3] = 1;
      return v;
    }());
    TorusElement g = TorusElement::generator(seed, 1);
    TorusElement d = TorusElement::generator(seed, 3);
    TorusElement R = a * b + a * d + g * d;
    TorusElement ag = a + g;
    TorusElement S = a * a * b + ag * ag * d;
    rep.rs_commute = (R * S == S * R);
    if (!rep.rs_commute) rep.detail += "R,S do not commute; ";
  }

  // Mutation route along mu_2, mu_5, mu_2 (vertices 0, 2, 0): primed
  // identifications alpha' = X'_{2,3}, beta' = X'_{5,6}, gamma' = X'_3,
  // delta' = X'_6 pulled back seed by seed.
  SeedPtr s0 = seed;
  MutationStep st1(s0, 0);
  MutationStep st2(st1.to(), 2);
  MutationStep st3(st2.to(), 0);
  RhoCache cache1, cache2, cache3;
  auto pull3 = [&](std::initializer_list<int> idx) {
    LatticeVector v = lattice_zero(*st3.to());
    for (int i : idx) ++v[i];
    TorusElement m = TorusElement::monomial(st3.to(), v);
    Series u = rho_element_cached(ctx, st3, cache3, m);
    // The inner pullbacks re-lift finite truncations; stage objects keep
    // k-exponents in [-2, 2] and shifts <= 2, so each hand-off degrades the
    // usable precision by at most 6.
    auto clear = [&](const Series& srs, const SeedPtr& over) {
      TorusElement f(over);
      for (const auto& [lv, c] : srs.terms()) f.add_term(lv, c);
      return f;
    };
    Series mid = rho_element_cached(ctx, st2, cache2, clear(u, st2.to())).with_prec(u.prec() - 6);
    Series low = rho_element_cached(ctx, st1, cache1, clear(mid, st1.to())).with_prec(mid.prec() - 6);
    return low;
  };
  const Series map = pull3({0, 1});
  const Series mbp = pull3({2, 3});
  const Series mgp = pull3({1});
  const Series mdp = pull3({3});
  rep.formula_equals_mutation = map.equal_to_prec(p.ap, prec) &&
                                mbp.equal_to_prec(p.bp, prec) &&
                                mgp.equal_to_prec(p.gp, prec) &&
                                mdp.equal_to_prec(p.dp, prec);
  if (!rep.formula_equals_mutation) rep.detail += "doubly route mismatch; ";

  // Inverse = the reversed-word move: every pullback step undoes its mirror.
  rep.involutive = rho_step_involutive(st1) && rho_step_involutive(st2) &&
                   rho_step_involutive(st3);
  if (!rep.involutive) rep.detail += "doubly pullback steps not involutive; ";
  else rep.detail += "inverse realized by the reversed-word move; ";

  // Primed commutation diagram: alpha'->beta', beta'->delta', gamma'->delta',
  // gamma'->beta' thick, alpha'->gamma' thin.
  const Series cap_ap = p.ap.with_prec(prec + 2), cap_bp = p.bp.with_prec(prec + 2);
  const Series cap_gp = p.gp.with_prec(prec + 2), cap_dp = p.dp.with_prec(prec + 2);
  rep.commutation_pattern =
      q_commute(cap_ap, cap_bp, Rational(-2), prec) &&
      q_commute(cap_bp, cap_dp, Rational(-2), prec) &&
      q_commute(cap_gp, cap_dp, Rational(-2), prec) &&
      q_commute(cap_gp, cap_bp, Rational(-2), prec) &&
      q_commute(cap_ap, cap_gp, Rational(-1), prec) &&
      q_commute(cap_ap, cap_dp, Rational(0), prec);
  if (!rep.commutation_pattern) rep.detail += "doubly commutation pattern fails; ";
  return rep;
}

bool rank2_classical_agreement(int kind, const std::vector<Rational>& tuple) {
  if (kind == 3) {
    const Rational &a = tuple[0], &b = tuple[1], &c = tuple[2];
    std::vector<Rational> values{a / c, c, b};
    const SeedPtr seed = braid_local_seed();
    const SeedPtr to = mutate_seed(seed, 0);
    const auto out = classical_rho_step(to, 0, values);
    const auto prime = classical_lusztig_braid({a, b, c});
    // X'_2 = a'/c', X'_3 = b', X'_5 = c'.
    return out[0] == prime[0] / prime[2] && out[1] == prime[1] && out[2] == prime[2];
  }
  if (kind != 4) throw Error("rank2_classical_agreement: kind must be 3 or 4");
  const Rational &a = tuple[0], &b = tuple[1], &c = tuple[2], &d = tuple[3];
  std::vector<Rational> values{a / c, c, b / d, d};
  SeedPtr cur = doubly_local_seed();
  for (int k : {0, 2, 0}) {
    const SeedPtr to = mutate_seed(cur, k);
    values = classical_rho_step(to, k, values);
    cur = to;
  }
  const auto prime = classical_lusztig_doubly({a, b, c, d});
  return values[0] == prime[0] / prime[2] && values[1] == prime[2] &&
         values[2] == prime[1] / prime[3] && values[3] == prime[3];
}

}  // namespace qcm
