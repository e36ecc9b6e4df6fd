#include "qcm/tits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {

bool path_is_closed(const CartanDatum& datum, const EdgePath& path) {
  if (path.empty()) return true;
  Word cur = path.front().from;
  for (const PathEdge& e : path) {
    if (e.from != cur) return false;
    cur = e.target(datum);
  }
  return cur == path.front().from;
}

EdgePath reversed_path(const CartanDatum& datum, const EdgePath& path) {
  EdgePath out;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    out.push_back(it->inverted(datum));
  return out;
}

EdgePath free_reduce(const CartanDatum& datum, const EdgePath& path) {
  EdgePath stack;
  for (const PathEdge& e : path) {
    if (!stack.empty() && e == stack.back().inverted(datum)) stack.pop_back();
    else stack.push_back(e);
  }
  // Cyclic reduction is not applied: loops stay based.
  return stack;
}

namespace {

int move_end(const CoxeterMove& m) { return m.pos + m.length(); }

bool disjoint_supports(const CoxeterMove& a, const CoxeterMove& b) {
  return move_end(a) <= b.pos || move_end(b) <= a.pos;
}

}  // namespace

std::optional<GeneratorCycle> classify_generator(const CartanDatum& datum,
                                                 const EdgePath& cycle) {
  if (cycle.empty() || !path_is_closed(datum, cycle)) return std::nullopt;
  if (free_reduce(datum, cycle).size() != cycle.size()) return std::nullopt;

  if (cycle.size() == 4) {
    const CoxeterMove &m0 = cycle[0].move, &m1 = cycle[1].move, &m2 = cycle[2].move,
                      &m3 = cycle[3].move;
    if (m0.pos == m2.pos && m1.pos == m3.pos && m0.kind == m2.kind && m1.kind == m3.kind &&
        m0.a == m2.b && m0.b == m2.a && m1.a == m3.b && m1.b == m3.a &&
        disjoint_supports(m0, m1)) {
      GeneratorCycle g;
      g.kind = GeneratorKind::Square;
      g.letters = {m0.a, m0.b, m1.a, m1.b};
      return g;
    }
  }

  // Rank-3 window: a common interval covering all moves, identical letters
  // outside it, and at most three letters inside.
  int lo = cycle.front().move.pos, hi = move_end(cycle.front().move);
  for (const PathEdge& e : cycle) {
    lo = std::min(lo, e.move.pos);
    hi = std::max(hi, move_end(e.move));
  }
  const Word& base = cycle.front().from;
  std::set<int> letters;
  for (const PathEdge& e : cycle) {
    for (int p = 0; p < static_cast<int>(base.size()); ++p) {
      if (p >= lo && p < hi) continue;
      if (e.from[p] != base[p]) return std::nullopt;
    }
    for (int p = lo; p < hi; ++p) letters.insert(e.from[p]);
  }
  if (letters.size() > 3) return std::nullopt;
  GeneratorCycle g;
  g.kind = GeneratorKind::Rank3;
  g.letters.assign(letters.begin(), letters.end());
  g.window_begin = lo;
  g.window_end = hi;
  return g;
}

namespace {

struct Decomposer {
  const CartanDatum& datum;
  int depth = 0;

  std::vector<WitnessFactor> run(const EdgePath& cycle) {
    if (++depth > 20000) throw Error("decompose: recursion depth exceeded");
    std::vector<WitnessFactor> out = decompose_loop(free_reduce(datum, cycle));
    --depth;
    return out;
  }

  static void conjugate_all(std::vector<WitnessFactor>& factors, const EdgePath& prefix) {
    for (WitnessFactor& f : factors) {
      EdgePath c = prefix;
      c.insert(c.end(), f.conjugator.begin(), f.conjugator.end());
      f.conjugator = std::move(c);
    }
  }

  std::vector<WitnessFactor> decompose_loop(EdgePath cycle) {
    if (cycle.empty()) return {};
    if (!path_is_closed(datum, cycle)) throw NotACycle("decompose: path does not close");

    // Split at self-intersections: inner loops are decomposed separately.
    {
      std::map<Word, int> seen;
      Word cur = cycle.front().from;
      for (size_t t = 0; t < cycle.size(); ++t) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
          const size_t a = it->second;
          EdgePath inner(cycle.begin() + a, cycle.begin() + t);
          EdgePath prefix(cycle.begin(), cycle.begin() + a);
          EdgePath outer = prefix;
          outer.insert(outer.end(), cycle.begin() + t, cycle.end());
          if (!inner.empty() && inner.size() != cycle.size()) {
            // beta = prefix . inner . rest == (prefix inner prefix^{-1}) . outer
            auto inner_factors = run(inner);
            conjugate_all(inner_factors, prefix);
            auto outer_factors = run(outer);
            inner_factors.insert(inner_factors.end(), outer_factors.begin(),
                                 outer_factors.end());
            return inner_factors;
          }
        }
        seen[cur] = static_cast<int>(t);
        cur = cycle[t].target(datum);
      }
    }

    // Direct generators.
    if (auto g = classify_generator(datum, cycle)) {
      for (int x : g->letters)
        for (int y : g->letters)
          if (x != y && datum.m(x, y) == 6)
            throw UnsupportedRank("decompose: triply-laced rank-3 window");
      WitnessFactor f;
      f.loop = cycle;
      f.kind = g->kind;
      return {f};
    }

    // All last letters equal: strip and recurse (observation **).
    const Word& base = cycle.front().from;
    const int n = static_cast<int>(base.size());
    std::set<int> last_letters;
    {
      Word cur = base;
      for (const PathEdge& e : cycle) {
        last_letters.insert(cur.back());
        cur = e.target(datum);
      }
    }
    if (last_letters.size() == 1) {
      EdgePath stripped;
      for (const PathEdge& e : cycle) {
        if (move_end(e.move) >= n) throw Error("decompose: move crosses a common last letter");
        Word w = e.from;
        w.pop_back();
        stripped.push_back({std::move(w), e.move});
      }
      auto factors = run(stripped);
      const int letter = base.back();
      for (WitnessFactor& f : factors) {
        for (PathEdge& e : f.conjugator) e.from.push_back(letter);
        for (PathEdge& e : f.loop) e.from.push_back(letter);
      }
      return factors;
    }

    // Induction step: pick the smallest letter with a maximal all-i arc.
    const int i = *last_letters.begin();
    return split_at_arc(cycle, i);
  }

  // --- induction step machinery ---

  // End move of a word whose suffix is a two-letter pattern of the given kind.
  static CoxeterMove end_move(const Word& w, int other, int kind) {
    const int len = (kind == 3) ? 3 : kind;
    const int pos = static_cast<int>(w.size()) - len;
    const int a = w[pos];
    const int b = (a == other) ? w[pos + 1] : other;
    return {pos, a, b, kind};
  }

  // BFS path between two reduced words of the same element, moves restricted
  // to windows inside [0, limit).
  EdgePath connect(const Word& from, const Word& to, int limit) const {
    if (from == to) return {};
    std::map<Word, std::pair<Word, CoxeterMove>> parent;
    std::deque<Word> todo{from};
    parent[from] = {from, CoxeterMove{}};
    while (!todo.empty()) {
      Word w = todo.front();
      todo.pop_front();
      for (const CoxeterMove& m : available_moves(datum, w)) {
        if (move_end(m) > limit) continue;
        Word u = apply_move(datum, w, m);
        if (parent.count(u)) continue;
        parent[u] = {w, m};
        if (u == to) {
          EdgePath path;
          Word cur = to;
          while (cur != from) {
            auto& [pw, pm] = parent[cur];
            path.push_back({pw, pm});
            cur = pw;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        todo.push_back(u);
      }
    }
    throw Error("decompose: prefix words not connected");
  }

  // BFS path within the window [start, end) whose intermediate vertices all
  // satisfy the last-letter predicate.
  EdgePath connect_constrained(const Word& from, const Word& to, int start,
                               bool want_last_i, int i) const {
    auto ok = [&](const Word& w) { return (w.back() == i) == want_last_i; };
    if (!ok(from) || !ok(to)) throw Error("decompose: arc endpoints violate constraint");
    if (from == to) return {};
    std::map<Word, std::pair<Word, CoxeterMove>> parent;
    std::deque<Word> todo{from};
    parent[from] = {from, CoxeterMove{}};
    while (!todo.empty()) {
      Word w = todo.front();
      todo.pop_front();
      for (const CoxeterMove& m : available_moves(datum, w)) {
        if (m.pos < start) continue;
        if (datum.m(m.a, m.b) == 6)
          throw UnsupportedRank("decompose: triply-laced rank-3 window");
        Word u = apply_move(datum, w, m);
        if (!ok(u) || parent.count(u)) continue;
        parent[u] = {w, m};
        if (u == to) {
          EdgePath path;
          Word cur = to;
          while (cur != from) {
            auto& [pw, pm] = parent[cur];
            path.push_back({pw, pm});
            cur = pw;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        todo.push_back(u);
      }
    }
    throw Error("decompose: constrained arc not found");
  }

  // Squares tying a prefix ladder to the common end move. Returns factors
  // whose product free-reduces to A^{-1} EM(u_0) A' EM(u_p)^{-1} at u_p.
  std::vector<WitnessFactor> ladder_squares(const EdgePath& ladder, int other,
                                            int kind) const {
    std::vector<WitnessFactor> out;
    const size_t p = ladder.size();
    for (size_t t = 1; t <= p; ++t) {
      const Word& prev = ladder[t - 1].from;
      const Word next = ladder[t - 1].target(datum);
      const CoxeterMove step = ladder[t - 1].move;
      const CoxeterMove em_prev = end_move(prev, other, kind);
      const CoxeterMove em_next = end_move(next, other, kind);
      // sigma_t, a loop at next: next -> prev -> prev' -> next' -> next.
      WitnessFactor f;
      f.kind = GeneratorKind::Square;
      const Word prev_p = apply_move(datum, prev, em_prev);
      const Word next_p = apply_move(datum, next, em_next);
      f.loop = {PathEdge{next, step.reversed()}, PathEdge{prev, em_prev},
                PathEdge{prev_p, step}, PathEdge{next_p, em_next.reversed()}};
      // Conjugator: from u_p back to next along the ladder tail.
      EdgePath tail(ladder.begin() + t, ladder.end());
      f.conjugator = reversed_path(datum, tail);
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<WitnessFactor> split_at_arc(const EdgePath& cycle, int i) {
    const size_t L = cycle.size();
    std::vector<Word> verts;
    verts.reserve(L);
    Word cur = cycle.front().from;
    for (const PathEdge& e : cycle) {
      verts.push_back(cur);
      cur = e.target(datum);
    }
    // Rotate so the cycle starts at the beginning of a maximal all-i arc.
    size_t start = L;
    for (size_t t = 0; t < L; ++t)
      if (verts[t].back() == i && verts[(t + L - 1) % L].back() != i) {
        start = t;
        break;
      }
    if (start == L) throw Error("decompose: no arc boundary found");
    EdgePath rot;
    for (size_t t = 0; t < L; ++t) rot.push_back(cycle[(start + t) % L]);
    EdgePath rotation_prefix(cycle.begin(), cycle.begin() + start);

    // rot = beta' . E2 . beta'' . E1 with all of beta' ending in i.
    size_t arc_len = 0;
    {
      Word w = rot.front().from;
      while (arc_len < L) {
        Word nxt = rot[arc_len].target(datum);
        if (nxt.back() != i) break;
        ++arc_len;
        w = nxt;
      }
    }
    if (arc_len + 2 > L) throw Error("decompose: arc spans the whole cycle");
    EdgePath beta1(rot.begin(), rot.begin() + arc_len);           // i_1 -> i_2
    const PathEdge E2 = rot[arc_len];                             // i_2 -> i_2'
    EdgePath beta2(rot.begin() + arc_len + 1, rot.end() - 1);     // i_2' -> i_1'
    const PathEdge E1 = rot.back();                               // i_1' -> i_1

    const Word i1 = rot.front().from;
    const Word i2 = E2.from;
    const int n = static_cast<int>(i1.size());
    const int j = (E1.move.a == i) ? E1.move.b : E1.move.a;
    const int k = (E2.move.a == i) ? E2.move.b : E2.move.a;
    const int kind_j = E1.move.kind, kind_k = E2.move.kind;
    const int len_j = (kind_j == 3) ? 3 : kind_j;
    const int len_k = (kind_k == 3) ? 3 : kind_k;
    for (int x : {i, j, k})
      for (int y : {i, j, k})
        if (x != y && datum.m(x, y) == 6)
          throw UnsupportedRank("decompose: triply-laced rank-3 window");

    // The rank-3 window words: Z + (reduced word of w_J ending with the
    // right pattern), J = {i, j, k}.
    std::vector<int> J{i};
    if (j != i && j != J.back()) J.push_back(j);
    if (k != i && k != j) J.push_back(k);
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());

    const Word wJ = parabolic_longest(J);
    const Word Z = coset_prefix(i1, wJ);
    const int window = static_cast<int>(Z.size());

    auto suffix_ending_with = [&](int other, int kind) {
      // A reduced word of w_J whose suffix is the alternating pattern of the
      // given kind ending with i.
      std::deque<Word> todo{wJ};
      std::set<Word> seen{wJ};
      while (!todo.empty()) {
        Word w = todo.front();
        todo.pop_front();
        const int len = (kind == 3) ? 3 : kind;
        if (static_cast<int>(w.size()) >= len) {
          bool match = true;
          for (int t = 0; t < len; ++t) {
            const int expect = (t % 2 == (len % 2 == 0 ? 1 : 0)) ? i : other;
            if (w[w.size() - len + t] != expect) match = false;
          }
          if (match) return w;
        }
        for (const CoxeterMove& m : available_moves(datum, w)) {
          Word u = apply_move(datum, w, m);
          if (seen.insert(u).second) todo.push_back(u);
        }
      }
      throw Error("decompose: no window word with the required suffix");
    };

    Word Rj = suffix_ending_with(j, kind_j);
    Word Rk = (j == k && kind_j == kind_k) ? Rj : suffix_ending_with(k, kind_k);
    Word jj = Z, jk = Z;
    jj.insert(jj.end(), Rj.begin(), Rj.end());
    jk.insert(jk.end(), Rk.begin(), Rk.end());

    // Ladders within the prefix [0, n - len).
    EdgePath A = lift_prefix_path(i1, jj, n - len_j);
    EdgePath B = lift_prefix_path(i2, jk, n - len_k);

    // Window arcs delta (last letter i) and delta' (last letter != i).
    EdgePath delta, delta_p;
    const CoxeterMove Fj = end_move(jj, j, kind_j);
    const CoxeterMove Fk = end_move(jk, k, kind_k);
    const Word jjp = apply_move(datum, jj, Fj);
    const Word jkp = apply_move(datum, jk, Fk);
    if (jj != jk) {
      delta = connect_constrained(jj, jk, window, true, i);
      delta_p = connect_constrained(jjp, jkp, window, false, i);
    } else if (jjp != jkp) {
      delta_p = connect_constrained(jjp, jkp, window, false, i);
    }

    std::vector<WitnessFactor> factors;

    // G1: the all-i loop beta' B delta^{-1} A^{-1}, recursively decomposed.
    {
      EdgePath g1 = beta1;
      g1.insert(g1.end(), B.begin(), B.end());
      EdgePath rdelta = reversed_path(datum, delta);
      g1.insert(g1.end(), rdelta.begin(), rdelta.end());
      EdgePath rA = reversed_path(datum, A);
      g1.insert(g1.end(), rA.begin(), rA.end());
      auto sub = run(g1);
      factors.insert(factors.end(), sub.begin(), sub.end());
    }

    // G_sq2: ladder squares for B conjugated by A . delta.
    {
      auto sq = ladder_squares(B, k, kind_k);
      EdgePath conj = A;
      conj.insert(conj.end(), delta.begin(), delta.end());
      for (WitnessFactor& f : sq) {
        EdgePath c = conj;
        c.insert(c.end(), f.conjugator.begin(), f.conjugator.end());
        f.conjugator = std::move(c);
      }
      factors.insert(factors.end(), sq.begin(), sq.end());
    }

    // G2: the rank-3 generator (Fj delta' Fk^{-1} delta^{-1})^{-1} at jj,
    // conjugated by A.
    if (!(jj == jk && jjp == jkp)) {
      WitnessFactor f;
      f.kind = GeneratorKind::Rank3;
      EdgePath loop;
      loop.push_back({jj, Fj});
      loop.insert(loop.end(), delta_p.begin(), delta_p.end());
      loop.push_back(PathEdge{jk, Fk}.inverted(datum));
      EdgePath rdelta = reversed_path(datum, delta);
      loop.insert(loop.end(), rdelta.begin(), rdelta.end());
      f.loop = reversed_path(datum, loop);  // orientation -1
      f.orientation = -1;
      f.conjugator = A;
      if (!free_reduce(datum, f.loop).empty()) factors.push_back(std::move(f));
    }

    // G_sq1: inverse ladder squares for A, conjugated by A.
    {
      auto sq = ladder_squares(A, j, kind_j);
      std::reverse(sq.begin(), sq.end());
      for (WitnessFactor& f : sq) {
        f.loop = reversed_path(datum, f.loop);
        f.orientation = -1;
        EdgePath c = A;
        c.insert(c.end(), f.conjugator.begin(), f.conjugator.end());
        f.conjugator = std::move(c);
      }
      factors.insert(factors.end(), sq.begin(), sq.end());
    }

    // G3: the remainder loop W = beta'' A' delta' B'^{-1} at i_2',
    // conjugated by E1^{-1} beta''^{-1}.
    {
      EdgePath Ap = primed_path(A, j, kind_j);
      EdgePath Bp = primed_path(B, k, kind_k);
      EdgePath W = beta2;
      W.insert(W.end(), Ap.begin(), Ap.end());
      W.insert(W.end(), delta_p.begin(), delta_p.end());
      EdgePath rBp = reversed_path(datum, Bp);
      W.insert(W.end(), rBp.begin(), rBp.end());
      auto sub = run(W);
      EdgePath conj;
      conj.push_back(E1.inverted(datum));
      EdgePath rb2 = reversed_path(datum, beta2);
      conj.insert(conj.end(), rb2.begin(), rb2.end());
      conjugate_all(sub, conj);
      factors.insert(factors.end(), sub.begin(), sub.end());
    }

    conjugate_all(factors, rotation_prefix);
    return factors;
  }

  Word parabolic_longest(const std::vector<int>& J) const {
    // Greedy descent within the parabolic subgroup on J.
    Word w;
    while (true) {
      bool extended = false;
      for (int x : J) {
        w.push_back(x);
        if (is_reduced(datum, w)) {
          extended = true;
          break;
        }
        w.pop_back();
      }
      if (!extended) return w;
    }
  }

  // Reduced word Z with Z + wJ-word reduced and representing the same
  // element as `word` (greedy left extraction of w wJ^{-1}).
  Word coset_prefix(const Word& word, const Word& wJ) const {
    // Action of w wJ^{-1} on the simple roots, then greedy factorization.
    Word combined = word;
    Word rwj(wJ.rbegin(), wJ.rend());
    combined.insert(combined.end(), rwj.begin(), rwj.end());
    // combined represents w wJ^{-1} (not reduced); extract greedily:
    // pick the smallest x with u^{-1}(alpha_x) < 0, i.e. (x + combined)
    // shortens on the left.
    const size_t target_len = word.size() - wJ.size();
    Word Z;
    Word rest = combined;
    while (Z.size() < target_len) {
      bool found = false;
      for (int x = 1; x <= datum.rank() && !found; ++x) {
        // l(s_x u) < l(u) iff u^{-1}(alpha_x) < 0.
        Root r = datum.simple_root(x);
        // Apply u^{-1} = reverse letters of `rest`.
        for (size_t t = 0; t < rest.size(); ++t) r = datum.reflect(rest[t], r);
        if (!datum.is_positive(r)) {
          Z.push_back(x);
          Word nr{x};
          nr.insert(nr.end(), rest.begin(), rest.end());
          rest = std::move(nr);
          found = true;
        }
      }
      if (!found) throw Error("decompose: coset prefix extraction failed");
    }
    if (!is_reduced(datum, Z)) throw Error("decompose: coset prefix not reduced");
    return Z;
  }

  EdgePath lift_prefix_path(const Word& from, const Word& to, int limit) const {
    Word pf(from.begin(), from.begin() + limit);
    Word pt(to.begin(), to.begin() + limit);
    EdgePath prefix_path = connect(pf, pt, limit);
    EdgePath out;
    Word cur = from;
    for (const PathEdge& e : prefix_path) {
      out.push_back({cur, e.move});
      cur = apply_move(datum, cur, e.move);
    }
    return out;
  }

  // The same ladder one end-move down.
  EdgePath primed_path(const EdgePath& ladder, int other, int kind) const {
    EdgePath out;
    for (const PathEdge& e : ladder) {
      const Word w = apply_move(datum, e.from, end_move(e.from, other, kind));
      out.push_back({w, e.move});
    }
    return out;
  }
};

}  // namespace

DecompositionWitness decompose(const CartanDatum& datum, const EdgePath& cycle) {
  if (!path_is_closed(datum, cycle)) throw NotACycle("decompose: input is not closed");
  for (const PathEdge& e : cycle)
    if (!is_reduced(datum, e.from)) throw NotACycle("decompose: vertex is not reduced");
  DecompositionWitness w;
  w.base = cycle.empty() ? Word{} : cycle.front().from;
  Decomposer d{datum};
  w.factors = d.run(cycle);
  return w;
}

bool verify_witness(const CartanDatum& datum, const EdgePath& cycle,
                    const DecompositionWitness& witness) {
  EdgePath total;
  for (const WitnessFactor& f : witness.factors) {
    if (!classify_generator(datum, free_reduce(datum, f.loop)) &&
        !free_reduce(datum, f.loop).empty())
      return false;
    total.insert(total.end(), f.conjugator.begin(), f.conjugator.end());
    total.insert(total.end(), f.loop.begin(), f.loop.end());
    EdgePath rc = reversed_path(datum, f.conjugator);
    total.insert(total.end(), rc.begin(), rc.end());
  }
  return free_reduce(datum, total) == free_reduce(datum, cycle);
}

std::string DecompositionWitness::to_json(const CartanDatum&) const {
  std::ostringstream os;
  auto path_json = [&](const EdgePath& p) {
    std::ostringstream ps;
    ps << "[";
    for (size_t t = 0; t < p.size(); ++t)
      ps << (t ? "," : "") << "{\"word\":\"" << word_str(p[t].from) << "\",\"pos\":"
         << p[t].move.pos + 1 << ",\"pair\":[" << p[t].move.a << "," << p[t].move.b
         << "],\"kind\":" << p[t].move.kind << "}";
    ps << "]";
    return ps.str();
  };
  os << "{\"base\":\"" << word_str(base) << "\",\"factors\":[";
  for (size_t f = 0; f < factors.size(); ++f) {
    os << (f ? "," : "") << "{\"kind\":\""
       << (factors[f].kind == GeneratorKind::Square ? "square" : "rank3")
       << "\",\"orientation\":" << factors[f].orientation
       << ",\"conjugator\":" << path_json(factors[f].conjugator)
       << ",\"loop\":" << path_json(factors[f].loop) << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace qcm
