#include "qcm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {

TorusElement chevalley_f(const SeedPtr& seed, int letter) {
  const auto& slots = seed->level_slots()[letter - 1];
  if (slots.size() < 2) throw Error("chevalley_f: level has no mutable span");
  TorusElement out(seed);
  LatticeVector v = lattice_zero(*seed);
  for (size_t j = 0; j + 1 < slots.size(); ++j) {
    v[slots[j]] = 1;
    out.add_term(v, QCoefficient(1));
  }
  return out;
}

TorusElement chevalley_k_prime(const SeedPtr& seed, int letter) {
  const auto& slots = seed->level_slots()[letter - 1];
  LatticeVector v = lattice_zero(*seed);
  for (int s : slots) v[s] = 1;
  return TorusElement::monomial(seed, v);
}

bool is_central(const SeedPtr& seed, const LatticeVector& v) {
  for (int k : seed->mutable_vertices())
    if (!skew_form(*seed, v, lattice_unit(*seed, k)).is_zero()) return false;
  return true;
}

bool is_standard(const SeedPtr& seed, const LatticeVector& v) {
  for (int k : seed->mutable_vertices())
    if (skew_form(*seed, v, lattice_unit(*seed, k)).sign() > 0) return false;
  return true;
}

std::vector<LatticeVector> central_monomials(const SeedPtr& seed) {
  // Integer kernel of M lambda = 0, M scaled to integers, via column
  // reduction with unimodular column operations.
  const auto mut = seed->mutable_vertices();
  const int n = seed->size();
  const int m = static_cast<int>(mut.size());
  std::vector<std::vector<long long>> M(m, std::vector<long long>(n, 0));
  for (int r = 0; r < m; ++r) {
    long long denom = 1;
    std::vector<Rational> row(n);
    for (int i = 0; i < n; ++i) {
      row[i] = seed->w(i, mut[r]);
      denom = std::lcm(denom, row[i].den());
    }
    for (int i = 0; i < n; ++i)
      M[r][i] = row[i].num() * (denom / row[i].den());
  }
  std::vector<std::vector<long long>> U(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) U[i][i] = 1;

  auto col_sub = [&](int dst, int src, long long q) {
    for (int r = 0; r < m; ++r) M[r][dst] -= q * M[r][src];
    for (int r = 0; r < n; ++r) U[r][dst] -= q * U[r][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < m; ++r) std::swap(M[r][a], M[r][b]);
    for (int r = 0; r < n; ++r) std::swap(U[r][a], U[r][b]);
  };

  int lead = 0;
  for (int r = 0; r < m && lead < n; ++r) {
    // Euclidean elimination across columns lead..n-1 on row r.
    while (true) {
      int piv = -1;
      for (int c = lead; c < n; ++c)
        if (M[r][c] != 0 && (piv == -1 || std::abs(M[r][c]) < std::abs(M[r][piv])))
          piv = c;
      if (piv == -1) break;
      col_swap(lead, piv);
      bool clean = true;
      for (int c = lead + 1; c < n; ++c) {
        if (M[r][c] == 0) continue;
        col_sub(c, lead, M[r][c] / M[r][lead]);
        if (M[r][c] != 0) clean = false;
      }
      if (clean) {
        ++lead;
        break;
      }
    }
  }
  std::vector<LatticeVector> basis;
  for (int c = lead; c < n; ++c) {
    bool zero = true;
    for (int r = 0; r < m; ++r)
      if (M[r][c] != 0) zero = false;
    if (!zero) continue;
    LatticeVector v(n, 0);
    for (int i = 0; i < n; ++i) v[i] = static_cast<int>(U[i][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

DistinguishedElements distinguished_elements(const SeedPtr& seed) {
  DistinguishedElements out;
  for (int l = 1; l <= seed->datum()->rank(); ++l) {
    if (seed->level_slots()[l - 1].size() < 2) continue;
    out.f.push_back(chevalley_f(seed, l));
    out.k_prime.push_back(chevalley_k_prime(seed, l));
  }
  out.central = central_monomials(seed);
  for (int v = 0; v < seed->size(); ++v) {
    if (!seed->frozen(v)) continue;
    for (int sign : {1, -1}) {
      LatticeVector lv = lattice_unit(*seed, v, sign);
      if (is_standard(seed, lv)) {
        out.standard.push_back(TorusElement::monomial(seed, lv));
        break;
      }
    }
  }
  return out;
}

CycleSpec a3_cycle_spec() {
  CycleSpec spec;
  spec.type = "A3";
  spec.word = {1, 2, 1, 3, 2, 1};
  spec.move_path = {{0, 3}, {2, 3}, {1, 2}, {4, 2}, {2, 3}, {0, 3}, {2, 2},
                    {3, 3}, {1, 3}, {0, 2}, {3, 2}, {1, 3}, {3, 3}, {2, 2}};
  spec.chains.push_back(
      {"X_{5,8}",
       {"X_{5,8}+X_{2,5,8}",
        "X_{5,8}+X_{5,6,8}+X_{2,5,6,8}",
        "X_{5,8}+X_{5,6,8}+X_{2,5,6,8}+X_{2,3,5,6,8}",
        "X_{2,5,8}+X_{2,5,6,8}+X_{2,3,5,6,8}",
        "X_{2,5,8}+X_{2,3,5,8}",
        "X_{2,5,8}",
        "X_{5,8}",
        "X_{5,8}"}});
  spec.standard_monomials = {"X_{5,8}"};
  return spec;
}

CycleSpec b3_cycle_spec() {
  CycleSpec spec;
  spec.type = "B3";
  spec.word = {1, 2, 1, 2, 3, 2, 1, 2, 3};
  spec.move_path = {{0, 4}, {3, 2}, {4, 4}, {2, 3}, {4, 2}, {7, 2}, {5, 3},
                    {1, 2}, {2, 4}, {0, 3}, {2, 2}, {5, 2}, {3, 3}, {5, 4},
                    {4, 2}, {1, 4}, {0, 2}, {4, 3}, {3, 2}, {6, 2}, {1, 3},
                    {3, 4}, {2, 2}, {6, 3}, {5, 2}, {3, 3}};
  spec.chains.push_back(
      {"X_{1}^{-1}",
       {"X_{1}^{-1}+X_{1,6}^{-1}+X_{1,2,6}^{-1}",
        "X_{1}^{-1}+X_{1,6}^{-1}+X_{1,2,6}^{-1}+X_{1,2,6,8}^{-1}+X_{1,2,3,6,8}^{-1}",
        "X_{1}^{-1}+X_{1,6}^{-1}+X_{1,2,6}^{-1}+X_{1,6,7}^{-1}+X_{1,2,6,7}^{-1}"
        "+X_{1,2,6,7,8}^{-1}+X_{1,2,3,6,7,8}^{-1}",
        "X_{1}^{-1}+X_{1,6}^{-1}+X_{1,2,6}^{-1}+X_{1,6,7}^{-1}+X_{1,2,6,7}^{-1}"
        "+X_{1,6,7,11}^{-1}+X_{1,2,6,7,11}^{-1}+X_{1,2,6,7,8,11}^{-1}+X_{1,2,3,6,7,8,11}^{-1}",
        "X_{1}^{-1}+X_{1,8}^{-1}+X_{1,2,8}^{-1}+X_{1,6,8}^{-1}+X_{1,2,6,8}^{-1}"
        "+X_{1,6,7,8}^{-1}+X_{1,2,6,7,8}^{-1}+X_{1,2,6,7,8,11}^{-1}+X_{1,2,3,6,7,8,11}^{-1}",
        "X_{1}^{-1}+X_{1,8}^{-1}+X_{1,2,8}^{-1}+X_{1,7,8}^{-1}+X_{1,2,7,8}^{-1}"
        "+X_{1,2,7,8,11}^{-1}+X_{1,2,3,7,8,11}^{-1}",
        "X_{1}^{-1}+X_{1,8}^{-1}+X_{1,2,8}^{-1}+X_{1,2,8,11}^{-1}+X_{1,2,3,8,11}^{-1}",
        "X_{1}^{-1}+X_{1,8}^{-1}+X_{1,2,8}^{-1}",
        "X_{1}^{-1}", "X_{1}^{-1}", "X_{1}^{-1}", "X_{1}^{-1}", "X_{1}^{-1}",
        "X_{1}^{-1}"}});
  spec.chains.push_back(
      {"X_{12}",
       {"X_{12}", "X_{12}", "X_{12}",
        "X_{12}+X_{11,12}",
        "X_{12}+X_{11,12}+[2]X_{2,11,12}+X_{2^2,11,12}+X_{2^2,8,11,12}",
        "X_{12}+X_{11,12}+[2]X_{2,11,12}+X_{2^2,11,12}+X_{2^2,8,11,12}+X_{2^2,6,8,11,12}",
        "X_{12}+X_{7,12}+X_{7,11,12}+[2]X_{2,7,11,12}+X_{2^2,7,11,12}"
        "+X_{2^2,7,8,11,12}+X_{2^2,7^2,8,11,12}+X_{2^2,6,7^2,8,11,12}",
        "X_{12}+X_{7,12}+[2]X_{2,7,12}+X_{2^2,7,12}+X_{2^2,7,8,12}+X_{7,11,12}"
        "+[2]X_{2,7,11,12}+X_{2^2,7,11,12}+[2]X_{2,3,7,11,12}+[2]X_{2^2,3,7,11,12}"
        "+X_{2^2,3^2,7,11,12}+X_{2^2,7,8,11,12}+[2]X_{2^2,3,7,8,11,12}"
        "+X_{2^2,3^2,7,8,11,12}+X_{2^2,3^2,7^2,8,11,12}+X_{2^2,3^2,6,7^2,8,11,12}",
        // Stage (9) as printed lost its superscripts; this is the exponent
        // pattern consistent with the neighbouring stages.
        "X_{12}+X_{7,12}+X_{7,11,12}+[2]X_{3,7,11,12}+X_{3^2,7,11,12}"
        "+X_{3^2,7,8,11,12}+X_{3^2,7^2,8,11,12}+X_{3^2,6,7^2,8,11,12}",
        "X_{12}+X_{11,12}+[2]X_{3,11,12}+X_{3^2,11,12}+X_{3^2,8,11,12}+X_{3^2,6,8,11,12}",
        "X_{12}+X_{11,12}+[2]X_{3,11,12}+X_{3^2,11,12}+X_{3^2,8,11,12}",
        "X_{12}+X_{11,12}",
        "X_{12}", "X_{12}"}});
  spec.chains.push_back(
      {"X_{9,12}",
       {"X_{9,12}",
        "X_{9,12}+[2]X_{3,9,12}+X_{3^2,9,12}+X_{3^2,8,9,12}",
        "X_{9,12}+[2]X_{3,9,12}+X_{3^2,9,12}+X_{3^2,8,9,12}+X_{3^2,7,8,9,12}",
        "X_{9,11,12}+[2]X_{3,9,11,12}+X_{3^2,9,11,12}+X_{3^2,8,9,11,12}"
        "+X_{3^2,8,9,11^2,12}+X_{3^2,7,8,9,11^2,12}",
        "X_{9,11,12}+[2]X_{2,9,11,12}+X_{2^2,9,11,12}+[2]X_{2,3,9,11,12}"
        "+[2]X_{2^2,3,9,11,12}+X_{2^2,3^2,9,11,12}+X_{2^2,8,9,11,12}"
        "+[2]X_{2^2,3,8,9,11,12}+X_{2^2,3^2,8,9,11,12}+X_{2^2,3^2,8,9,11^2,12}"
        "+X_{2^2,3^2,7,8,9,11^2,12}",
        "X_{9,11,12}+[2]X_{2,9,11,12}+X_{2^2,9,11,12}+[2]X_{2,3,9,11,12}"
        "+[2]X_{2^2,3,9,11,12}+X_{2^2,3^2,9,11,12}+X_{2^2,8,9,11,12}"
        "+[2]X_{2^2,3,8,9,11,12}+X_{2^2,3^2,8,9,11,12}+X_{2^2,6,8,9,11,12}"
        "+[2]X_{2^2,3,6,8,9,11,12}+X_{2^2,3^2,6,8,9,11,12}+X_{2^2,3^2,8,9,11^2,12}"
        "+X_{2^2,3^2,6,8,9,11^2,12}+X_{2^2,3^2,6,7,8,9,11^2,12}",
        "X_{7,9,11,12}+[2]X_{2,7,9,11,12}+X_{2^2,7,9,11,12}+[2]X_{2,3,7,9,11,12}"
        "+[2]X_{2^2,3,7,9,11,12}+X_{2^2,3^2,7,9,11,12}+X_{2^2,7,8,9,11,12}"
        "+[2]X_{2^2,3,7,8,9,11,12}+X_{2^2,3^2,7,8,9,11,12}+X_{2^2,7^2,8,9,11,12}"
        "+[2]X_{2^2,3,7^2,8,9,11,12}+X_{2^2,3^2,7^2,8,9,11,12}+X_{2^2,6,7^2,8,9,11,12}"
        "+[2]X_{2^2,3,6,7^2,8,9,11,12}+X_{2^2,3^2,6,7^2,8,9,11,12}"
        "+X_{2^2,3^2,7^2,8,9,11^2,12}+X_{2^2,3^2,6,7^2,8,9,11^2,12}",
        "X_{7,9,11,12}+[2]X_{2,7,9,11,12}+X_{2^2,7,9,11,12}+[2]X_{2,3,7,9,11,12}"
        "+[2]X_{2^2,3,7,9,11,12}+X_{2^2,3^2,7,9,11,12}+X_{2^2,7,8,9,11,12}"
        "+[2]X_{2^2,3,7,8,9,11,12}+X_{2^2,3^2,7,8,9,11,12}+X_{2^2,3^2,7^2,8,9,11,12}"
        "+X_{2^2,3^2,6,7^2,8,9,11,12}",
        "X_{7,9,11,12}+[2]X_{3,7,9,11,12}+X_{3^2,7,9,11,12}+X_{3^2,7,8,9,11,12}"
        "+X_{3^2,7^2,8,9,11,12}+X_{3^2,6,7^2,8,9,11,12}",
        "X_{9,11,12}+[2]X_{3,9,11,12}+X_{3^2,9,11,12}+X_{3^2,8,9,11,12}+X_{3^2,6,8,9,11,12}",
        "X_{9,11,12}+[2]X_{3,9,11,12}+X_{3^2,9,11,12}+X_{3^2,8,9,11,12}",
        "X_{9,11,12}",
        "X_{9,12}", "X_{9,12}"}});
  spec.chains.push_back(
      {"X_{4,9,12}",
       {"X_{4,9,12}",
        "X_{3,4,9,12}+X_{3^2,4,9,12}+X_{3^2,4,8,9,12}",
        "X_{3,4,9,12}+X_{3^2,4,9,12}+X_{3^2,4,8,9,12}+X_{3^2,4,7,8,9,12}",
        "X_{3,4,9,11,12}+X_{3^2,4,9,11,12}+X_{3^2,4,8,9,11,12}"
        "+X_{3^2,4,8,9,11^2,12}+X_{3^2,4,7,8,9,11^2,12}",
        "X_{2,3,4,9,11,12}+X_{2^2,3,4,9,11,12}+X_{2^2,3^2,4,9,11,12}"
        "+X_{2^2,3,4,8,9,11,12}+X_{2^2,3^2,4,8,9,11,12}+X_{2^2,3^2,4,8,9,11^2,12}"
        "+X_{2^2,3^2,4,7,8,9,11^2,12}",
        "X_{2,3,4,9,11,12}+X_{2^2,3,4,9,11,12}+X_{2^2,3^2,4,9,11,12}"
        "+X_{2^2,3,4,8,9,11,12}+X_{2^2,3^2,4,8,9,11,12}+X_{2^2,3,4,6,8,9,11,12}"
        "+X_{2^2,3^2,4,6,8,9,11,12}+X_{2^2,3^2,4,8,9,11^2,12}"
        "+X_{2^2,3^2,4,6,8,9,11^2,12}+X_{2^2,3^2,4,6,7,8,9,11^2,12}",
        "X_{2,3,4,7,9,11,12}+X_{2^2,3,4,7,9,11,12}+X_{2^2,3^2,4,7,9,11,12}"
        "+X_{2^2,3,4,7,8,9,11,12}+X_{2^2,3^2,4,7,8,9,11,12}+X_{2^2,3,4,7^2,8,9,11,12}"
        "+X_{2^2,3^2,4,7^2,8,9,11,12}+X_{2^2,3,4,6,7^2,8,9,11,12}"
        "+X_{2^2,3^2,4,6,7^2,8,9,11,12}+X_{2^2,3^2,4,7^2,8,9,11^2,12}"
        "+X_{2^2,3^2,4,6,7^2,8,9,11^2,12}",
        "X_{2,3,4,7,9,11,12}+X_{2^2,3,4,7,9,11,12}+X_{2^2,3^2,4,7,9,11,12}"
        "+X_{2^2,3,4,7,8,9,11,12}+X_{2^2,3^2,4,7,8,9,11,12}"
        "+X_{2^2,3^2,4,7^2,8,9,11,12}+X_{2^2,3^2,4,6,7^2,8,9,11,12}",
        "X_{3,4,7,9,11,12}+X_{3^2,4,7,9,11,12}+X_{3^2,4,7,8,9,11,12}"
        "+X_{3^2,4,7^2,8,9,11,12}+X_{3^2,4,6,7^2,8,9,11,12}",
        "X_{3,4,9,11,12}+X_{3^2,4,9,11,12}+X_{3^2,4,8,9,11,12}+X_{3^2,4,6,8,9,11,12}",
        "X_{3,4,9,11,12}+X_{3^2,4,9,11,12}+X_{3^2,4,8,9,11,12}",
        "X_{4,9,11,12}",
        "X_{4,9,12}", "X_{4,9,12}"}});
  spec.standard_monomials = {"X_{1}^{-1}", "X_{12}", "X_{9,12}", "X_{4,9,12}"};
  return spec;
}

CyclePlan plan_cycle(const CartanPtr& datum, const Word& word,
                     const std::vector<std::pair<int, int>>& move_path) {
  CyclePlan plan;
  plan.start = basic_quiver(datum, word);
  SeedPtr cur = plan.start;
  for (const auto& [pos, len] : move_path) {
    const Word& w = cur->word();
    if (pos + len > static_cast<int>(w.size())) throw Error("plan_cycle: bad move window");
    const int a = w[pos], b = w[pos + 1];
    const int kind = datum->m(a, b);
    if ((kind == 3 ? 3 : kind) != len) throw Error("plan_cycle: length does not match m_ab");
    SeedMove sm = coxeter_move_seed(cur, CoxeterMove{pos, a, b, kind});
    for (int k : sm.mutations) plan.mutations.push_back(k);
    if (kind > 2) plan.checkpoints.push_back(plan.mutations.size());
    cur = sm.target;
  }
  plan.final_seed = cur;
  if (cur->word() != word) throw Error("plan_cycle: path does not return to the word");
  plan.relabel = slot_relabeling(plan.start->level_slots(), cur->level_slots(),
                                 plan.start->size());
  return plan;
}

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back({name, ok, detail});
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << (pass() ? "PASS" : "FAIL") << "  overall (rng seed " << rng_seed << ", "
     << seconds << " s)\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  std::ostringstream os;
  os << "{\"pass\":" << (pass() ? "true" : "false") << ",\"rng_seed\":" << rng_seed
     << ",\"seconds\":" << seconds << ",\"checks\":[";
  for (size_t i = 0; i < checks.size(); ++i) {
    os << (i ? "," : "") << "{\"name\":\"" << checks[i].name
       << "\",\"pass\":" << (checks[i].pass ? "true" : "false") << ",\"detail\":\""
       << checks[i].detail << "\"}";
  }
  os << "]}";
  return os.str();
}

namespace {

struct TransportOutcome {
  TorusElement final_relabeled;
  std::vector<TorusElement> checkpoints;
  std::vector<SeedPtr> checkpoint_seeds;
};

TransportOutcome transport(const CyclePlan& plan, const TorusElement& f) {
  TransportOutcome out;
  TorusElement cur = f;
  SeedPtr seed = plan.start;
  size_t next_cp = 0;
  for (size_t t = 0; t <= plan.mutations.size(); ++t) {
    while (next_cp < plan.checkpoints.size() && plan.checkpoints[next_cp] == t) {
      out.checkpoints.push_back(cur);
      out.checkpoint_seeds.push_back(seed);
      ++next_cp;
    }
    if (t == plan.mutations.size()) break;
    MutationStep step(seed, plan.mutations[t]);
    cur = mutate_element(step, cur);
    seed = step.to();
  }
  out.final_relabeled = cur.relabeled(plan.relabel, plan.start);
  return out;
}

std::vector<BigRational> random_positive(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(1, 10);
  std::vector<BigRational> v;
  for (int i = 0; i < n; ++i) v.push_back(BigRational(d(rng), d(rng)));
  return v;
}

}  // namespace

VerificationReport verify_rank3(const CycleSpec& spec, bool trace,
                                std::vector<std::string>* trace_lines) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.rng_seed = spec.rng_seed;
  const CartanPtr datum = make_cartan(spec.type);
  const CyclePlan plan = plan_cycle(datum, spec.word, spec.move_path);
  const SeedPtr seed = plan.start;

  // (i) Seed-level: the mutation sequence returns the seed up to the
  // canonical relabeling.
  {
    bool ok = true;
    for (int i = 0; i < seed->size() && ok; ++i)
      for (int j = 0; j < seed->size() && ok; ++j)
        if (plan.final_seed->b(i, j) != seed->b(plan.relabel[i], plan.relabel[j]))
          ok = false;
    rep.add("seed returns up to sigma (" + std::to_string(plan.mutations.size()) +
                " mutations)",
            ok);
  }

  // (ii) Tropical: central monomials travel as monomials and return; the
  // c-vector matrix is the permutation of sigma.
  {
    bool ok = true;
    std::string detail;
    for (const LatticeVector& c : central_monomials(seed)) {
      if (!is_central(seed, c)) {
        ok = false;
        detail = "kernel vector not central";
        break;
      }
      LatticeVector v = c;
      SeedPtr s = seed;
      for (int k : plan.mutations) {
        MutationStep step(s, k);
        v = mutate_monomial_tropical(step, v);
        s = step.to();
      }
      LatticeVector back(seed->size(), 0);
      for (int i = 0; i < seed->size(); ++i) back[plan.relabel[i]] += v[i];
      if (back != c) {
        ok = false;
        detail = "central monomial did not return";
        break;
      }
    }
    const auto mut = seed->mutable_vertices();
    const auto rows = c_vectors(seed, plan.mutations);
    for (size_t r = 0; r < mut.size() && ok; ++r)
      for (size_t c = 0; c < mut.size(); ++c) {
        const int expect = (plan.relabel[mut[r]] == mut[c]) ? 1 : 0;
        if (rows[r][c] != expect) {
          ok = false;
          detail = "c-vector rows are not the sigma permutation";
          break;
        }
      }
    rep.add("tropical: central monomials and c-vectors", ok, detail);
  }

  // (iii) Symbolic transport with golden intermediate stages.
  for (const auto& chain : spec.chains) {
    bool ok = true;
    std::string detail;
    try {
      const TorusElement start = parse_expr(seed, chain.start);
      TransportOutcome out = transport(plan, start);
      if (out.checkpoints.size() != chain.stages.size()) {
        ok = false;
        detail = "checkpoint count mismatch";
      }
      for (size_t s = 0; ok && s < chain.stages.size(); ++s) {
        const TorusElement expect = parse_expr(out.checkpoint_seeds[s], chain.stages[s]);
        if (out.checkpoints[s] != expect) {
          ok = false;
          detail = "stage " + std::to_string(s + 1) + " differs: got " +
                   format_expr(out.checkpoints[s]);
        }
        if (trace && trace_lines)
          trace_lines->push_back(chain.start + " stage (" + std::to_string(s + 1) +
                                 "): " + format_expr(out.checkpoints[s]));
      }
      if (ok && out.final_relabeled != start) {
        ok = false;
        detail = "chain does not return to itself";
      }
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    rep.add("golden chain " + chain.start, ok, detail);
  }

  // f_i, K'_i and the central monomials return to themselves.
  {
    const DistinguishedElements dist = distinguished_elements(seed);
    bool ok = true;
    std::string detail;
    auto check_returns = [&](const TorusElement& e, const std::string& what) {
      if (!ok) return;
      try {
        if (transport(plan, e).final_relabeled != e) {
          ok = false;
          detail = what + " did not return";
        }
      } catch (const Error& err) {
        ok = false;
        detail = what + ": " + err.what();
      }
    };
    for (size_t i = 0; i < dist.f.size(); ++i)
      check_returns(dist.f[i], "f_" + std::to_string(i + 1));
    for (size_t i = 0; i < dist.k_prime.size(); ++i)
      check_returns(dist.k_prime[i], "K'_" + std::to_string(i + 1));
    for (const LatticeVector& c : dist.central)
      check_returns(TorusElement::monomial(seed, c), "central monomial");
    rep.add("Chevalley images and central monomials return", ok, detail);
  }

  // (iv) Classical shadow on random positive assignments.
  {
    std::mt19937 rng(spec.rng_seed);
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const auto values = random_positive(rng, seed->size());
      const auto out = classical_shadow(seed, plan.mutations, values);
      for (int i = 0; i < seed->size(); ++i)
        if (out[i] != values[plan.relabel[i]]) ok = false;
    }
    rep.add("classical shadow closes (10 random assignments)", ok);
  }

  // (v) Coverage note: linearity spreads the identity from the verified
  // elements to every cluster variable.
  rep.add("coverage",
          true,
          spec.type == "A3"
              ? "f_i, K'_i, C_1, C_2 and X_{5,8} imply all X_i by linearity"
              : "f_i, K'_i, C_1..C_3 and the four standard monomials imply all X_i");

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport verify_cycle(const CartanPtr& datum, const EdgePath& cycle,
                                bool with_decomposition, unsigned rng_seed) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.rng_seed = rng_seed;
  if (cycle.empty()) {
    rep.add("empty cycle", true);
    return rep;
  }
  if (!path_is_closed(*datum, cycle)) throw NotACycle("verify_cycle: path is not closed");

  const Word base = cycle.front().from;
  const SeedPtr seed = basic_quiver(datum, base);

  // Induced mutation sequence along the edges.
  std::vector<int> mutations;
  SeedPtr cur = seed;
  for (const PathEdge& e : cycle) {
    if (e.move.kind == 6) throw UnsupportedRank("verify_cycle: triply-laced move");
    SeedMove sm = coxeter_move_seed(cur, e.move);
    for (int k : sm.mutations) mutations.push_back(k);
    cur = sm.target;
  }
  const std::vector<int> relabel =
      slot_relabeling(seed->level_slots(), cur->level_slots(), seed->size());

  CyclePlan plan;
  plan.start = seed;
  plan.final_seed = cur;
  plan.mutations = mutations;
  plan.relabel = relabel;

  {
    bool ok = true;
    for (int i = 0; i < seed->size() && ok; ++i)
      for (int j = 0; j < seed->size() && ok; ++j)
        if (cur->b(i, j) != seed->b(relabel[i], relabel[j])) ok = false;
    rep.add("seed returns up to relabeling", ok);
  }

  const DistinguishedElements dist = distinguished_elements(seed);
  {
    bool ok = true;
    std::string detail;
    for (const TorusElement& s : dist.standard) {
      try {
        if (transport(plan, s).final_relabeled != s) {
          ok = false;
          detail = "standard monomial did not return";
        }
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
      }
    }
    for (const LatticeVector& c : dist.central) {
      try {
        const TorusElement e = TorusElement::monomial(seed, c);
        if (transport(plan, e).final_relabeled != e) {
          ok = false;
          detail = "central monomial did not return";
        }
      } catch (const Error& e2) {
        ok = false;
        detail = e2.what();
      }
    }
    rep.add("standard and central monomials return", ok, detail);
  }
  {
    std::mt19937 rng(rng_seed);
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const auto values = random_positive(rng, seed->size());
      const auto out = classical_shadow(seed, mutations, values);
      for (int i = 0; i < seed->size(); ++i)
        if (out[i] != values[relabel[i]]) ok = false;
    }
    rep.add("classical shadow closes", ok);
  }

  if (with_decomposition) {
    bool ok = true;
    std::string detail;
    try {
      const DecompositionWitness witness = decompose(*datum, cycle);
      if (!verify_witness(*datum, cycle, witness)) {
        ok = false;
        detail = "witness replay failed";
      }
      int rank3 = 0, squares = 0;
      for (const auto& f : witness.factors)
        (f.kind == GeneratorKind::Rank3 ? rank3 : squares)++;
      detail = std::to_string(squares) + " squares, " + std::to_string(rank3) +
               " rank-3 factors";
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
    }
    rep.add("Tits decomposition cross-check", ok, detail);
  }

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace qcm
