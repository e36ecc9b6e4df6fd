#include "qcm/qtorus.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qcm/errors.hpp"

namespace qcm {

LatticeVector lattice_zero(const ClusterSeed& seed) {
  return LatticeVector(seed.size(), 0);
}

LatticeVector lattice_unit(const ClusterSeed& seed, int v, int power) {
  LatticeVector out(seed.size(), 0);
  out[v] = power;
  return out;
}

Rational skew_form(const ClusterSeed& seed, const LatticeVector& a, const LatticeVector& b) {
  Rational s(0);
  for (int i = 0; i < seed.size(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < seed.size(); ++j) {
      if (b[j] == 0) continue;
      s += Rational(a[i]) * Rational(b[j]) * seed.w(i, j);
    }
  }
  return s;
}

TorusElement TorusElement::monomial(const SeedPtr& seed, const LatticeVector& v,
                                    QCoefficient c) {
  TorusElement out(seed);
  out.add_term(v, c);
  return out;
}

void TorusElement::add_term(const LatticeVector& v, const QCoefficient& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(v);
  if (it == terms_.end()) {
    terms_[v] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  if (!seed_) seed_ = o.seed_;
  else if (o.seed_ && o.seed_ != seed_) throw SeedMismatch();
  for (const auto& [v, c] : o.terms_) add_term(v, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  if (!seed_) seed_ = o.seed_;
  else if (o.seed_ && o.seed_ != seed_) throw SeedMismatch();
  for (const auto& [v, c] : o.terms_) add_term(v, -c);
  return *this;
}

TorusElement TorusElement::operator-() const {
  TorusElement out(seed_);
  for (const auto& [v, c] : terms_) out.terms_[v] = -c;
  return out;
}

TorusElement TorusElement::scaled(const QCoefficient& c) const {
  TorusElement out(seed_);
  for (const auto& [v, c0] : terms_) out.add_term(v, c0 * c);
  return out;
}

TorusElement TorusElement::conjugated_by_monomial(const LatticeVector& m) const {
  TorusElement out(seed_);
  const Rational two(2);
  for (const auto& [v, c] : terms_)
    out.add_term(v, c.shifted(two * skew_form(*seed_, v, m)));
  return out;
}

TorusElement TorusElement::star() const {
  TorusElement out(seed_);
  for (const auto& [v, c] : terms_) out.terms_[v] = c.bar();
  return out;
}

BigRational TorusElement::eval_classical(const std::vector<BigRational>& values) const {
  BigRational total(0);
  for (const auto& [v, c] : terms_) {
    BigRational m(1);
    for (size_t i = 0; i < v.size(); ++i) {
      int e = v[i];
      const BigRational& base = values[i];
      for (; e > 0; --e) m *= base;
      for (; e < 0; ++e) m /= base;
    }
    total += m * BigRational(c.eval_at_one());
  }
  return total;
}

TorusElement TorusElement::relabeled(const std::vector<int>& perm, const SeedPtr& target) const {
  TorusElement out(target);
  for (const auto& [v, c] : terms_) {
    LatticeVector nv(target->size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) nv[perm[i]] += v[i];
    out.add_term(nv, c);
  }
  return out;
}

std::string TorusElement::str() const { return format_expr(*this); }

namespace {

inline void accumulate_product(std::map<LatticeVector, QCoefficient>& into,
                               const ClusterSeed& seed, const LatticeVector& va,
                               const QCoefficient& ca, const LatticeVector& vb,
                               const QCoefficient& cb) {
  // X_l X_m = q^{-(l,m)} X_{l+m}
  LatticeVector v = va;
  for (size_t i = 0; i < v.size(); ++i) v[i] += vb[i];
  QCoefficient c = QCoefficient::mul_shifted(ca, cb, -skew_form(seed, va, vb));
  auto it = into.find(v);
  if (it == into.end()) {
    if (!c.is_zero()) into.emplace(std::move(v), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

}  // namespace

TorusElement multiply_serial(const TorusElement& a, const TorusElement& b) {
  if (a.seed() && b.seed() && a.seed() != b.seed()) throw SeedMismatch();
  TorusElement out(a.seed() ? a.seed() : b.seed());
  if (!out.seed()) return out;
  std::map<LatticeVector, QCoefficient> acc;
  for (const auto& [va, ca] : a.terms())
    for (const auto& [vb, cb] : b.terms())
      accumulate_product(acc, *out.seed(), va, ca, vb, cb);
  for (auto& [v, c] : acc) out.add_term(v, c);
  return out;
}

TorusElement multiply(const TorusElement& a, const TorusElement& b) {
#ifdef _OPENMP
  const size_t pairs = a.term_count() * b.term_count();
  if (pairs >= 4096) {
    if (a.seed() && b.seed() && a.seed() != b.seed()) throw SeedMismatch();
    TorusElement out(a.seed() ? a.seed() : b.seed());
    std::vector<const std::pair<const LatticeVector, QCoefficient>*> ta;
    ta.reserve(a.term_count());
    for (const auto& t : a.terms()) ta.push_back(&t);
    const int nthreads = omp_get_max_threads();
    std::vector<std::map<LatticeVector, QCoefficient>> partial(nthreads);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(ta.size()); ++i) {
      auto& acc = partial[omp_get_thread_num()];
      for (const auto& [vb, cb] : b.terms())
        accumulate_product(acc, *out.seed(), ta[i]->first, ta[i]->second, vb, cb);
    }
    for (auto& acc : partial)
      for (auto& [v, c] : acc) out.add_term(v, c);
    return out;
  }
#endif
  return multiply_serial(a, b);
}

TorusElement operator*(const TorusElement& a, const TorusElement& b) {
  return multiply(a, b);
}

QCoefficient q_binomial(int n, int m, const Rational& d) {
  if (m < 0 || m > n) throw Error("q_binomial: need 0 <= m <= n");
  auto q_int = [&](int k) {
    // [k]_{q^d} = q^{d(k-1)} + q^{d(k-3)} + ... + q^{-d(k-1)}
    QCoefficient out;
    for (int t = 0; t < k; ++t) out += QCoefficient::q_power(d * Rational(k - 1 - 2 * t));
    return out;
  };
  QCoefficient num(1), den(1);
  for (int t = 0; t < m; ++t) {
    num = num * q_int(n - t);
    den = den * q_int(t + 1);
  }
  return num.divide_exact(den);
}

TorusElement right_divide_binomial(const TorusElement& f, int k, const Rational& u_exp) {
  if (f.is_zero()) return f;
  const SeedPtr& seed = f.seed();
  // Grade by the e_k exponent; solve h from the bottom grade up.
  std::map<int, std::vector<std::pair<LatticeVector, QCoefficient>>> grades;
  for (const auto& [v, c] : f.terms()) grades[v[k]].push_back({v, c});
  const int jmin = grades.begin()->first;
  const int jmax = grades.rbegin()->first;

  TorusElement h(seed);
  const LatticeVector ek = lattice_unit(*seed, k);
  std::map<LatticeVector, QCoefficient> carry;  // (h_{j-1} * u X_k) at grade j
  for (int j = jmin; j <= jmax + 1; ++j) {
    std::map<LatticeVector, QCoefficient> hj;
    if (auto it = grades.find(j); it != grades.end())
      for (auto& [v, c] : it->second) hj[v] = c;
    for (auto& [v, c] : carry) {
      auto it = hj.find(v);
      if (it == hj.end()) hj[v] = -c;
      else {
        it->second -= c;
        if (it->second.is_zero()) hj.erase(it);
      }
    }
    if (j == jmax + 1) {
      if (!hj.empty()) throw NotDivisible("right_divide: nonzero remainder");
      break;
    }
    carry.clear();
    for (auto& [v, c] : hj) {
      if (c.is_zero()) continue;
      h.add_term(v, c);
      // (c X_v)(q^u X_k) = c q^{u - (v, e_k)} X_{v + e_k}
      LatticeVector vk = v;
      ++vk[k];
      carry[vk] = c.shifted(u_exp - skew_form(*seed, v, ek));
    }
  }
  return h;
}

std::string TorusFraction::str() const {
  std::string s = format_expr(numerator);
  for (const Rational& a : denominator_exponents)
    s += " (1+q^{" + a.str() + "} X_{" + std::to_string(k + 1) + "})^{-1}";
  return s;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  const SeedPtr& seed;
  const std::string& s;
  size_t p = 0;

  void skip() {
    while (p < s.size() && (std::isspace(static_cast<unsigned char>(s[p])) || s[p] == '*')) ++p;
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip();
    return p < s.size() && s[p] == c;
  }
  bool peek_digit() {
    skip();
    return p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]));
  }
  long long integer() {
    skip();
    bool neg = false;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) neg = (s[p++] == '-');
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
      throw ParseError("expected integer", p);
    long long v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])))
      v = v * 10 + (s[p++] - '0');
    return neg ? -v : v;
  }
  Rational rational() {
    long long n = integer();
    if (eat('/')) return Rational(n, integer());
    return Rational(n);
  }

  // '^' sint | '^{' rational '}'
  Rational exponent_after_caret() {
    if (eat('{')) {
      Rational r = rational();
      if (!eat('}')) throw ParseError("expected '}'", p);
      return r;
    }
    return rational();
  }

  QCoefficient coeff_atom() {
    skip();
    if (p >= s.size()) throw ParseError("expected coefficient", p);
    if (s[p] == '[') {
      if (s.compare(p, 3, "[2]") != 0) throw ParseError("expected [2]", p);
      p += 3;
      return QCoefficient::quantum_two(Rational(1, 2));
    }
    if (s[p] == 'q') {
      ++p;
      if (eat('^')) return QCoefficient::q_power(exponent_after_caret());
      return QCoefficient::q_power(Rational(1));
    }
    if (s[p] == '(') {
      ++p;
      QCoefficient total = signed_coeff();
      skip();
      while (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        const bool minus = s[p] == '-';
        ++p;
        QCoefficient c = product_coeff();
        total += minus ? -c : c;
        skip();
      }
      if (!eat(')')) throw ParseError("expected ')'", p);
      return total;
    }
    return QCoefficient(integer());
  }
  QCoefficient product_coeff() {
    QCoefficient c = coeff_atom();
    while (true) {
      skip();
      if (p < s.size() && (s[p] == 'q' || s[p] == '[' || s[p] == '(' ||
                           std::isdigit(static_cast<unsigned char>(s[p]))))
        c = c * coeff_atom();
      else
        return c;
    }
  }
  QCoefficient signed_coeff() {
    skip();
    if (p < s.size() && s[p] == '-') {
      ++p;
      return -product_coeff();
    }
    if (p < s.size() && s[p] == '+') ++p;
    return product_coeff();
  }

  // 'X_{' entry (',' entry)* '}' ('^{-1}')?
  TorusElement monomial() {
    if (!(eat('X') && eat('_') && eat('{'))) throw ParseError("expected X_{", p);
    LatticeVector v = lattice_zero(*seed);
    while (true) {
      const long long idx = integer();
      if (idx < 1 || idx > seed->size())
        throw ParseError("vertex index out of range: " + std::to_string(idx), p);
      long long e = 1;
      if (eat('^')) e = static_cast<long long>(exponent_after_caret().as_integer());
      v[idx - 1] += static_cast<int>(e);
      if (eat(',')) continue;
      if (eat('}')) break;
      throw ParseError("expected ',' or '}'", p);
    }
    size_t save = p;
    if (eat('^')) {
      if (eat('{') && eat('-') && peek_digit()) {
        const long long e = integer();
        if (e == 1 && eat('}')) {
          for (auto& x : v) x = -x;
          return TorusElement::monomial(seed, v);
        }
      }
      p = save;  // not an inversion suffix
    }
    return TorusElement::monomial(seed, v);
  }

  TorusElement term() {
    skip();
    QCoefficient c(1);
    bool has_coeff = false;
    while (p < s.size() && (s[p] == 'q' || s[p] == '[' || s[p] == '(' ||
                            std::isdigit(static_cast<unsigned char>(s[p])))) {
      c = c * coeff_atom();
      has_coeff = true;
      skip();
    }
    if (p < s.size() && s[p] == 'X') {
      TorusElement m = monomial();
      return m.scaled(c);
    }
    if (!has_coeff) throw ParseError("expected term", p);
    return TorusElement::monomial(seed, lattice_zero(*seed), c);
  }

  TorusElement element() {
    skip();
    bool minus = false;
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) minus = (s[p++] == '-');
    TorusElement total = term();
    if (minus) total = -total;
    while (true) {
      skip();
      if (p >= s.size()) break;
      if (s[p] != '+' && s[p] != '-') throw ParseError("expected '+' or '-'", p);
      minus = (s[p++] == '-');
      TorusElement t = term();
      if (minus) total -= t;
      else total += t;
    }
    return total;
  }
};

}  // namespace

TorusElement parse_expr(const SeedPtr& seed, const std::string& text) {
  Parser parser{seed, text};
  TorusElement out = parser.element();
  parser.skip();
  if (parser.p != text.size()) throw ParseError("trailing input", parser.p);
  return out;
}

std::string format_expr(const TorusElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : f.terms()) {
    // Render the coefficient so the grammar reads it back: a single q-power
    // prints inline with its sign, anything else is parenthesized.
    bool negated = false;
    std::string cs;
    if (c.terms().size() == 1) {
      const auto& [e, n] = *c.terms().begin();
      negated = n < 0;
      const long long mag = n < 0 ? -n : n;
      if (e.is_zero()) {
        cs = std::to_string(mag);
      } else {
        cs = (mag != 1 ? std::to_string(mag) + " " : "");
        cs += "q";
        if (e != Rational(1)) cs += "^{" + e.str() + "}";
      }
    } else {
      cs = c.str();
      if (cs != "[2]") cs = "(" + cs + ")";
    }
    if (!first) os << (negated ? " - " : " + ");
    else if (negated) os << "-";
    first = false;

    const bool is_unit = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    if (is_unit) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << " ";
    const bool all_minus_one = std::all_of(v.begin(), v.end(), [](int x) { return x == 0 || x == -1; });
    os << "X_{";
    bool first_entry = true;
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      os << (first_entry ? "" : ",") << i + 1;
      const int e = all_minus_one ? 1 : v[i];
      if (e != 1) {
        if (e > 1 && e <= 9) os << "^" << e;
        else os << "^{" << e << "}";
      }
      first_entry = false;
    }
    os << "}";
    if (all_minus_one) os << "^{-1}";
  }
  return os.str();
}

}  // namespace qcm
