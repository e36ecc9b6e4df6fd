#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcm/bigrational.hpp"
#include "qcm/qcoeff.hpp"
#include "qcm/seeds.hpp"

namespace qcm {

// Exponent vector over the seed's lattice, dense over the vertex set.
using LatticeVector = std::vector<int>;

LatticeVector lattice_zero(const ClusterSeed& seed);
LatticeVector lattice_unit(const ClusterSeed& seed, int v, int power = 1);

// (lambda, mu) = sum lambda_i mu_j w_ij.
Rational skew_form(const ClusterSeed& seed, const LatticeVector& a, const LatticeVector& b);

// Element of the quantum torus of a seed in the Weyl-ordered basis:
// sum over lattice vectors of c_lambda(q) X_lambda,
// with q^{(l,m)} X_l X_m = X_{l+m}.
class TorusElement {
public:
  TorusElement() = default;
  explicit TorusElement(SeedPtr seed) : seed_(std::move(seed)) {}

  static TorusElement unit(const SeedPtr& seed) {
    return monomial(seed, lattice_zero(*seed), QCoefficient(1));
  }
  static TorusElement monomial(const SeedPtr& seed, const LatticeVector& v,
                               QCoefficient c = QCoefficient(1));
  static TorusElement generator(const SeedPtr& seed, int vertex, int power = 1) {
    return monomial(seed, lattice_unit(*seed, vertex, power));
  }

  const SeedPtr& seed() const { return seed_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<LatticeVector, QCoefficient>& terms() const { return terms_; }

  void add_term(const LatticeVector& v, const QCoefficient& c);

  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& a, const TorusElement& b);
  TorusElement operator-() const;

  TorusElement scaled(const QCoefficient& c) const;

  // Conjugation by the basis monomial X_m: X_l -> q^{2(l,m)} X_l.
  TorusElement conjugated_by_monomial(const LatticeVector& m) const;

  // The star anti-involution: q -> q^{-1}, X_lambda fixed.
  TorusElement star() const;

  // q -> 1 evaluation on a positive assignment of the generators.
  BigRational eval_classical(const std::vector<BigRational>& values) const;

  // Substitutes vertex indices: lambda'_{perm[v]} = lambda_v.
  TorusElement relabeled(const std::vector<int>& perm, const SeedPtr& target) const;

  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  std::string str() const;

private:
  SeedPtr seed_;
  std::map<LatticeVector, QCoefficient> terms_;
};

// Reference product, single-threaded. `multiply` dispatches to an OpenMP
// path for large term counts and must agree with this exactly.
TorusElement multiply_serial(const TorusElement& a, const TorusElement& b);
TorusElement multiply(const TorusElement& a, const TorusElement& b);

// Gaussian binomial [n choose m]_{q^d}, palindromic in q <-> q^{-1}.
QCoefficient q_binomial(int n, int m, const Rational& d);

// Right division by (1 + u X_k) with u a single q-power; exact or throws
// NotDivisible.
TorusElement right_divide_binomial(const TorusElement& f, int k, const Rational& u_exp);

// Numerator together with right binomial factors (1 + q^{a_r} X_k)^{-1},
// all in the single variable k: exactly what one mutation step produces.
struct TorusFraction {
  TorusElement numerator;
  int k = -1;
  std::vector<Rational> denominator_exponents;  // a_r for (1 + q^{a_r} X_k)

  bool laurent() const { return denominator_exponents.empty(); }
  std::string str() const;
};

// Grammar (whitespace-insensitive):
//   element ::= term (('+'|'-') term)*
//   term    ::= coeff* monomial? | coeff
//   monomial::= 'X_{' entry (',' entry)* '}' ('^{-1}')?
//   entry   ::= index ('^' sint | '^{' sint '}')?
//   coeff   ::= int | 'q' ('^' sint | '^{' rational '}')? | '[2]' | '(' element-of-coeffs ')'
// Indices are 1-based vertex ids. Output style: X_{2^2,8,11,12}.
TorusElement parse_expr(const SeedPtr& seed, const std::string& text);
std::string format_expr(const TorusElement& f);

}  // namespace qcm
