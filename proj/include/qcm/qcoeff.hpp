#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcm/rational.hpp"

namespace qcm {

// Integer Laurent polynomial in q with rational exponents. Exponents are
// stored as integer multiples of 1/24, which covers every multiplier and
// half-weight in scope (denominators 2, 3, 4, 6, 8, 12). Canonical: flat
// vector sorted by exponent, no zero coefficients.
class QCoefficient {
public:
  static constexpr long long kUnit = 24;  // exponent grid: 1/24

  QCoefficient() = default;
  explicit QCoefficient(long long c) {
    if (c != 0) terms_.push_back({0, c});
  }

  static QCoefficient q_power(const Rational& e, long long c = 1) {
    QCoefficient out;
    if (c != 0) out.terms_.push_back({to_units(e), c});
    return out;
  }
  // [2]_{q^d} = q^d + q^{-d}
  static QCoefficient quantum_two(const Rational& d) {
    QCoefficient out;
    const long long u = to_units(d);
    out.terms_.push_back({u < 0 ? u : -u, 1});
    out.terms_.push_back({u < 0 ? -u : u, 1});
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }
  size_t term_count() const { return terms_.size(); }

  // (exponent, integer coefficient) pairs in exponent order.
  std::map<Rational, long long> terms() const;

  QCoefficient& operator+=(const QCoefficient& o);
  QCoefficient& operator-=(const QCoefficient& o);
  friend QCoefficient operator+(QCoefficient a, const QCoefficient& b) { return a += b; }
  friend QCoefficient operator-(QCoefficient a, const QCoefficient& b) { return a -= b; }
  friend QCoefficient operator*(const QCoefficient& a, const QCoefficient& b);
  QCoefficient operator-() const;

  // a * b * q^shift in one convolution pass.
  static QCoefficient mul_shifted(const QCoefficient& a, const QCoefficient& b,
                                  const Rational& shift);

  // Multiplication by a single power of q.
  QCoefficient shifted(const Rational& e) const;

  // q -> q^{-1}
  QCoefficient bar() const;
  bool palindromic() const { return *this == bar(); }

  // Exact division; throws NotDivisible if the quotient is not Laurent.
  QCoefficient divide_exact(const QCoefficient& divisor) const;

  long long eval_at_one() const;

  friend bool operator==(const QCoefficient& a, const QCoefficient& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QCoefficient& a, const QCoefficient& b) { return !(a == b); }
  friend bool operator<(const QCoefficient& a, const QCoefficient& b) {
    return a.terms_ < b.terms_;
  }

  // "1", "-1", "q^{1/2}", "[2]", "q+q^{-1}+2", ... matching the parser.
  std::string str() const;

private:
  static long long to_units(const Rational& e);
  static Rational from_units(long long u) { return Rational(u, kUnit); }

  // Sorted by exponent; no zeros.
  std::vector<std::pair<long long, long long>> terms_;
};

}  // namespace qcm
