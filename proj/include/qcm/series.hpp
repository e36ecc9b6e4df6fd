#pragma once

#include <climits>
#include <vector>

#include "qcm/qtorus.hpp"

namespace qcm {

// Localization of a quantum torus at elements with a unique phi-minimal
// unit term, computed as truncated graded series. phi is a vertex-weight
// functional; terms above `prec` are unknown, terms above `cap` discarded.
// A zero series with prec exceeding the a-priori degree of a cleared
// numerator certifies an exact identity.
class GradedSeries {
public:
  static constexpr long long kExact = LLONG_MAX / 4;

  GradedSeries() = default;
  GradedSeries(const TorusElement& f, std::vector<long long> weights, long long cap);

  const SeedPtr& seed() const { return seed_; }
  long long prec() const { return prec_; }
  long long cap() const { return cap_; }
  bool zero_to_prec() const { return terms_.empty(); }

  long long phi(const LatticeVector& v) const;
  long long min_phi() const;  // 0 for the zero series

  friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  GradedSeries operator-() const;
  GradedSeries scaled(const QCoefficient& c) const;

  // Inverse via the geometric series at the unique phi-minimal term, which
  // must have a single invertible q-power coefficient.
  GradedSeries inverse() const;

  GradedSeries pow(int e) const;  // e may be negative

  // Clamps the claimed precision (never raises it).
  GradedSeries with_prec(long long p) const;

  // Equality up to min(prec, o.prec).
  bool equal_to_prec(const GradedSeries& o, long long required_prec) const;

  const std::map<LatticeVector, QCoefficient>& terms() const { return terms_; }
  std::string str() const;

private:
  void add_term(const LatticeVector& v, const QCoefficient& c);
  void truncate();

  SeedPtr seed_;
  std::vector<long long> weights_;
  long long cap_ = 0;
  long long prec_ = kExact;
  std::map<LatticeVector, QCoefficient> terms_;
};

}  // namespace qcm
