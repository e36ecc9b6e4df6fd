#include "qcm/series.hpp"

#include <algorithm>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {

GradedSeries::GradedSeries(const TorusElement& f, std::vector<long long> weights,
                           long long cap)
    : seed_(f.seed()), weights_(std::move(weights)), cap_(cap), prec_(kExact) {
  for (const auto& [v, c] : f.terms()) add_term(v, c);
  truncate();
}

long long GradedSeries::phi(const LatticeVector& v) const {
  long long s = 0;
  for (size_t i = 0; i < v.size(); ++i) s += weights_[i] * v[i];
  return s;
}

long long GradedSeries::min_phi() const {
  long long m = 0;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    const long long p = phi(v);
    if (first || p < m) m = p;
    first = false;
  }
  return m;
}

void GradedSeries::add_term(const LatticeVector& v, const QCoefficient& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(v);
  if (it == terms_.end()) {
    terms_[v] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedSeries::truncate() {
  if (prec_ > cap_) {
    // Keeping kExact is only sound if nothing above cap exists.
    long long mx = LLONG_MIN;
    for (const auto& [v, c] : terms_) mx = std::max(mx, phi(v));
    if (prec_ == kExact && mx <= cap_) return;
    prec_ = cap_;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (phi(it->first) > prec_) it = terms_.erase(it);
    else ++it;
  }
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  if (a.seed_ && b.seed_ && a.seed_ != b.seed_) throw SeedMismatch();
  GradedSeries out = a;
  if (!out.seed_) return b;
  out.prec_ = std::min(a.prec_, b.prec_);
  for (const auto& [v, c] : b.terms_) out.add_term(v, c);
  out.truncate();
  return out;
}

GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
  return a + (-b);
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries out = *this;
  for (auto& [v, c] : out.terms_) c = -c;
  return out;
}

GradedSeries GradedSeries::scaled(const QCoefficient& c) const {
  GradedSeries out = *this;
  out.terms_.clear();
  for (const auto& [v, c0] : terms_) out.add_term(v, c0 * c);
  return out;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  if (a.seed_ && b.seed_ && a.seed_ != b.seed_) throw SeedMismatch();
  GradedSeries out;
  out.seed_ = a.seed_ ? a.seed_ : b.seed_;
  out.weights_ = a.seed_ ? a.weights_ : b.weights_;
  out.cap_ = std::max(a.cap_, b.cap_);
  if (a.prec_ == GradedSeries::kExact && b.prec_ == GradedSeries::kExact)
    out.prec_ = GradedSeries::kExact;
  else
    out.prec_ = std::min(a.prec_ + b.min_phi(), b.prec_ + a.min_phi());
  for (const auto& [va, ca] : a.terms_)
    for (const auto& [vb, cb] : b.terms_) {
      LatticeVector v = va;
      for (size_t i = 0; i < v.size(); ++i) v[i] += vb[i];
      out.add_term(v, QCoefficient::mul_shifted(ca, cb, -skew_form(*out.seed_, va, vb)));
    }
  out.truncate();
  return out;
}

GradedSeries GradedSeries::inverse() const {
  if (terms_.empty()) throw Error("GradedSeries: inverse of zero");
  // Locate the unique phi-minimal term c X_m.
  const LatticeVector* m = nullptr;
  long long pmin = 0;
  for (const auto& [v, c] : terms_) {
    const long long p = phi(v);
    if (!m || p < pmin) {
      m = &v;
      pmin = p;
    } else if (p == pmin) {
      throw Error("GradedSeries: minimal term not unique; refine the grading");
    }
  }
  const QCoefficient& cm = terms_.at(*m);
  if (cm.terms().size() != 1 || std::abs(cm.terms().begin()->second) != 1)
    throw Error("GradedSeries: minimal coefficient not a unit");
  const Rational ce = cm.terms().begin()->first;
  const long long cs = cm.terms().begin()->second;

  // A = c X_m (1 + h);  h = (c X_m)^{-1} (A - c X_m) has phi >= 1.
  GradedSeries inv_cm = *this;
  inv_cm.terms_.clear();
  LatticeVector mm = *m;
  for (auto& x : mm) x = -x;
  inv_cm.add_term(mm, QCoefficient::q_power(-ce, cs));  // (c X_m)^{-1}
  inv_cm.prec_ = kExact;
  inv_cm.truncate();

  GradedSeries rest = *this;
  rest.terms_.erase(*m);
  GradedSeries h = inv_cm * rest;

  GradedSeries sum = *this, power = *this;
  sum.terms_.clear();
  power.terms_.clear();
  sum.add_term(LatticeVector(seed_->size(), 0), QCoefficient(1));
  power.add_term(LatticeVector(seed_->size(), 0), QCoefficient(1));
  sum.prec_ = power.prec_ = h.prec_;
  // Each factor of h raises min-phi by at least 1, so cap_+1 rounds suffice.
  for (long long r = 1; r <= cap_ + 1 && !h.terms_.empty(); ++r) {
    power = power * (-h);
    if (power.terms_.empty()) break;
    sum = sum + power;
  }
  GradedSeries out = sum * inv_cm;
  if (prec_ != kExact) out.prec_ = std::min(out.prec_, prec_ - 2 * pmin);
  out.truncate();
  return out;
}

GradedSeries GradedSeries::pow(int e) const {
  GradedSeries base = e >= 0 ? *this : inverse();
  int n = e >= 0 ? e : -e;
  GradedSeries out = *this;
  out.terms_.clear();
  out.prec_ = kExact;
  out.add_term(LatticeVector(seed_->size(), 0), QCoefficient(1));
  for (int t = 0; t < n; ++t) out = out * base;
  return out;
}

GradedSeries GradedSeries::with_prec(long long p) const {
  GradedSeries out = *this;
  out.prec_ = std::min(out.prec_, p);
  out.truncate();
  return out;
}

bool GradedSeries::equal_to_prec(const GradedSeries& o, long long required) const {
  const long long p = std::min(prec_, o.prec_);
  if (p < required) throw Error("GradedSeries: insufficient precision for the claim");
  GradedSeries d = *this - o;
  for (const auto& [v, c] : d.terms_)
    if (d.phi(v) <= p) return false;
  return true;
}

std::string GradedSeries::str() const {
  TorusElement f(seed_);
  for (const auto& [v, c] : terms_) f.add_term(v, c);
  std::ostringstream os;
  os << format_expr(f) << " + O(phi>" << (prec_ == kExact ? cap_ : prec_) << ")";
  return os.str();
}

}  // namespace qcm
