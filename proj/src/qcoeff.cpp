#include "qcm/qcoeff.hpp"

#include <algorithm>
#include <sstream>

#include "qcm/errors.hpp"

namespace qcm {

namespace {

// Scratch buffers; exponent ranges are tiny.
thread_local std::vector<long long> conv_scratch;
thread_local std::vector<std::pair<long long, long long>> merge_scratch;

}  // namespace

long long QCoefficient::to_units(const Rational& e) {
  if (kUnit % e.den() != 0)
    throw Error("q exponent " + e.str() + " is off the 1/24 grid");
  return e.num() * (kUnit / e.den());
}

std::map<Rational, long long> QCoefficient::terms() const {
  std::map<Rational, long long> out;
  for (const auto& [u, c] : terms_) out.emplace(from_units(u), c);
  return out;
}

QCoefficient& QCoefficient::operator+=(const QCoefficient& o) {
  if (o.terms_.empty()) return *this;
  auto& buf = merge_scratch;
  buf.clear();
  buf.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j >= o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      buf.push_back(terms_[i++]);
    } else if (i >= terms_.size() || o.terms_[j].first < terms_[i].first) {
      buf.push_back(o.terms_[j++]);
    } else {
      const long long c = terms_[i].second + o.terms_[j].second;
      if (c != 0) buf.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  terms_.assign(buf.begin(), buf.end());
  return *this;
}

QCoefficient& QCoefficient::operator-=(const QCoefficient& o) { return *this += -o; }

QCoefficient operator*(const QCoefficient& a, const QCoefficient& b) {
  return QCoefficient::mul_shifted(a, b, Rational(0));
}

QCoefficient QCoefficient::mul_shifted(const QCoefficient& a, const QCoefficient& b,
                                       const Rational& shift) {
  QCoefficient out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const long long sh = to_units(shift);
  if (a.terms_.size() == 1) {
    out.terms_.reserve(b.terms_.size());
    for (const auto& [e, c] : b.terms_)
      out.terms_.push_back({e + a.terms_[0].first + sh, c * a.terms_[0].second});
    return out;
  }
  const long long lo = a.terms_.front().first + b.terms_.front().first + sh;
  const long long hi = a.terms_.back().first + b.terms_.back().first + sh;
  if (hi - lo > 1 << 20) throw Error("q coefficient exponent range too large");
  auto& dense = conv_scratch;
  dense.assign(static_cast<size_t>(hi - lo + 1), 0);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      dense[static_cast<size_t>(ea + eb + sh - lo)] += ca * cb;
  for (size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.terms_.push_back({lo + static_cast<long long>(i), dense[i]});
  return out;
}

QCoefficient QCoefficient::operator-() const {
  QCoefficient out;
  out.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.terms_.push_back({e, -c});
  return out;
}

QCoefficient QCoefficient::shifted(const Rational& e) const {
  const long long u = to_units(e);
  QCoefficient out;
  out.terms_.reserve(terms_.size());
  for (const auto& [e0, c] : terms_) out.terms_.push_back({e0 + u, c});
  return out;
}

QCoefficient QCoefficient::bar() const {
  QCoefficient out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    out.terms_.push_back({-it->first, it->second});
  return out;
}

QCoefficient QCoefficient::divide_exact(const QCoefficient& divisor) const {
  if (divisor.is_zero()) throw NotDivisible("division by zero coefficient");
  QCoefficient rem = *this, quot;
  const auto lead = divisor.terms_.back();
  while (!rem.is_zero()) {
    const auto top = rem.terms_.back();
    if (top.second % lead.second != 0)
      throw NotDivisible("coefficient quotient not integral");
    QCoefficient piece;
    piece.terms_.push_back({top.first - lead.first, top.second / lead.second});
    quot += piece;
    rem -= piece * divisor;
    if (!rem.is_zero() && rem.terms_.back().first >= top.first)
      throw NotDivisible("coefficient division does not terminate");
  }
  return quot;
}

long long QCoefficient::eval_at_one() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string QCoefficient::str() const {
  if (terms_.empty()) return "0";
  // [2] denotes q^{1/2} + q^{-1/2}.
  const long long half = kUnit / 2;
  if (terms_.size() == 2 && terms_[0].first == -half && terms_[1].first == half &&
      terms_[0].second == 1 && terms_[1].second == 1)
    return "[2]";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [u, c] = *it;
    const Rational e = from_units(u);
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    const long long ac = c > 0 ? c : -c;
    if (u == 0) {
      os << ac;
    } else {
      if (ac != 1) os << ac << " ";
      os << "q";
      if (e != Rational(1)) os << "^{" << e.str() << "}";
    }
    first = false;
  }
  return os.str();
}

}  // namespace qcm
