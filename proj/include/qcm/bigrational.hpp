#pragma once

#include <gmpxx.h>

#include <string>

#include "qcm/rational.hpp"

namespace qcm {

// Arbitrary-precision rational for the classical (q = 1) evaluations, whose
// values compound far past 64 bits along long mutation sequences.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long long n) : v_(static_cast<long>(n)) {}
  BigRational(long long n, long long d) : v_(static_cast<long>(n), static_cast<long>(d)) {
    v_.canonicalize();
  }
  explicit BigRational(const Rational& r)
      : v_(static_cast<long>(r.num()), static_cast<long>(r.den())) {
    v_.canonicalize();
  }

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(a.v_ + b.v_);
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(a.v_ - b.v_);
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(a.v_ * b.v_);
  }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    return BigRational(a.v_ / b.v_);
  }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) { v_ /= o.v_; return *this; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }

  int sign() const { return sgn(v_); }
  std::string str() const { return v_.get_str(); }

private:
  explicit BigRational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace qcm
