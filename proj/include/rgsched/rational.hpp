#pragma once

#include <gmpxx.h>

#include <string>

#include "rgsched/errors.hpp"

namespace rgsched {

/// Arbitrary-precision rational number. Thin value wrapper around GMP's
/// mpq_class that keeps every instance canonical and adds exact parsing of
/// decimal and "num/den" strings.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}   // NOLINT: implicit by design
  Rat(long n) : v_(n) {}  // NOLINT
  Rat(long num, long den) {
    if (den == 0) fail(Err::InvalidParams, "rational with zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "3", "-7/2" or an exact decimal like "1.25" / "1e-3".
  static Rat parse(const std::string& text);

  /// Canonical text form: an integer or "num/den".
  std::string str() const;
  /// Fixed-point decimal with `digits` fractional digits, rounded to nearest
  /// (ties away from zero).
  std::string decimal(int digits) const;
  double to_double() const { return v_.get_d(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  const mpq_class& raw() const { return v_; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) fail(Err::InvalidParams, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace rgsched
