#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace atk {

/// Exact rational scalar.
///
/// Invariants: always stored in lowest terms with a positive denominator.
/// Every operation is exact; equality is decidable. There is no floating
/// point anywhere in this library.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);

  /// Parses "p", "p/q" or "-p/q" (arbitrary precision). Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;  // kept canonical at all times
};

}  // namespace atk
