#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace magnus {

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// there is no floating-point mode anywhere in this library.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long long n) { v_ = from_ll(n); }
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  /// Parses "p", "-p" or "p/q". Rejects q = 0 and garbage.
  static Rational parse(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Numerator/denominator as long long; throws if out of range.
  long long num_ll() const;
  long long den_ll() const;
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
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

  /// Integer power; negative exponents invert (error on zero base).
  Rational pow(long long e) const;

  Rational inv() const;
  Rational abs() const { return v_ < 0 ? -*this : *this; }

  /// Canonical rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const;

private:
  static mpq_class from_ll(long long n);
  mpq_class v_;
};

Rational factorial(unsigned n);

} // namespace magnus
