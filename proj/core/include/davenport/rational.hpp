#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace davenport {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Thin invariant-enforcing wrapper around GMP's mpq_class:
/// GMP keeps arithmetic results canonical once the operands are, so only
/// construction needs an explicit canonicalization step.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long numerator, long denominator = 1) : q_(numerator, denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(mpz_class numerator, mpz_class denominator) : q_(std::move(numerator), std::move(denominator)) {
    if (q_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  double to_double() const { return q_.get_d(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const { return Rational::raw(-q_); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

 private:
  // Already-canonical value; used by arithmetic results.
  static Rational raw(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_;
};

}  // namespace davenport
