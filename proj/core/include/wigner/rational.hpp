#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace wigner {

/// Arbitrary-precision reduced fraction. Backed by GMP's mpq, which keeps
/// the canonical-form invariant (gcd(num,den) = 1, den > 0) after every
/// operation. Arithmetic is exact; nothing here rounds.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den);

  const mpz_class num() const { return q_.get_num(); }
  const mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return q_ == 0; }
  Rational squared() const { return Rational(q_ * q_); }
  Rational reciprocal() const;

  /// "num/den" (or just "num" when den == 1).
  std::string str() const;
  /// Nearest double; exact scaling via mpq_get_d.
  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.q_ < b.q_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.q_ <= b.q_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace wigner
