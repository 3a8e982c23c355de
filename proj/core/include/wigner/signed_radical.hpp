#pragma once

#include "wigner/rational.hpp"

namespace wigner {

/// Value of the form sign * sqrt(radicand) with radicand a nonnegative
/// rational. Every 3j/6j symbol is exactly one of these, so exact
/// cross-form equality tests reduce to comparing (sign, radicand) pairs.
class SignedRadical {
public:
  /// Zero.
  SignedRadical() : sign_(0), radicand_(0) {}
  /// sign in {-1,0,+1}; enforces sign == 0 <=> radicand == 0. Throws
  /// ContractError on a negative radicand or inconsistent zero.
  SignedRadical(int sign, Rational radicand);

  /// coeff * sqrt(radicand) folded into a single radical:
  /// (sgn coeff, coeff^2 * radicand).
  static SignedRadical from_coeff_times_sqrt(const Rational& coeff,
                                             const Rational& radicand);
  /// Exact rational r as a radical: (sgn r, r^2).
  static SignedRadical from_rational(const Rational& r);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// Squaring returns exactly the radicand (the defining identity).
  Rational squared() const { return radicand_; }

  /// Multiplication by a rational: (sign*sgn(r), radicand*r^2).
  SignedRadical times(const Rational& r) const;
  /// Multiplication by sqrt(q) for q >= 0: radicand *= q.
  SignedRadical times_sqrt(const Rational& q) const;
  SignedRadical negated() const { return SignedRadical(-sign_, radicand_, 0); }

  double to_double() const;
  double to_double(unsigned guard_bits) const;

  friend bool operator==(const SignedRadical& a, const SignedRadical& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }
  friend bool operator!=(const SignedRadical& a, const SignedRadical& b) {
    return !(a == b);
  }

private:
  SignedRadical(int s, Rational r, int) : sign_(s), radicand_(std::move(r)) {}
  int sign_;
  Rational radicand_;
};

/// Default guard-bit count for radical -> float conversion. Process-wide;
/// the CLI front end sets it from WIGNER_GUARD_BITS.
unsigned default_guard_bits();
void set_default_guard_bits(unsigned bits);

/// sign * sqrt(radicand) rounded to double, correct to ~1 ulp. Computed by
/// an integer square root carrying `guard_bits` extra bits (minimum 32),
/// auto-extended for tiny radicands so precision is magnitude-independent.
double radical_to_float(const SignedRadical& x, unsigned guard_bits);
double radical_to_float(const SignedRadical& x);

/// sqrt of a nonnegative rational through the same integer-sqrt path.
double sqrt_to_float(const Rational& q, unsigned guard_bits);
double sqrt_to_float(const Rational& q);

} // namespace wigner
