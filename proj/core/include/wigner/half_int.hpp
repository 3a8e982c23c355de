#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wigner {

/// Half-integer angular momentum, stored losslessly as 2j.
///
/// All angular momenta and projections in this library live here;
/// storing the doubled value makes parity checks (needed for phase
/// factors) plain evenness checks.
class HalfInt {
public:
  HalfInt() : twice_(0) {}
  /// From an integer j (not a doubled value).
  HalfInt(int j) : twice_(2 * mpz_class(j)) {}
  HalfInt(long j) : twice_(2 * mpz_class(j)) {}
  HalfInt(const mpz_class& j) : twice_(2 * j) {}

  /// Named constructor from a doubled value: half(3) == 3/2.
  static HalfInt from_twice(mpz_class t) { return HalfInt(std::move(t), 0); }
  /// Parses "2", "-3", "7/2", "-1/2", "1.5", "2.0". Rejects anything
  /// that is not an integer multiple of 1/2 ("1.4", "3/4", junk).
  static HalfInt parse(std::string_view text);
  /// From a float that must be an exact multiple of 1/2.
  static HalfInt from_double(double x);

  const mpz_class& twice() const { return twice_; }
  bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()) != 0; }
  bool is_negative() const { return twice_ < 0; }
  bool is_zero() const { return twice_ == 0; }

  /// Parity of an integer-valued HalfInt: true if odd. Throws
  /// ContractError when the value is not an integer.
  bool integer_is_odd() const;
  /// Integer value of an integer-valued HalfInt as long (throws
  /// ContractError if not integer or out of long range).
  long to_long() const;

  double to_double() const { return twice_.get_d() / 2.0; }
  /// "3", "-2", "7/2" style rendering (lossless).
  std::string str() const;

  HalfInt operator-() const { return from_twice(-twice_); }
  HalfInt& operator+=(const HalfInt& o) { twice_ += o.twice_; return *this; }
  HalfInt& operator-=(const HalfInt& o) { twice_ -= o.twice_; return *this; }

  friend HalfInt operator+(HalfInt a, const HalfInt& b) { return a += b; }
  friend HalfInt operator-(HalfInt a, const HalfInt& b) { return a -= b; }
  /// Scaling by an integer factor (lambda sweeps).
  friend HalfInt operator*(long k, const HalfInt& a) {
    return from_twice(k * a.twice_);
  }

  friend bool operator==(const HalfInt& a, const HalfInt& b) {
    return a.twice_ == b.twice_;
  }
  friend bool operator!=(const HalfInt& a, const HalfInt& b) {
    return !(a == b);
  }
  friend bool operator<(const HalfInt& a, const HalfInt& b) {
    return a.twice_ < b.twice_;
  }
  friend bool operator<=(const HalfInt& a, const HalfInt& b) {
    return a.twice_ <= b.twice_;
  }
  friend bool operator>(const HalfInt& a, const HalfInt& b) { return b < a; }
  friend bool operator>=(const HalfInt& a, const HalfInt& b) { return b <= a; }

  friend HalfInt abs(const HalfInt& a) {
    return from_twice(::abs(a.twice_));
  }

private:
  HalfInt(mpz_class t, int) : twice_(std::move(t)) {}
  mpz_class twice_;
};

std::ostream& operator<<(std::ostream& os, const HalfInt& h);

/// (-1)^e for an integer-valued HalfInt exponent; ContractError otherwise.
int phase(const HalfInt& exponent);

} // namespace wigner
