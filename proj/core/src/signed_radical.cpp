#include "wigner/signed_radical.hpp"

#include <atomic>
#include <cmath>

#include "wigner/errors.hpp"

namespace wigner {

SignedRadical::SignedRadical(int sign, Rational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
  if (sign_ < -1 || sign_ > 1)
    throw ContractError("radical sign must be -1, 0 or +1");
  if (radicand_.sign() < 0)
    throw ContractError("negative radicand " + radicand_.str());
  if ((sign_ == 0) != radicand_.is_zero())
    throw ContractError("radical sign/zero mismatch");
}

SignedRadical SignedRadical::from_coeff_times_sqrt(const Rational& coeff,
                                                   const Rational& radicand) {
  if (radicand.sign() < 0)
    throw ContractError("negative radicand " + radicand.str());
  if (coeff.is_zero() || radicand.is_zero()) return SignedRadical();
  return SignedRadical(coeff.sign(), coeff.squared() * radicand);
}

SignedRadical SignedRadical::from_rational(const Rational& r) {
  return SignedRadical(r.sign(), r.squared());
}

SignedRadical SignedRadical::times(const Rational& r) const {
  if (sign_ == 0 || r.is_zero()) return SignedRadical();
  return SignedRadical(sign_ * r.sign(), radicand_ * r.squared());
}

SignedRadical SignedRadical::times_sqrt(const Rational& q) const {
  if (q.sign() < 0) throw ContractError("sqrt of negative rational");
  if (sign_ == 0 || q.is_zero()) return SignedRadical();
  return SignedRadical(sign_, radicand_ * q);
}

double SignedRadical::to_double() const { return radical_to_float(*this); }

double SignedRadical::to_double(unsigned guard_bits) const {
  return radical_to_float(*this, guard_bits);
}

namespace {

std::atomic<unsigned>& guard_bits_setting() {
  static std::atomic<unsigned> bits{64};
  return bits;
}

} // namespace

unsigned default_guard_bits() { return guard_bits_setting().load(); }

void set_default_guard_bits(unsigned bits) {
  if (bits < 32) throw ValidationError("guard_bits must be >= 32");
  guard_bits_setting().store(bits);
}

double radical_to_float(const SignedRadical& x, unsigned guard_bits) {
  if (guard_bits < 32) throw ValidationError("guard_bits must be >= 32");
  if (x.sign() == 0) return 0.0;

  const mpz_class num = x.radicand().num();
  const mpz_class den = x.radicand().den();

  // Effective guard: enough bits that the integer sqrt carries the full
  // 53-bit significand regardless of the radicand's magnitude. sqrt(x) has
  // ~G + e2/2 leading bits when x ~ 2^e2.
  long e2 = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
            static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  long g = std::max<long>(guard_bits, 64);
  if (e2 < 0) g += (-e2 + 1) / 2 + 1;

  mpz_class scaled = num << static_cast<unsigned>(2 * g);
  scaled /= den;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t()); // floor(2^g sqrt(num/den))

  // Round root * 2^-g to the nearest double.
  std::size_t bits = mpz_sizeinbase(root.get_mpz_t(), 2);
  double mant;
  long exp2;
  if (bits <= 53) {
    mant = root.get_d(); // exact
    exp2 = -g;
  } else {
    long shift = static_cast<long>(bits) - 54;
    mpz_class top = root >> static_cast<unsigned>(shift);
    // keep one rounding bit; round half away from zero (ties are
    // impossible for irrational roots, and exact roots fit earlier paths
    // or are unaffected)
    mpz_class rounded = (top >> 1) + (top & 1);
    mant = rounded.get_d(); // exact: <= 2^53
    exp2 = shift + 1 - g;
  }
  return x.sign() * std::ldexp(mant, static_cast<int>(exp2));
}

double radical_to_float(const SignedRadical& x) {
  return radical_to_float(x, default_guard_bits());
}

double sqrt_to_float(const Rational& q, unsigned guard_bits) {
  if (q.sign() < 0) throw DomainError("sqrt of negative rational " + q.str());
  if (q.is_zero()) return 0.0;
  return radical_to_float(SignedRadical(1, q), guard_bits);
}

double sqrt_to_float(const Rational& q) {
  return sqrt_to_float(q, default_guard_bits());
}

} // namespace wigner
