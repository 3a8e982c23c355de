#include "wigner/threej.hpp"

#include <algorithm>

#include "wigner/errors.hpp"
#include "wigner/factorial.hpp"

namespace wigner {

namespace {

long ival(const HalfInt& h) { return h.to_long(); }

std::string triple_str(const HalfInt& a, const HalfInt& b, const HalfInt& c) {
  return "(" + a.str() + "," + b.str() + "," + c.str() + ")";
}

} // namespace

bool triangle_ok(const HalfInt& a, const HalfInt& b, const HalfInt& c) {
  if (a.is_negative() || b.is_negative() || c.is_negative()) return false;
  if (!(a + b + c).is_integer()) return false;
  return abs(a - b) <= c && c <= a + b;
}

void validate(const ThreeJArgs& args) {
  const HalfInt *js[3] = {&args.j1, &args.j2, &args.j3};
  const HalfInt *ms[3] = {&args.m1, &args.m2, &args.m3};
  for (int i = 0; i < 3; ++i) {
    if (js[i]->is_negative())
      throw DomainError("3j: j" + std::to_string(i + 1) + " = " +
                        js[i]->str() + " is negative");
    if (abs(*ms[i]) > *js[i])
      throw DomainError("3j: |m" + std::to_string(i + 1) + "| = " +
                        abs(*ms[i]).str() + " exceeds j" +
                        std::to_string(i + 1) + " = " + js[i]->str());
    if (!(*js[i] + *ms[i]).is_integer())
      throw DomainError("3j: j" + std::to_string(i + 1) + " + m" +
                        std::to_string(i + 1) + " = " +
                        (*js[i] + *ms[i]).str() + " is not an integer");
  }
  if (!(args.m1 + args.m2 + args.m3).is_zero())
    throw DomainError("3j: m1+m2+m3 = " +
                      (args.m1 + args.m2 + args.m3).str() + " != 0");
  if (!triangle_ok(args.j1, args.j2, args.j3))
    throw DomainError("3j: triangle violation for " +
                      triple_str(args.j1, args.j2, args.j3));
}

bool selection_rules_ok(const ThreeJArgs& args) {
  const HalfInt *js[3] = {&args.j1, &args.j2, &args.j3};
  const HalfInt *ms[3] = {&args.m1, &args.m2, &args.m3};
  for (int i = 0; i < 3; ++i) {
    if (js[i]->is_negative()) return false;
    if (abs(*ms[i]) > *js[i]) return false;
    if (!(*js[i] + *ms[i]).is_integer()) return false;
  }
  if (!(args.m1 + args.m2 + args.m3).is_zero()) return false;
  return triangle_ok(args.j1, args.j2, args.j3);
}

Rational delta_coeff(const HalfInt& a, const HalfInt& b, const HalfInt& c) {
  if (!triangle_ok(a, b, c))
    throw DomainError("triangle violation for " + triple_str(a, b, c));
  mpz_class num = factorial(a + b - c) * factorial(a - b + c) *
                  factorial(HalfInt(0) - a + b + c);
  return Rational(num, factorial(a + b + c + HalfInt(1)));
}

namespace {

struct ZSumBounds {
  long zmin, zmax;
};

ZSumBounds threej_bounds(const ThreeJArgs& t) {
  const auto& [a, b, c, al, be, ga] = t;
  long zmin = std::max({0L, ival(b - c - al), ival(a + be - c)});
  long zmax = std::min({ival(a + b - c), ival(b + be), ival(a - al)});
  return {zmin, zmax};
}

} // namespace

long threej_term_count(const ThreeJArgs& args) {
  validate(args);
  auto [zmin, zmax] = threej_bounds(args);
  return zmax - zmin + 1;
}

SignedRadical threej(const ThreeJArgs& args) {
  validate(args);
  const auto& [a, b, c, al, be, ga] = args;

  Rational pre = delta_coeff(a, b, c);
  pre *= Rational(factorial(a + al) * factorial(a - al) * factorial(b + be) *
                  factorial(b - be) * factorial(c + ga) * factorial(c - ga));

  auto [zmin, zmax] = threej_bounds(args);
  if (zmax < zmin)
    throw ContractError("empty z-range for valid 3j arguments");

  // fixed integer offsets of the six factorial arguments
  const long o_abc = ival(a + b - c);
  const long o_cba = ival(c - b + al);
  const long o_bb = ival(b + be);
  const long o_aa = ival(a - al);
  const long o_cab = ival(c - a - be);
  const bool base_odd = (a - b - ga).integer_is_odd();

  Rational sum;
  for (long z = zmin; z <= zmax; ++z) {
    mpz_class den = factorial(z) * factorial(o_abc - z) *
                    factorial(o_cba + z) * factorial(o_bb - z) *
                    factorial(o_aa - z) * factorial(o_cab + z);
    bool odd = ((z & 1L) != 0) != base_odd;
    sum += Rational(mpz_class(odd ? -1 : 1), den);
  }
  return SignedRadical::from_coeff_times_sqrt(sum, pre);
}

SignedRadical threej_lenient(const ThreeJArgs& args) {
  if (!selection_rules_ok(args)) return SignedRadical();
  return threej(args);
}

SignedRadical threej_delta_form(const HalfInt& b, const HalfInt& beta,
                                const HalfInt& delta, const HalfInt& c,
                                const HalfInt& gamma) {
  const HalfInt a = c - delta;
  const HalfInt alpha = HalfInt(0) - beta - gamma;
  validate(ThreeJArgs{b, a, c, beta, alpha, gamma});

  const HalfInt two_c = 2L * c;
  // z-independent radical: the plain rational factor, the pure-ratio
  // first Omega, and the numerators of the two square-denominator Omegas
  Rational prefix(factorial(b + beta) * factorial(b - beta) *
                      factorial(b - delta) * factorial(b + delta),
                  (two_c + b - delta + HalfInt(1)).twice() / 2);
  prefix *= Rational(factorial(two_c - delta - b),
                     factorial(two_c - delta + b));
  prefix *= Rational(factorial(c + gamma - delta + beta) *
                     factorial(c + gamma));
  prefix *= Rational(factorial(c - gamma - delta - beta) *
                     factorial(c - gamma));

  const long zmin =
      std::max({0L, ival(HalfInt(0) - beta - delta), ival(b - beta - c - gamma)});
  const long zmax = std::min(
      {ival(c - delta - gamma - beta), ival(b - delta), ival(b - beta)});
  if (zmax < zmin)
    throw ContractError("empty z-range for valid arguments");

  const long o_bd = ival(b - delta);
  const long o_bb = ival(b - beta);
  const long o_bd2 = ival(beta + delta);
  const long o_s2 = ival(c + gamma - b + beta); // square-root denominators
  const long o_s3 = ival(c - gamma - delta - beta);

  Rational sum;
  for (long z = zmin; z <= zmax; ++z) {
    mpz_class den = factorial(z) * factorial(o_bd - z) * factorial(o_bb - z) *
                    factorial(o_bd2 + z) * factorial(o_s2 + z) *
                    factorial(o_s3 - z);
    sum += Rational(mpz_class((z & 1L) ? -1 : 1), den);
  }
  sum *= Rational(phase(b - a - gamma));
  return SignedRadical::from_coeff_times_sqrt(sum, prefix);
}

} // namespace wigner
