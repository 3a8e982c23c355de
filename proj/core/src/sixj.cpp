#include "wigner/sixj.hpp"

#include <algorithm>

#include "wigner/errors.hpp"
#include "wigner/factorial.hpp"

namespace wigner {

namespace {

long ival(const HalfInt& h) { return h.to_long(); }

} // namespace

TriangleCheck check_triads(const SixJArgs& args) {
  const auto& [a, b, c, d, e, f] = args;
  struct Triad {
    const char* name;
    const HalfInt *x, *y, *z;
  };
  const Triad triads[4] = {
      {"abc", &a, &b, &c},
      {"cde", &c, &d, &e},
      {"aef", &a, &e, &f},
      {"bdf", &b, &d, &f},
  };
  for (const auto& t : triads) {
    if (!triangle_ok(*t.x, *t.y, *t.z))
      return TriangleCheck{false, std::string(t.name)};
  }
  return TriangleCheck{};
}

void validate(const SixJArgs& args) {
  if (auto check = check_triads(args); !check.ok)
    throw DomainError("6j: triad {" + *check.failing_triple +
                      "} violates the triangle rule in {" + args.a.str() +
                      " " + args.b.str() + " " + args.c.str() + "; " +
                      args.d.str() + " " + args.e.str() + " " + args.f.str() +
                      "}");
}

SignedRadical sixj(const SixJArgs& args) {
  validate(args);
  const auto& [a, b, c, d, e, f] = args;

  Rational pre = delta_coeff(a, b, c) * delta_coeff(c, d, e) *
                 delta_coeff(a, e, f) * delta_coeff(b, d, f);

  const long zmin =
      std::max({ival(a + b + c), ival(a + e + f), ival(c + d + e),
                ival(b + d + f)});
  const long zmax =
      std::min({ival(b + c + e + f), ival(a + b + d + e), ival(a + c + f + d)});
  if (zmax < zmin)
    throw ContractError("empty z-range for valid 6j arguments");

  const long s_abc = ival(a + b + c);
  const long s_aef = ival(a + e + f);
  const long s_cde = ival(c + d + e);
  const long s_bdf = ival(b + d + f);
  const long u_bcef = ival(b + c + e + f);
  const long u_abde = ival(a + b + d + e);
  const long u_acfd = ival(a + c + f + d);

  Rational sum;
  for (long z = zmin; z <= zmax; ++z) {
    mpz_class den = factorial(z - s_abc) * factorial(z - s_aef) *
                    factorial(u_bcef - z) * factorial(z - s_cde) *
                    factorial(z - s_bdf) * factorial(u_abde - z) *
                    factorial(u_acfd - z);
    mpz_class num = factorial(z + 1);
    if (z & 1L) num = -num;
    sum += Rational(num, den);
  }
  return SignedRadical::from_coeff_times_sqrt(sum, pre);
}

SignedRadical sixj_phi_form(const HalfInt& a, const HalfInt& b,
                            const HalfInt& c, const HalfInt& f,
                            const HalfInt& m, const HalfInt& n) {
  const SixJArgs args{c, b, a, f, a + n, b + m};
  validate(args);

  const HalfInt zero(0);
  // t-independent radical: the projection factorials, the two pure-ratio
  // factors, the numerators of the square-denominator factors, and the
  // denominator of the squared-numerator factor
  Rational prefix(factorial(f + m) * factorial(f - m) * factorial(f + n) *
                  factorial(f - n));
  prefix *= Rational(factorial(2L * a + n - f), factorial(2L * a + n + f));
  prefix *= Rational(factorial(2L * b + m - f), factorial(2L * b + m + f));
  prefix *= Rational(factorial(a + b - c) * factorial(a + b - c + m + n));
  prefix *= Rational(factorial(a - b + c) * factorial(a - b + c + n - m));
  prefix *= Rational(factorial(zero - a + b + c) *
                     factorial(zero - a + b + c + m - n));
  prefix /= Rational(factorial(a + b + c + HalfInt(1)) *
                     factorial(a + b + c + m + n + HalfInt(1)));

  const long tmin = std::max({0L, ival(zero - m - n),
                              ival(f - n - (a - b + c)),
                              ival(f - m - (zero - a + b + c))});
  const long tmax = std::min({ival(f - m), ival(f - n), ival(a + b - c)});
  if (tmax < tmin)
    throw ContractError("empty t-range for valid arguments");

  const long o_fm = ival(f - m);
  const long o_fn = ival(f - n);
  const long o_mn = ival(m + n);
  const long o_abc = ival(a + b - c);
  const long o_4 = ival(a - b + c + n - f);
  const long o_5 = ival(zero - a + b + c + m - f);
  const long o_6 = ival(a + b + c + m + n + HalfInt(1));

  Rational sum;
  for (long t = tmin; t <= tmax; ++t) {
    mpz_class den = factorial(t) * factorial(o_fm - t) * factorial(o_fn - t) *
                    factorial(o_mn + t) * factorial(o_abc - t) *
                    factorial(o_4 + t) * factorial(o_5 + t);
    mpz_class num = factorial(o_6 + t);
    if (t & 1L) num = -num;
    sum += Rational(num, den);
  }
  sum *= Rational(phase(a + b + c + m + n));

  // the series evaluates sqrt(omega_a omega_b) * {6j}; divide the
  // normalizers back out to return the symbol itself
  const HalfInt omega_a = 2L * a + n + f + HalfInt(1);
  const HalfInt omega_b = 2L * b + m + f + HalfInt(1);
  Rational norm(omega_a.twice() * omega_b.twice(), mpz_class(4));
  return SignedRadical::from_coeff_times_sqrt(sum, prefix / norm);
}

} // namespace wigner
