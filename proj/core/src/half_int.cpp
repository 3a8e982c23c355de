#include "wigner/half_int.hpp"

#include <cmath>
#include <ostream>

#include "wigner/errors.hpp"

namespace wigner {

namespace {

bool parse_mpz(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  // mpz accepts leading '+'/'-' and digits; reject anything else ourselves
  // because mpz_set_str tolerates whitespace.
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  out = mpz_class(std::string(s), 10);
  return true;
}

} // namespace

HalfInt HalfInt::parse(std::string_view text) {
  mpz_class n;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    // "p/2" (or "p/1"); any other denominator is not a half-integer.
    mpz_class den;
    if (!parse_mpz(text.substr(0, slash), n) ||
        !parse_mpz(text.substr(slash + 1), den))
      throw ValidationError("not a half-integer: '" + std::string(text) + "'");
    if (den == 2) return from_twice(n);
    if (den == 1) return from_twice(2 * n);
    throw ValidationError("denominator must be 1 or 2 in '" +
                          std::string(text) + "'");
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    // decimals: only ".0" and ".5" tails are exact multiples of 1/2
    std::string_view head = text.substr(0, dot);
    std::string_view tail = text.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head == "+" || head.empty()) head = neg ? "-0" : "0";
    if (!parse_mpz(head, n))
      throw ValidationError("not a half-integer: '" + std::string(text) + "'");
    mpz_class twice = 2 * n;
    if (tail == "5") {
      twice += neg ? -1 : 1;
    } else {
      // allow "2.0", "2.00", ...
      for (char ch : tail)
        if (ch != '0')
          throw ValidationError("'" + std::string(text) +
                                "' is not a multiple of 1/2");
      if (tail.empty())
        throw ValidationError("not a half-integer: '" + std::string(text) +
                              "'");
    }
    return from_twice(twice);
  }
  if (!parse_mpz(text, n))
    throw ValidationError("not a half-integer: '" + std::string(text) + "'");
  return HalfInt(n);
}

HalfInt HalfInt::from_double(double x) {
  double t = 2.0 * x;
  if (!std::isfinite(t) || t != std::nearbyint(t))
    throw ValidationError("value is not an integer multiple of 1/2");
  mpz_class twice;
  mpz_set_d(twice.get_mpz_t(), t);
  return from_twice(twice);
}

bool HalfInt::integer_is_odd() const {
  if (!is_integer())
    throw ContractError("parity requested for non-integer half-integer " +
                        str());
  mpz_class half = twice_ / 2;
  return mpz_odd_p(half.get_mpz_t()) != 0;
}

long HalfInt::to_long() const {
  if (!is_integer())
    throw ContractError("integer value requested for " + str());
  mpz_class half = twice_ / 2;
  if (!half.fits_slong_p())
    throw ContractError("half-integer out of long range");
  return half.get_si();
}

std::string HalfInt::str() const {
  if (is_integer()) return mpz_class(twice_ / 2).get_str();
  return twice_.get_str() + "/2";
}

std::ostream& operator<<(std::ostream& os, const HalfInt& h) {
  return os << h.str();
}

int phase(const HalfInt& exponent) {
  return exponent.integer_is_odd() ? -1 : 1;
}

} // namespace wigner
