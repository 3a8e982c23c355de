#pragma once

#include <optional>
#include <string>

#include "wigner/half_int.hpp"
#include "wigner/rational.hpp"
#include "wigner/signed_radical.hpp"

namespace wigner {

/// Result of a triangle/triad inspection. ok <=> no failing triple.
struct TriangleCheck {
  bool ok = true;
  std::optional<std::string> failing_triple;
};

/// |a-b| <= c <= a+b with integer sum (and nonnegative entries).
bool triangle_ok(const HalfInt& a, const HalfInt& b, const HalfInt& c);

/// Arguments of a 3j symbol in conventional row order (j1 j2 j3; m1 m2 m3).
struct ThreeJArgs {
  HalfInt j1, j2, j3;
  HalfInt m1, m2, m3;
};

/// Throws DomainError naming the violated selection rule; no-op when valid.
void validate(const ThreeJArgs& args);
/// True when all 3j selection rules hold.
bool selection_rules_ok(const ThreeJArgs& args);

/// Triangle coefficient (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!, exact.
Rational delta_coeff(const HalfInt& a, const HalfInt& b, const HalfInt& c);

/// Exact 3j symbol from the single-sum factorial series. The z-sum is
/// accumulated as one exact rational, then folded with the squared
/// prefactor into a single radical, so two algebraically equal routes
/// produce identical (sign, radicand) pairs.
SignedRadical threej(const ThreeJArgs& args);

/// Sweep-driver variant: returns exact zero for any selection-rule
/// violation instead of throwing. Caller bugs in half-integer parity
/// still surface as zeros here by design; use threej() to distinguish.
SignedRadical threej_lenient(const ThreeJArgs& args);

/// Number of terms in the z-sum for valid arguments.
long threej_term_count(const ThreeJArgs& args);

/// The same symbol evaluated through the eliminated form used when
/// a = c - delta and alpha = -beta - gamma: prefactor carries the
/// z-independent radical (the first Omega factor and the numerators of
/// the other two, whose denominators are perfect squares), leaving an
/// exact rational z-sum. Agrees with threej() exactly, not approximately.
SignedRadical threej_delta_form(const HalfInt& b, const HalfInt& beta,
                                const HalfInt& delta, const HalfInt& c,
                                const HalfInt& gamma);

} // namespace wigner
