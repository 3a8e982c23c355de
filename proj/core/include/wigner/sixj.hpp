#pragma once

#include "wigner/half_int.hpp"
#include "wigner/signed_radical.hpp"
#include "wigner/threej.hpp"

namespace wigner {

/// Arguments of a 6j symbol {a b c; d e f}. Coupled triads are
/// {abc}, {cde}, {aef}, {bdf}.
struct SixJArgs {
  HalfInt a, b, c, d, e, f;
};

/// Inspects the four triads; names the first failing one ("abc", "cde",
/// "aef" or "bdf").
TriangleCheck check_triads(const SixJArgs& args);

/// Throws DomainError naming the failing triad; no-op when valid.
void validate(const SixJArgs& args);

/// Exact 6j symbol from the single-sum factorial series.
SignedRadical sixj(const SixJArgs& args);

/// {c b a; f a+n b+m} evaluated through the shifted-variable form whose
/// per-term factors have perfect-square denominators. Exactly equals
/// sixj() on the corresponding arguments; the asymptotic normalizers
/// (2a+n+f+1)(2b+m+f+1) are divided back out so the plain symbol is
/// returned.
SignedRadical sixj_phi_form(const HalfInt& a, const HalfInt& b,
                            const HalfInt& c, const HalfInt& f,
                            const HalfInt& m, const HalfInt& n);

} // namespace wigner
