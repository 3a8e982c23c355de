#pragma once

#include "wigner/half_int.hpp"

namespace wigner {

/// Arguments of a small rotation-matrix element d^j_{m_row m_col}(theta).
struct DMatrixArgs {
  HalfInt j, m_row, m_col;
  double theta = 0.0; // radians
};

void validate(const DMatrixArgs& args);

/// d^j_{m'm}(theta) from the factorial series in cos(theta/2) and
/// sin(theta/2). The square-root prefactor is taken exactly and converted
/// once; series terms keep exact integer denominators.
double wigner_d(const DMatrixArgs& args);
double wigner_d(const HalfInt& j, const HalfInt& m_row, const HalfInt& m_col,
                double theta);

/// d_{beta,delta}^j(pi - theta) - (-1)^{j-beta} d_{delta,-beta}^j(theta);
/// identically zero in exact arithmetic, ~1e-13 in double.
double d_reflection_identity_residual(const HalfInt& j, const HalfInt& beta,
                                      const HalfInt& delta, double theta);

} // namespace wigner
