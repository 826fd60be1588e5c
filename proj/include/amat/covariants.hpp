#ifndef AMAT_COVARIANTS_HPP
#define AMAT_COVARIANTS_HPP

#include <array>
#include <cstdint>

#include "amat/field.hpp"

namespace amat {

// Ternary forms are MultiPoly values homogeneous in (x, y, z). Coefficients
// of the underlying binary form may be numbers or the symbols a..e, so every
// routine below has a generic (symbolic) and a numeric entry point.

using QuarticCoeffs = std::array<MultiPoly, 5>;
using CubicCoeffs = std::array<MultiPoly, 4>;

QuarticCoeffs generic_quartic();  // a, b, c, d, e
CubicCoeffs generic_cubic();      // a, b, c, d
QuarticCoeffs quartic_coeffs(const BinaryForm& v);
CubicCoeffs cubic_coeffs(const BinaryForm& c);

struct QuarticInvariants {
  Int I;
  Int J;
};

/// I = 12ae - 3bd + c^2, J = 72ace + 9bcd - 27ad^2 - 27b^2e - 2c^3.
QuarticInvariants quartic_invariants(const BinaryForm& v);
std::pair<MultiPoly, MultiPoly> quartic_invariants(const QuarticCoeffs& v);

struct QuarticCovariants {
  MultiPoly G;  // degree 2 in x, y, z
  MultiPoly H;  // degree 3
  MultiPoly F;  // degree 4
  /// 256 det N as a polynomial in t after u = (t + bx + 2cy + 3dz)/4, low to high.
  std::vector<MultiPoly> t_coeffs;
};

/// Expands 256 det N^(u + x w1 + y w2 + z w3) in t and reads off G, H, F
/// from t^4 - 2G t^2 - 8H t + F.
QuarticCovariants quartic_GHF(const QuarticCoeffs& v);
QuarticCovariants quartic_GHF(const BinaryForm& v);

/// g4^3 - 48 g4 I v^2 - 64 J v^3 = 27 g6^2 with g4 = G(x^2,x,1), g6 = H(x^2,x,1), v = V(x,1).
bool quartic_syzygy_check(const QuarticCoeffs& v);
bool quartic_syzygy_check(const BinaryForm& v);

/// G(x^2, xy, y^2) = -1/3 det Hess(V).
bool quartic_hessian_check(const QuarticCoeffs& v);

/// t^4 - 2G t^2 - 8H t + F with t = 4u - bx - 2cy - 3dz, for a0 = 1 coordinates.
Rat quartic_norm_form_value(const BinaryForm& v, const Element& alpha);

/// Checks 256 det N = t^4 - 2G t^2 - 8H t + F symbolically, then again at
/// `samples` pseudo-random integer points where det N is taken numerically.
bool quartic_norm_equation_check(const QuarticCoeffs& v, int samples = 20, std::uint64_t seed = 1);
bool quartic_norm_equation_check(const BinaryForm& v, int samples = 20, std::uint64_t seed = 1);

struct CubicCovariants {
  MultiPoly Q;  // Hessian covariant, quadratic in x, y
  MultiPoly F;  // Jacobian of C and Q, cubic in x, y
  MultiPoly disc;
};

/// Q = (b^2-3ac) x^2 + (bc-9ad) xy + (c^2-3bd) y^2 and F = C_x Q_y - C_y Q_x.
CubicCovariants cubic_covariants(const CubicCoeffs& c);
CubicCovariants cubic_covariants(const BinaryForm& c);

/// Coefficient lists (x-power high to low) of the numeric covariants.
std::vector<Int> covariant_coefficients(const MultiPoly& form, int degree);

/// F^2 + 27 disc C^2 = 4 Q^3.
bool cubic_syzygy_check(const CubicCoeffs& c);
bool cubic_syzygy_check(const BinaryForm& c);

/// t^3 - 3t Q(x,y) + F(x,y) with t = 3u - bx - 2cy, for a0 = 1 coordinates.
Rat cubic_norm_form_value(const BinaryForm& c, const Element& alpha);

/// Checks 27 det N = t^3 - 3t Q + F symbolically.
bool cubic_norm_equation_check(const CubicCoeffs& c);

/// All elements with coordinates in [-bound, bound]^n and norm exactly 1.
std::vector<Element> norm_one_elements(const NumberField& field, int bound);

}  // namespace amat

#endif  // AMAT_COVARIANTS_HPP
