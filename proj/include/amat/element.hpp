#ifndef AMAT_ELEMENT_HPP
#define AMAT_ELEMENT_HPP

#include "amat/field.hpp"

namespace amat {

Element add(const NumberField& field, const Element& alpha, const Element& beta);
Element sub(const NumberField& field, const Element& alpha, const Element& beta);
Element scale(const NumberField& field, const Rat& c, const Element& alpha);

/// Coordinates of alpha*beta: N^(alpha) applied to beta's coordinate column.
Element mul(const NumberField& field, const Element& alpha, const Element& beta);

Rat trace(const NumberField& field, const Element& alpha);
Rat norm(const NumberField& field, const Element& alpha);

/// Independent norm: write alpha = P(z) and return Res(B(x,1), P) / a_1^{deg P}.
Rat norm_resultant_oracle(const NumberField& field, const Element& alpha);

/// First column of (N^(alpha))^{-1}. Throws zero_element for alpha = 0.
Element inverse(const NumberField& field, const Element& alpha);

/// det(x I - N^(alpha)), monic of degree n.
UniPoly char_poly(const NumberField& field, const Element& alpha);

bool is_integral(const Element& alpha);

/// The power-basis polynomial P with alpha = P(z).
UniPoly power_basis_poly(const NumberField& field, const Element& alpha);

/// p(alpha) evaluated by Horner's rule over field multiplication.
Element evaluate_at(const NumberField& field, const UniPoly& p, const Element& alpha);

}  // namespace amat

#endif  // AMAT_ELEMENT_HPP
