#include "amat/element.hpp"

namespace amat {

Element add(const NumberField& field, const Element& alpha, const Element& beta) {
  field.check(alpha);
  field.check(beta);
  std::vector<Rat> c(alpha.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = alpha[i] + beta[i];
  return Element(std::move(c));
}

Element sub(const NumberField& field, const Element& alpha, const Element& beta) {
  return add(field, alpha, scale(field, Rat(-1), beta));
}

Element scale(const NumberField& field, const Rat& c, const Element& alpha) {
  field.check(alpha);
  std::vector<Rat> out = alpha.coords();
  for (auto& v : out) v *= c;
  return Element(std::move(out));
}

Element mul(const NumberField& field, const Element& alpha, const Element& beta) {
  field.check(beta);
  return Element(arithmetic_matrix(field, alpha) * beta.coords());
}

Rat trace(const NumberField& field, const Element& alpha) { return arithmetic_matrix(field, alpha).trace(); }

Rat norm(const NumberField& field, const Element& alpha) { return det_bareiss(arithmetic_matrix(field, alpha)); }

UniPoly power_basis_poly(const NumberField& field, const Element& alpha) {
  field.check(alpha);
  return UniPoly(basis_change_matrix(field) * alpha.coords(), "zeta");
}

Rat norm_resultant_oracle(const NumberField& field, const Element& alpha) {
  const UniPoly p = power_basis_poly(field, alpha);
  if (p.is_zero()) fail(Errc::zero_element, "norm oracle needs a nonzero element");
  const UniPoly f = field.form().dehomogenize("zeta");
  Rat lead_power = 1;
  for (long k = 0; k < p.degree(); ++k) lead_power *= Rat(field.form().a(1));
  return resultant(f, p) / lead_power;
}

Element inverse(const NumberField& field, const Element& alpha) {
  field.check(alpha);
  if (alpha.is_zero()) fail(Errc::zero_element, "inverse of zero");
  return Element(amat::inverse(arithmetic_matrix(field, alpha)).column(0));
}

UniPoly char_poly(const NumberField& field, const Element& alpha) {
  // Evaluate det(t I - N) at t = 0..n and interpolate exactly.
  const RatMatrix n_alpha = arithmetic_matrix(field, alpha);
  const std::size_t n = n_alpha.rows();
  std::vector<Rat> values(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    RatMatrix m = n_alpha;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Rat(static_cast<long>(t)) : Rat(0)) - n_alpha(i, j);
    values[t] = det_bareiss(m);
  }
  UniPoly result({}, "x");
  for (std::size_t k = 0; k <= n; ++k) {
    UniPoly basis(std::vector<Rat>{Rat(1)}, "x");
    Rat denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis = basis * UniPoly(std::vector<Rat>{Rat(-static_cast<long>(j)), Rat(1)}, "x");
      denom *= Rat(static_cast<long>(k) - static_cast<long>(j));
    }
    result = result + basis * (values[k] / denom);
  }
  return result;
}

bool is_integral(const Element& alpha) {
  for (const auto& c : alpha.coords())
    if (!is_integer(c)) return false;
  return true;
}

Element evaluate_at(const NumberField& field, const UniPoly& p, const Element& alpha) {
  const auto n = static_cast<std::size_t>(field.degree());
  Element acc = Element::zero(n);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = add(field, mul(field, acc, alpha), scale(field, *it, Element::one(n)));
  return acc;
}

}  // namespace amat
