#include "amat/field.hpp"

#include <algorithm>

namespace amat {

EssentialPair EssentialPair::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(Errc::parse_error, "pair must look like 'a0:a1,...', got '" + std::string(text) + "'");
  return EssentialPair{parse_int(text.substr(0, colon)), BinaryForm::parse(text.substr(colon + 1))};
}

Element Element::from_ints(const std::vector<Int>& coords) {
  return Element(std::vector<Rat>(coords.begin(), coords.end()));
}

Element Element::one(std::size_t n) {
  std::vector<Rat> c(n);
  if (n) c[0] = 1;
  return Element(std::move(c));
}

Element Element::basis(std::size_t n, std::size_t j) {
  std::vector<Rat> c(n);
  c.at(j) = 1;
  return Element(std::move(c));
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rat& q) { return q == 0; });
}

NumberField NumberField::make(const EssentialPair& pair) {
  const Int& a0 = pair.a0;
  const BinaryForm& form = pair.form;
  if (a0 <= 0) fail(Errc::divisibility_violation, "a0 must be positive, got " + a0.get_str());
  const Int a0sq = a0 * a0;
  if (!mpz_divisible_p(form.a(1).get_mpz_t(), a0sq.get_mpz_t()))
    fail(Errc::divisibility_violation, "a0^2 = " + a0sq.get_str() + " does not divide a_1 = " + form.a(1).get_str());
  if (!mpz_divisible_p(form.a(2).get_mpz_t(), a0.get_mpz_t()))
    fail(Errc::divisibility_violation, "a0 = " + a0.get_str() + " does not divide a_2 = " + form.a(2).get_str());
  Int disc = amat::form_discriminant(form);
  if (disc == 0) fail(Errc::zero_discriminant, "form " + form.to_string() + " has zero discriminant");
  switch (irreducibility_certificate(form)) {
    case Irreducibility::reducible:
      fail(Errc::reducible_form, "form " + form.to_string() + " is reducible over Q");
    case Irreducibility::unknown:
      fail(Errc::unsupported_degree, "could not certify irreducibility of " + form.to_string());
    case Irreducibility::irreducible:
      break;
  }
  if (!mpz_divisible_p(disc.get_mpz_t(), a0sq.get_mpz_t()))
    fail(Errc::divisibility_violation, "a0^2 does not divide disc(B) = " + disc.get_str());
  Int field_disc = exact_div(disc, a0sq);
  return NumberField(pair, std::move(disc), std::move(field_disc));
}

NumberField make_field(const EssentialPair& pair) { return NumberField::make(pair); }

void NumberField::check(const Element& e) const {
  if (e.size() != static_cast<std::size_t>(degree()))
    fail(Errc::field_mismatch, "element has " + std::to_string(e.size()) + " coordinates, field degree is " +
                                   std::to_string(degree()));
}

RatMatrix arithmetic_matrix(const NumberField& field, const Element& alpha) {
  field.check(alpha);
  const std::vector<Rat> a(field.form().coeffs().begin(), field.form().coeffs().end());
  return explicit_arithmetic_matrix<Rat>(a, Rat(field.a0()), alpha.coords());
}

std::vector<std::string> default_coord_names(int n) {
  static const std::vector<std::string> letters{"u", "x", "y", "z", "w"};
  if (n <= 5) return {letters.begin(), letters.begin() + n};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<std::string> default_coeff_names(int n) {
  static const std::vector<std::string> letters{"a", "b", "c", "d", "e", "f"};
  if (n <= 5) return {letters.begin(), letters.begin() + n + 1};
  std::vector<std::string> out;
  for (int i = 1; i <= n + 1; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

PolyMatrix symbolic_arithmetic_matrix(const NumberField& field, const std::vector<std::string>& coord_vars) {
  const int n = field.degree();
  if (n > 16) fail(Errc::unsupported_degree, "symbolic mode supports degree <= 16");
  if (coord_vars.size() != static_cast<std::size_t>(n)) fail(Errc::field_mismatch, "wrong number of coordinate names");
  std::vector<MultiPoly> a, x;
  for (const auto& c : field.form().coeffs()) a.emplace_back(Rat(c));
  for (const auto& v : coord_vars) x.push_back(MultiPoly::variable(v));
  return explicit_arithmetic_matrix<MultiPoly>(a, Rat(field.a0()), x);
}

PolyMatrix generic_arithmetic_matrix(int n, const Rat& a0) {
  if (n < 2 || n > 16) fail(Errc::unsupported_degree, "symbolic mode supports degrees 2..16");
  std::vector<MultiPoly> a, x;
  for (const auto& v : default_coeff_names(n)) a.push_back(MultiPoly::variable(v));
  for (const auto& v : default_coord_names(n)) x.push_back(MultiPoly::variable(v));
  return explicit_arithmetic_matrix<MultiPoly>(a, a0, x);
}

RatMatrix basis_change_matrix(const NumberField& field) {
  const auto n = static_cast<std::size_t>(field.degree());
  RatMatrix m(n, n);
  m(0, 0) = 1;
  for (std::size_t r = 2; r <= n; ++r)
    for (std::size_t j = r; j <= n; ++j) m(r - 1, j - 1) = field.form().a(static_cast<int>(j - r + 1));
  if (n > 1)
    for (std::size_t r = 0; r < n; ++r) m(r, 1) /= Rat(field.a0());
  return m;
}

std::vector<UniPoly> integral_basis_description(const NumberField& field) {
  const RatMatrix m = basis_change_matrix(field);
  std::vector<UniPoly> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.emplace_back(m.column(j), "zeta");
  return out;
}

}  // namespace amat
