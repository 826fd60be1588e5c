#ifndef AMAT_FIELD_HPP
#define AMAT_FIELD_HPP

#include <span>
#include <string>
#include <vector>

#include "amat/forms.hpp"
#include "amat/polyring.hpp"

namespace amat {

/// [a0, B]: a0 > 0, a0^2 | a_1, a0 | a_2, B irreducible, a0^2 | disc(B).
struct EssentialPair {
  Int a0;
  BinaryForm form;

  /// "a0:a1,a2,...,a{n+1}"
  static EssentialPair parse(std::string_view text);
  std::string to_string() const { return a0.get_str() + ":" + form.to_string(); }

  friend bool operator==(const EssentialPair&, const EssentialPair&) = default;
};

/// Coordinates over the basis w_0 = 1, w_1 = (a_1/a0) z, w_j = sum_{k<=j} a_k z^{j+1-k}.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  static Element from_ints(const std::vector<Int>& coords);
  static Element parse(std::string_view text) { return Element(parse_rat_list(text)); }
  static Element one(std::size_t n);
  static Element zero(std::size_t n) { return Element(std::vector<Rat>(n)); }
  static Element basis(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<Rat>& coords() const noexcept { return coords_; }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;
  std::string to_string() const { return join(coords_); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Rat> coords_;
};

/// Validated field context. Immutable; the discriminant is disc(B)/a0^2.
class NumberField {
 public:
  static NumberField make(const EssentialPair& pair);

  const EssentialPair& pair() const noexcept { return pair_; }
  const BinaryForm& form() const noexcept { return pair_.form; }
  const Int& a0() const noexcept { return pair_.a0; }
  int degree() const noexcept { return pair_.form.degree(); }
  const Int& discriminant() const noexcept { return discriminant_; }
  const Int& form_discriminant() const noexcept { return form_discriminant_; }

  /// Throws field_mismatch unless e has exactly degree() coordinates.
  void check(const Element& e) const;

 private:
  NumberField(EssentialPair pair, Int form_disc, Int disc)
      : pair_(std::move(pair)), form_discriminant_(std::move(form_disc)), discriminant_(std::move(disc)) {}

  EssentialPair pair_;
  Int form_discriminant_;
  Int discriminant_;
};

NumberField make_field(const EssentialPair& pair);

// ---------------------------------------------------------------------------
// Arithmetic matrix entry formulas. T is Rat (numeric coordinates) or
// MultiPoly (symbolic); `a` holds a_1..a_{n+1}, `x` holds x_0..x_{n-1}.
// Indices below are 1-based as in the classical entry formulas.
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
struct Entries {
  std::span<const T> a;
  std::span<const T> x;
  const T& A(std::size_t k) const { return a[k - 1]; }
  const T& X(std::size_t k) const { return x[k]; }
  std::size_t n() const { return x.size(); }
};

}  // namespace detail

/// Matrix of multiplication for the basis r_0 = 1, r_j = sum_{k<=j} a_k z^{j+1-k}.
template <class T>
Matrix<T> standard_arithmetic_matrix(std::span<const T> a, std::span<const T> x) {
  const detail::Entries<T> e{a, x};
  const std::size_t n = e.n();
  if (a.size() != n + 1) fail(Errc::field_mismatch, "coefficient/coordinate count mismatch");
  Matrix<T> m(n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      T v{};
      if (j == 1) {
        v = e.X(i - 1);
      } else if (i == 1) {
        for (std::size_t k = 1; k + 1 <= j; ++k) v -= e.A(n + 1) * e.A(k) * e.X(k + n - j);
      } else if (i > j) {
        for (std::size_t k = 1; k + 1 <= j; ++k) v += e.A(k) * e.X(k + i - j - 1);
      } else {
        if (i == j) v = e.X(0);
        const std::size_t upper = std::min(n - i + j, n + 1);
        for (std::size_t k = j; k <= upper; ++k) v -= e.A(k) * e.X(k + i - j - 1);
      }
      m(i - 1, j - 1) = std::move(v);
    }
  }
  return m;
}

/// Generalized entries for an essential pair with a0 >= 1, written out
/// row by row. Reduces to standard_arithmetic_matrix when a0 = 1.
template <class T>
Matrix<T> explicit_arithmetic_matrix(std::span<const T> a, const Rat& a0, std::span<const T> x) {
  const detail::Entries<T> e{a, x};
  const std::size_t n = e.n();
  if (a.size() != n + 1) fail(Errc::field_mismatch, "coefficient/coordinate count mismatch");
  const Rat inv = Rat(1) / a0;
  const Rat inv2 = inv * inv;
  Matrix<T> m(n, n);
  auto at = [&](std::size_t i, std::size_t j) -> T& { return m(i - 1, j - 1); };
  for (std::size_t i = 1; i <= n; ++i) at(i, 1) = e.X(i - 1);

  if (n == 2) {
    at(1, 2) = -(e.A(1) * e.A(3) * e.X(1)) * inv2;
    at(2, 2) = e.X(0) - e.A(2) * e.X(1) * inv;
    return m;
  }

  // Row 1.
  at(1, 2) = -(e.A(1) * e.A(n + 1) * e.X(n - 1)) * inv;
  for (std::size_t j = 3; j + 1 <= n; ++j) {
    T v{};
    for (std::size_t k = 1; k + 1 <= j; ++k) v -= e.A(n + 1) * e.A(k) * e.X(k + n - j);
    at(1, j) = std::move(v);
  }
  {
    T v = -(e.A(1) * e.A(n + 1) * e.X(1)) * inv;
    for (std::size_t k = 2; k + 1 <= n; ++k) v -= e.A(n + 1) * e.A(k) * e.X(k);
    at(1, n) = std::move(v);
  }

  // Row 2.
  {
    T v = e.X(0) - e.A(2) * e.X(1) * inv;
    for (std::size_t k = 3; k <= n; ++k) v -= e.A(k) * e.X(k - 1);
    at(2, 2) = std::move(v);
  }
  for (std::size_t j = 3; j <= n; ++j) {
    T v = -(e.A(j) * e.X(1));
    T tail{};
    for (std::size_t k = j + 1; k <= n + 1; ++k) tail += e.A(k) * e.X(k + 1 - j);
    v -= tail * a0;
    at(2, j) = std::move(v);
  }

  // Row 3, column 2.
  at(3, 2) = e.A(1) * e.X(1) * inv2;

  // Rows i >= 4 below the diagonal.
  for (std::size_t i = 4; i <= n; ++i) {
    at(i, 2) = e.A(1) * e.X(i - 2) * inv;
    for (std::size_t j = 3; j + 2 <= i; ++j) {
      T v{};
      for (std::size_t k = 1; k + 1 <= j; ++k) v += e.A(k) * e.X(k + i - j - 1);
      at(i, j) = std::move(v);
    }
    T v = e.A(1) * e.X(1) * inv;
    for (std::size_t k = 2; k + 2 <= i; ++k) v += e.A(k) * e.X(k);
    at(i, i - 1) = std::move(v);
  }

  // Rows i >= 3 on and above the diagonal.
  for (std::size_t i = 3; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      T v{};
      if (i == j) v = e.X(0);
      const std::size_t upper = std::min(n - i + j, n + 1);
      for (std::size_t k = j; k <= upper; ++k) v -= e.A(k) * e.X(k + i - j - 1);
      at(i, j) = std::move(v);
    }
  return m;
}

/// Same matrix obtained as Z^{-1} T Z, where T is the standard matrix with
/// x_1 replaced by x_1/a0 and Z = diag(1, 1/a0, 1, ..., 1).
template <class T>
Matrix<T> conjugated_arithmetic_matrix(std::span<const T> a, const Rat& a0, std::span<const T> x) {
  const Rat inv = Rat(1) / a0;
  std::vector<T> scaled(x.begin(), x.end());
  if (scaled.size() > 1) scaled[1] = scaled[1] * inv;
  Matrix<T> m = standard_arithmetic_matrix<T>(a, scaled);
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j)
    if (j != 1) m(1, j) = m(1, j) * a0;
  for (std::size_t i = 0; i < n; ++i)
    if (i != 1) m(i, 1) = m(i, 1) * inv;
  return m;
}

/// Numeric arithmetic matrix N^(alpha) of an element.
RatMatrix arithmetic_matrix(const NumberField& field, const Element& alpha);

/// Symbolic arithmetic matrix with the given coordinate variable names over
/// the field's numeric form coefficients.
PolyMatrix symbolic_arithmetic_matrix(const NumberField& field, const std::vector<std::string>& coord_vars);

/// Matrix over symbolic coefficients and coordinates (default names) for
/// the given a0; the field-free analogue of symbolic_arithmetic_matrix.
PolyMatrix generic_arithmetic_matrix(int n, const Rat& a0 = Rat(1));

/// Default coordinate names: u,x,y,z,w for n <= 5, else x0..x{n-1}.
std::vector<std::string> default_coord_names(int n);
/// Default coefficient names: a,b,c,d,e,f for n <= 5, else a1..a{n+1}.
std::vector<std::string> default_coeff_names(int n);

/// Upper triangular A.Z: column j holds the power-basis coefficients of w_j.
RatMatrix basis_change_matrix(const NumberField& field);

/// w_0..w_{n-1} as polynomials in z.
std::vector<UniPoly> integral_basis_description(const NumberField& field);

}  // namespace amat

#endif  // AMAT_FIELD_HPP
