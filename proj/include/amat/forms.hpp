#ifndef AMAT_FORMS_HPP
#define AMAT_FORMS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amat/polyring.hpp"
#include "amat/scalar.hpp"

namespace amat {

/// Integer binary form a_1 x^n + a_2 x^{n-1} y + ... + a_{n+1} y^n with
/// n >= 2 and a_1 a_{n+1} != 0.
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<Int> coeffs);
  static BinaryForm parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// 1-based access matching a_1..a_{n+1}.
  const Int& a(int k) const { return coeffs_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }

  /// B(x, 1) as a polynomial, coefficients low to high.
  UniPoly dehomogenize(std::string var = "x") const;
  BinaryForm negated() const;
  BinaryForm reversed() const;
  std::string to_string() const { return join(coeffs_); }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
  friend auto operator<=>(const BinaryForm& lhs, const BinaryForm& rhs) {
    return lhs.coeffs_ <=> rhs.coeffs_;
  }

 private:
  std::vector<Int> coeffs_;
};

Int evaluate(const BinaryForm& form, const Int& x, const Int& y);

/// The (2n-1)x(2n-1) matrix stacking n-1 shifted copies of (a_1..a_{n+1})
/// over n shifted copies of (n a_1, (n-1) a_2, ..., a_n).
IntMatrix janson_sylvester(const BinaryForm& form);

/// D_B = (-1)^s det(S) / a_1 with s = 1 iff n = 2, 3 (mod 4).
Int form_discriminant(const BinaryForm& form);

/// Same value computed in 128-bit arithmetic; nullopt on overflow.
std::optional<__int128> form_discriminant_i128(std::span<const std::int64_t> coeffs);

/// Exact irreducibility over Q for degrees 2..5; unsupported_degree otherwise.
bool is_irreducible(const BinaryForm& form);

enum class Irreducibility { irreducible, reducible, unknown };

/// Exact for n <= 5. For larger n: reducible when a rational root exists,
/// irreducible when some small prime certifies it, otherwise unknown.
Irreducibility irreducibility_certificate(const BinaryForm& form);

/// Rabin's test for f = B(x,1) modulo a prime p not dividing a_1.
bool irreducible_mod_p(const BinaryForm& form, std::uint32_t p);

/// All positive divisors of |z| (z != 0), ascending.
std::vector<Int> positive_divisors(const Int& z);

}  // namespace amat

#endif  // AMAT_FORMS_HPP
