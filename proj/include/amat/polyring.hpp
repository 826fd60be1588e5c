#ifndef AMAT_POLYRING_HPP
#define AMAT_POLYRING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amat/errors.hpp"
#include "amat/scalar.hpp"

namespace amat {

// ---------------------------------------------------------------------------
// Univariate polynomials over Q
// ---------------------------------------------------------------------------

/// Dense univariate polynomial, coefficients stored low to high. The highest
/// stored coefficient is nonzero unless the polynomial is zero (empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs, std::string var = "x");
  static UniPoly from_ints(const std::vector<Int>& coeffs, std::string var = "x");
  static UniPoly monomial(const Rat& c, std::size_t power, std::string var = "x");

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  const std::string& var() const noexcept { return var_; }
  Rat coeff(std::size_t power) const;
  Rat leading() const;

  Rat eval(const Rat& at) const;
  UniPoly derivative() const;
  UniPoly operator-() const;

  friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
  friend UniPoly operator*(const UniPoly& p, const Rat& c);
  friend bool operator==(const UniPoly& p, const UniPoly& q) { return p.coeffs_ == q.coeffs_; }

  /// "c0,c1,...,cd"; the zero polynomial prints as "0".
  std::string to_string() const;
  static UniPoly parse(std::string_view text, std::string var = "x");

 private:
  void trim();
  std::vector<Rat> coeffs_;
  std::string var_ = "x";
};

/// Plain O(deg p * deg q) convolution.
UniPoly poly_mul_schoolbook(const UniPoly& p, const UniPoly& q);

/// Quotient and remainder over Q; `divisor` must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor);

// ---------------------------------------------------------------------------
// Multivariate polynomials over Q
// ---------------------------------------------------------------------------

using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order: total degree first, then lexicographic on
/// the exponent tuple.
struct GradedLexLess {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GradedLexLess>;

  MultiPoly() = default;
  explicit MultiPoly(const Rat& c);
  explicit MultiPoly(long c) : MultiPoly(Rat(c)) {}
  static MultiPoly variable(const std::string& name);
  static MultiPoly constant(const Rat& c) { return MultiPoly(c); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; the polynomial must be constant.
  Rat constant_value() const;
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool has_var(const std::string& name) const;
  int total_degree() const;
  int degree_in(const std::string& name) const;
  /// True when every term has total degree `d` over the listed variables.
  bool is_homogeneous_in(const std::vector<std::string>& names, int d) const;
  bool has_integer_coefficients() const;

  /// Coefficients c_0..c_d of p = sum c_i var^i; the c_i do not involve var.
  std::vector<MultiPoly> collect(const std::string& var) const;
  MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;
  MultiPoly derivative(const std::string& var) const;
  Rat eval(const std::map<std::string, Rat>& point) const;
  MultiPoly pow(unsigned e) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rat& c);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rat& c) { return lhs *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly rhs) { return rhs *= c; }
  friend MultiPoly operator/(MultiPoly lhs, const Rat& c);
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

  /// Terms in descending graded-lex order, e.g. "3*b^2*x^2 - 8*a*c*x^2 + u".
  std::string to_string() const;
  /// Inverse of to_string; also accepts parentheses, e.g. "-e*(a*x + b*y)".
  static MultiPoly parse(std::string_view text);

 private:
  /// Re-express over `target` variables, which must contain ours.
  MultiPoly over(const std::vector<std::string>& target) const;
  static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b);
  void drop_unused_vars();

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

std::vector<MultiPoly> collect_coeffs(const MultiPoly& p, const std::string& var);

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) fail(Errc::internal_error, "matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    if (!is_square()) fail(Errc::not_square, "trace of non-square matrix");
    T acc{};
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(Errc::field_mismatch, "matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) fail(Errc::field_mismatch, "matrix-vector dimension mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      fail(Errc::field_mismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;
using PolyMatrix = Matrix<MultiPoly>;

/// Determinant by Laplace expansion along rows, memoised over column subsets
/// (2^n * n ring multiplications). Works over any commutative ring T.
template <class T>
T det_cofactor(const Matrix<T>& m) {
  if (!m.is_square()) fail(Errc::not_square, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > 24) fail(Errc::unsupported_degree, "cofactor expansion limited to n <= 24");
  // minors[mask]: signed sum over placements of the first popcount(mask)
  // rows into the columns of mask.
  std::vector<T> minors(std::size_t{1} << n);
  std::vector<bool> live(minors.size(), false);
  minors[0] = T(1);
  live[0] = true;
  for (std::size_t mask = 0; mask < minors.size(); ++mask) {
    if (!live[mask]) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const T& entry = m(row, col);
      if (entry == T(0)) continue;
      // Columns already used to the right of `col` each contribute a transposition.
      const auto higher = static_cast<unsigned>(__builtin_popcountll(mask >> (col + 1)));
      T term = minors[mask] * entry;
      const std::size_t next = mask | (std::size_t{1} << col);
      if (higher % 2 == 0)
        minors[next] += term;
      else
        minors[next] -= term;
      live[next] = true;
    }
  }
  return minors.back();
}

/// Fraction-free (Bareiss) elimination after clearing row denominators.
Rat det_bareiss(const RatMatrix& m);
Int det_bareiss(const IntMatrix& m);

/// Exact inverse by Gauss-Jordan elimination; throws singular_matrix.
RatMatrix inverse(const RatMatrix& m);

/// Solves m * x = rhs exactly for square invertible m.
std::vector<Rat> solve(const RatMatrix& m, const std::vector<Rat>& rhs);

RatMatrix to_rat(const IntMatrix& m);
/// Throws non_integer_entries if any entry has a denominator.
IntMatrix to_int(const RatMatrix& m);

/// Standard Sylvester matrix of size (deg p + deg q)^2: deg q shifted rows of
/// p's coefficients (high to low) followed by deg p shifted rows of q's.
RatMatrix sylvester_matrix(const UniPoly& p, const UniPoly& q);
Rat resultant(const UniPoly& p, const UniPoly& q);

/// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lead(f) for deg f = d >= 1.
Rat poly_discriminant(const UniPoly& f);

}  // namespace amat

#endif  // AMAT_POLYRING_HPP
